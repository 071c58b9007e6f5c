"""
Realization of the coloured permutations by words over {1..m} x B.

A coloured permutation is sent to the sum of the words that standardize to
it; forgetting the order of letters gives commutative series, and these
only depend on the receding composition.  Series are truncated to a finite
alphabet of size m, which is exact in degree n as soon as m >= n.

>>> cs = ColourSet.plain("ab")
>>> std_B(ColouredWord.of((1, "a"), (2, "a"), (1, "a"), (2, "b"), (3, "a"), (1, "b"), (2, "a")), cs)
ColouredPermutation(colours=('a', 'a', 'b', 'a', 'a', 'b', 'a'), perm=(1, 4, 2, 6, 7, 3, 5))
"""

__all__ = [
    "ColouredWord", "NCSeries", "CSeries", "LVectorComposition", "std_B",
    "words", "phi", "abelianize", "weight", "fundamental_F", "monomial_M",
    "seqr", "lvector_compositions", "expand_F_in_M", "weight_composition",
]

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Mapping

from .coloured_core import BComposition, ColourSet, ColouredPermutation, refines_B
from .fqsym_engine import AlgebraElement
from .perm_core import compositions, standardize

Letter = tuple[int, str]


@dataclass(frozen=True)
class ColouredWord:
    """A word whose letters are pairs (a, b): a in {1..m}, b a colour."""
    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(a), b) for a, b in self.letters))

    @classmethod
    def of(cls, *letters) -> "ColouredWord":
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "ColouredWord") -> "ColouredWord":
        return ColouredWord(self.letters + other.letters)

    def to_json(self):
        return [{"letter": a, "colour": b} for a, b in self.letters]

    def __str__(self):
        return " ".join(f"{a}{b}" for a, b in self.letters)


def _letter_key(cs: ColourSet):
    return lambda x: (x[0], cs.index(x[1]))


def std_B(w: ColouredWord, cs: ColourSet) -> ColouredPermutation:
    """Standardize under the order on letters (a first, then the colour order of cs)."""
    sigma = standardize(w.letters, key=_letter_key(cs))
    return ColouredPermutation.from_positions(sigma, [b for _, b in w.letters])


@dataclass(eq=False)
class NCSeries:
    """A finite combination of words (a truncated non-commutative series)."""
    coeffs: dict = field(default_factory=dict)
    alphabet_size: int = 0

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return NCSeries(out, self.alphabet_size)

    def __rmul__(self, scalar: int):
        return NCSeries({k: scalar * v for k, v in self.coeffs.items()}, self.alphabet_size)

    def __mul__(self, other):
        """Concatenation product."""
        if isinstance(other, int):
            return other * self
        out = defaultdict(int)
        for u, x in self.coeffs.items():
            for w, y in other.coeffs.items():
                out[u + w] += x * y
        return NCSeries(dict(out), self.alphabet_size)

    def __eq__(self, other):
        return isinstance(other, NCSeries) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)


# a weight is a sorted tuple of (letter, multiplicity) pairs
def weight(w: ColouredWord) -> tuple:
    return tuple(sorted(Counter(w.letters).items()))


@dataclass(eq=False)
class CSeries:
    """A finite combination of weights (a truncated commutative series)."""
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return CSeries(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return CSeries({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = defaultdict(int)
        for u, x in self.coeffs.items():
            for w, y in other.coeffs.items():
                merged = Counter(dict(u))
                merged.update(dict(w))
                out[tuple(sorted(merged.items()))] += x * y
        return CSeries(dict(out))

    def __eq__(self, other):
        return isinstance(other, CSeries) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self) -> list:
        return [
            {"weight": [{"letter": a, "colour": b, "mult": k} for (a, b), k in wt], "coeff": v}
            for wt, v in sorted(self.coeffs.items())
        ]


@dataclass(frozen=True)
class LVectorComposition:
    """A matrix with one row per colour and no zero column."""
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len({len(r) for r in rows}) > 1:
            raise ValueError("rows of different lengths")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("entries must be non-negative")
        if rows and any(not any(r[j] for r in rows) for j in range(len(rows[0]))):
            raise ValueError("every column needs a positive entry")

    @property
    def columns(self) -> list[tuple[int, ...]]:
        if not self.matrix:
            return []
        return [tuple(r[j] for r in self.matrix) for j in range(len(self.matrix[0]))]

    @property
    def size(self) -> int:
        return sum(map(sum, self.matrix))

    def to_json(self):
        return [list(r) for r in self.matrix]


@lru_cache(maxsize=None)
def _alphabet(m: int, cs: ColourSet) -> tuple[Letter, ...]:
    return tuple((a, b) for a in range(1, m + 1) for b in cs.elements)


@lru_cache(maxsize=None)
def _fibers(n: int, m: int, cs: ColourSet) -> dict:
    out = defaultdict(list)
    for letters in product(_alphabet(m, cs), repeat=n):
        w = ColouredWord(letters)
        out[std_B(w, cs)].append(w)
    return dict(out)


def words(alpha: ColouredPermutation, m: int, cs: ColourSet) -> list[ColouredWord]:
    """The words of length n over {1..m} x B standardizing to alpha."""
    return list(_fibers(alpha.n, m, cs).get(alpha, []))


def phi(x, m: int, cs: ColourSet = None) -> NCSeries:
    """
    Sum of the words standardizing to alpha, extended linearly to algebra
    elements.
    """
    if isinstance(x, ColouredPermutation):
        if cs is None:
            raise ValueError("a colour set is needed")
        return NCSeries({w: 1 for w in words(x, m, cs)}, m)
    out = NCSeries({}, m)
    for alpha, v in x.terms.items():
        out = out + v * phi(alpha, m, x.colour_set)
    return out


def abelianize(x: NCSeries) -> CSeries:
    out = defaultdict(int)
    for w, v in x.coeffs.items():
        out[weight(w)] += v
    return CSeries(dict(out))


def weight_composition(w: ColouredWord, cs: ColourSet) -> BComposition:
    """
    The B-composition read off the weight: letters in increasing order,
    grouped by equal letter.
    """
    counts = Counter(w.letters)
    return BComposition(tuple((counts[x], x[1]) for x in sorted(counts, key=_letter_key(cs))))


def fundamental_F(c: BComposition, m: int, cs: ColourSet) -> CSeries:
    """
    Sum over non-decreasing a_1 <= ... <= a_n in {1..m}, colours fixed by c,
    strict at the end of block i when its colour is not below the next one.

    >>> cs = ColourSet.plain("ab")
    >>> len(fundamental_F(BComposition.of((2, "a")), 3, cs).coeffs)
    6
    """
    n = c.size
    colours = c.colour_word()
    strict = set()
    t = 0
    for i in range(len(c) - 1):
        t += c.pairs[i][0]
        if cs.index(c.pairs[i][1]) >= cs.index(c.pairs[i + 1][1]):
            strict.add(t)
    out = defaultdict(int)
    for seq in combinations_with_replacement(range(1, m + 1), n):
        if any(seq[t - 1] == seq[t] for t in strict):
            continue
        out[tuple(sorted(Counter(zip(seq, colours)).items()))] += 1
    return CSeries(dict(out))


def monomial_M(I: LVectorComposition, m: int, cs: ColourSet) -> CSeries:
    if len(I.matrix) != len(cs):
        raise ValueError("one row per colour is needed")
    cols = I.columns
    out = {}
    for letters in combinations(range(1, m + 1), len(cols)):
        wt = []
        for a, col in zip(letters, cols):
            for b, k in zip(cs.elements, col):
                if k:
                    wt.append(((a, b), k))
        out[tuple(sorted(wt))] = 1
    return CSeries(out)


def seqr(I: LVectorComposition, cs: ColourSet) -> BComposition:
    """
    Read the columns left to right, each top to bottom, dropping zeros.

    >>> cs = ColourSet.plain("ab")
    >>> str(seqr(LVectorComposition(((1, 0, 4), (3, 2, 1))), cs))
    '((1,a),(3,b),(2,b),(4,a),(1,b))'
    """
    return BComposition(tuple((k, b) for col in I.columns for b, k in zip(cs.elements, col) if k))


def _weak_compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _weak_compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def lvector_compositions(n: int, l: int, max_columns: int = None) -> tuple[LVectorComposition, ...]:
    out = []
    for sizes in compositions(n):
        if max_columns is not None and len(sizes) > max_columns:
            continue
        for cols in product(*(list(_weak_compositions(s, l)) for s in sizes)):
            out.append(LVectorComposition(tuple(zip(*cols))))
    return tuple(out)


def expand_F_in_M(c: BComposition, m: int, cs: ColourSet) -> dict:
    """
    The l-vector compositions I, with at most m columns, whose sequential
    reading refines c; F_c is the sum of their M_I.
    """
    return {
        I: 1
        for I in lvector_compositions(c.size, len(cs), m)
        if refines_B(seqr(I, cs), c)
    }
