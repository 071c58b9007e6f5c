"""
The graded bialgebra spanned by all coloured permutations.

Elements are sparse integer combinations of :class:`ColouredPermutation`.
``x * y`` is the external (shifted shuffle) product, ``x @ y`` the internal
product of the wreath product group ring, and :func:`coproduct` cuts the
word of values into a prefix and a suffix.

>>> cs = ColourSet.plain(["v1", "v2", "w1", "w2"])
>>> a = basis(ColouredPermutation(("v1", "v2"), (1, 2)), cs)
>>> b = basis(ColouredPermutation(("w2", "w1"), (2, 1)), cs)
>>> for alpha, coeff in (a * b).sorted_terms():
...     print(alpha, coeff)
(v1,v2,w2,w1;1243) 1
(v1,w2,v2,w1;1342) 1
(v1,w2,w1,v2;1432) 1
(w2,v1,v2,w1;2341) 1
(w2,v1,w1,v2;2431) 1
(w2,w1,v1,v2;3421) 1

The subspace spanned by the sums of descent classes is closed under all
three operations; :func:`expand_in_mr_basis` finds coordinates in it.
"""

__all__ = [
    "DEGREE_CAP", "DegreeCapExceeded", "NotInSubspace",
    "AlgebraElement", "Tensor", "MRExpansion",
    "basis", "unit", "zero", "external_product", "coproduct",
    "iterated_coproduct", "internal_product", "pairing", "tau",
    "mr_generator", "mr_product", "descent_class", "descent_classes",
    "expand_in_mr_basis", "mr_word_coordinates", "from_word_coordinates",
    "mr_word_basis", "mr_internal_rule", "orthogonal_complement",
    "all_basis_elements", "counit",
]

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .coloured_core import (
    BComposition, ColourSet, ColouredPermutation, all_coloured_permutations,
    bcompositions, descent_composition_B, star,
)
from .linalg import kernel_vectors
from .perm_core import (
    coset_reps, identity, inverse, margin_matrices, standardize, young_embed,
)

# largest degree any enumeration is allowed to materialize
DEGREE_CAP = 8


class DegreeCapExceeded(ValueError):
    pass


class NotInSubspace(ValueError):
    """Raised with the part of an element left over after projection."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


def _check_degree(n):
    if n > DEGREE_CAP:
        raise DegreeCapExceeded(f"degree {n} exceeds the cap {DEGREE_CAP}")


def _sort_key(cs):
    def key(alpha):
        return (alpha.n, tuple(cs.index(b) for b in alpha.colours), alpha.perm)
    return key


@dataclass(eq=False)
class AlgebraElement:
    """A finite integer combination of coloured permutations."""
    terms: dict
    colour_set: ColourSet

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def _same(self, other):
        if self.colour_set != other.colour_set:
            raise ValueError("elements over different colour sets")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(out, self.colour_set)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return AlgebraElement({k: scalar * v for k, v in self.terms.items()}, self.colour_set)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return external_product(self, other)

    def __matmul__(self, other):
        return internal_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.colour_set == other.colour_set and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, alpha):
        return self.terms.get(alpha, 0)

    def __len__(self):
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {alpha.n for alpha in self.terms}

    def homogeneous_part(self, n: int) -> "AlgebraElement":
        return AlgebraElement({k: v for k, v in self.terms.items() if k.n == n}, self.colour_set)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(self.colour_set)(kv[0]))

    def map_colours(self, f, colour_set: ColourSet) -> "AlgebraElement":
        out = defaultdict(int)
        for alpha, v in self.terms.items():
            out[ColouredPermutation(tuple(f(b) for b in alpha.colours), alpha.perm)] += v
        return AlgebraElement(dict(out), colour_set)

    def to_json(self, colour_set_id="B") -> dict:
        return {
            "colour_set": colour_set_id,
            "terms": [dict(alpha.to_json(), coeff=v) for alpha, v in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping, colour_set: ColourSet) -> "AlgebraElement":
        out = defaultdict(int)
        for t in data["terms"]:
            alpha = ColouredPermutation(tuple(t["colours"]), tuple(t["perm"]))
            if sorted(alpha.perm) != list(range(1, alpha.n + 1)):
                raise ValueError(f"not a permutation: {t['perm']}")
            if any(b not in colour_set for b in alpha.colours):
                raise ValueError(f"unknown colour in {t['colours']}")
            out[alpha] += int(t.get("coeff", 1))
        return cls(dict(out), colour_set)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{a}" for a, v in self.sorted_terms())


def basis(alpha: ColouredPermutation, cs: ColourSet) -> AlgebraElement:
    return AlgebraElement({alpha: 1}, cs)


def zero(cs: ColourSet) -> AlgebraElement:
    return AlgebraElement({}, cs)


def unit(cs: ColourSet, n: int = 0) -> AlgebraElement:
    """The unit of the external product (n=0), or of the internal product in degree n."""
    if n == 0:
        return basis(ColouredPermutation((), ()), cs)
    return basis(ColouredPermutation((cs.unit,) * n, identity(n)), cs)


def counit(x: AlgebraElement) -> int:
    return x[ColouredPermutation((), ())]


@lru_cache(maxsize=None)
def _shuffle_reps(n: int, m: int):
    return tuple(sorted(coset_reps((n, m))))


def _basis_external(alpha, beta):
    n, m = alpha.n, beta.n
    colours = alpha.colours + beta.colours
    sigma = young_embed(alpha.perm, beta.perm)
    out = []
    for pi in _shuffle_reps(n, m):
        new_colours = [None] * (n + m)
        for j, b in enumerate(colours):
            new_colours[pi[j] - 1] = b
        out.append(ColouredPermutation(tuple(new_colours), tuple(pi[x - 1] for x in sigma)))
    return out


def external_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same(y)
    out = defaultdict(int)
    for a, u in x.terms.items():
        for b, v in y.terms.items():
            for g in _basis_external(a, b):
                out[g] += u * v
    return AlgebraElement(dict(out), x.colour_set)


@dataclass(eq=False)
class Tensor:
    """A sparse element of the tensor square, keyed by pairs of basis elements."""
    terms: dict
    colour_set: ColourSet

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Tensor(out, self.colour_set)

    def __sub__(self, other):
        return self + Tensor({k: -v for k, v in other.terms.items()}, self.colour_set)

    def __mul__(self, other):
        """Componentwise external product."""
        out = defaultdict(int)
        for (a1, a2), u in self.terms.items():
            for (b1, b2), v in other.terms.items():
                for g1 in _basis_external(a1, b1):
                    for g2 in _basis_external(a2, b2):
                        out[g1, g2] += u * v
        return Tensor(dict(out), self.colour_set)

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.terms == other.terms

    def factors(self):
        """Left and right tensor factors grouped, for subspace membership checks."""
        left, right = defaultdict(int), defaultdict(int)
        for (a, b), v in self.terms.items():
            left[a] += v
            right[b] += v
        return left, right

    def map(self, f, g) -> dict:
        """Apply linear maps on each side; results must be hashable-keyed dicts."""
        out = defaultdict(int)
        for (a, b), v in self.terms.items():
            for ka, va in f(a).items():
                for kb, vb in g(b).items():
                    out[ka, kb] += v * va * vb
        return {k: v for k, v in out.items() if v}


def _cut(alpha, k):
    """The two pieces of the coproduct of alpha at cut point k."""
    inv = inverse(alpha.perm)
    first = inverse(standardize(inv[:k]))
    second = inverse(standardize(inv[k:]))
    return (
        ColouredPermutation(alpha.colours[:k], first),
        ColouredPermutation(alpha.colours[k:], second),
    )


def coproduct(x: AlgebraElement) -> Tensor:
    out = defaultdict(int)
    for alpha, v in x.terms.items():
        for k in range(alpha.n + 1):
            out[_cut(alpha, k)] += v
    return Tensor(dict(out), x.colour_set)


def iterated_coproduct(x: AlgebraElement, parts: int) -> dict:
    """The (parts-1)-fold coproduct, keyed by tuples of basis elements."""
    if parts == 1:
        return {(alpha,): v for alpha, v in x.terms.items()}
    out = defaultdict(int)
    for alpha, v in x.terms.items():
        for k in range(alpha.n + 1):
            head, tail = _cut(alpha, k)
            for rest, w in iterated_coproduct(basis(tail, x.colour_set), parts - 1).items():
                out[(head,) + rest] += v * w
    return {k: v for k, v in out.items() if v}


def internal_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """
    Degreewise product of the wreath product group ring; products of terms of
    different degrees are dropped.

    >>> cs = ColourSet(("t", "s"), table=(("t", "s"), ("s", "t")))
    >>> a = basis(ColouredPermutation(("s", "t"), (2, 1)), cs)
    >>> b = basis(ColouredPermutation(("s", "s"), (2, 1)), cs)
    >>> a @ b
    1*(t,s;12)
    """
    x._same(y)
    cs = x.colour_set
    if not cs.is_group:
        raise ValueError("the internal product needs a group law on the colours")
    mul = cs.mul
    out = defaultdict(int)
    by_degree = defaultdict(list)
    for b, v in y.terms.items():
        by_degree[b.n].append((b, v))
    for a, u in x.terms.items():
        inv = inverse(a.perm)
        for b, v in by_degree.get(a.n, ()):
            colours = tuple(mul(a.colours[i], b.colours[inv[i] - 1]) for i in range(a.n))
            perm = tuple(a.perm[t - 1] for t in b.perm)
            out[ColouredPermutation(colours, perm)] += u * v
    return AlgebraElement(dict(out), cs)


def pairing(x: AlgebraElement, y: AlgebraElement) -> int:
    """The bilinear form making each basis element dual to its star."""
    x._same(y)
    cs = x.colour_set
    return sum(u * y[star(a, cs)] for a, u in x.terms.items())


def tau(x: AlgebraElement) -> int:
    """Coefficient of the group unit, summed over degrees."""
    u = x.colour_set.unit
    return sum(
        v for a, v in x.terms.items()
        if a.perm == identity(a.n) and all(b == u for b in a.colours)
    )


def mr_generator(n: int, b: str, cs: ColourSet) -> AlgebraElement:
    if n < 1:
        raise ValueError("generators start in degree 1; use unit() for degree 0")
    return basis(ColouredPermutation((b,) * n, identity(n)), cs)


@lru_cache(maxsize=None)
def _mr_product_terms(c: BComposition):
    word = c.colour_word()
    out = []
    for pi in coset_reps(c.parts):
        colours = [None] * len(pi)
        for i, b in enumerate(word):
            colours[pi[i] - 1] = b
        out.append(ColouredPermutation(tuple(colours), pi))
    return tuple(out)


def mr_product(c: BComposition, cs: ColourSet) -> AlgebraElement:
    """
    The external product of the generators indexed by the pairs of c.

    Computed in closed form as the sum of coloured permutations whose
    descent composition c refines.
    """
    _check_degree(c.size)
    if c.size == 0:
        return unit(cs)
    return AlgebraElement({a: 1 for a in _mr_product_terms(c)}, cs)


def all_basis_elements(n: int, cs: ColourSet):
    _check_degree(n)
    return all_coloured_permutations(n, cs)


@lru_cache(maxsize=None)
def descent_classes(n: int, cs: ColourSet) -> dict:
    """Map each B-composition of n to the list of elements with that descent composition."""
    out = {c: [] for c in bcompositions(n, cs)}
    for alpha in all_basis_elements(n, cs):
        out[descent_composition_B(alpha)].append(alpha)
    return out


def descent_class(c: BComposition, cs: ColourSet) -> AlgebraElement:
    return AlgebraElement({a: 1 for a in descent_classes(c.size, cs)[c]}, cs)


@dataclass
class MRExpansion:
    """Coordinates in the basis of descent class sums."""
    coeffs: dict = field(default_factory=dict)

    def word_coordinates(self) -> dict:
        """Coordinates in the basis of generator products."""
        out = defaultdict(int)
        for c, a in self.coeffs.items():
            for d in c.coarsenings():
                out[d] += (-1) ** (len(c) - len(d)) * a
        return {k: v for k, v in out.items() if v}

    def to_element(self, cs: ColourSet) -> AlgebraElement:
        out = zero(cs)
        for c, a in self.coeffs.items():
            out = out + a * descent_class(c, cs)
        return out


def expand_in_mr_basis(x: AlgebraElement) -> MRExpansion:
    """
    Coordinates of x on the descent class sums.

    Each class contributes the coefficient of one witness element; any
    mismatch elsewhere in the class leaves a residual and raises.
    """
    cs = x.colour_set
    degrees = x.degrees()
    if len(degrees) > 1:
        raise ValueError("expand_in_mr_basis needs a homogeneous element")
    if not degrees:
        return MRExpansion({})
    n = degrees.pop()
    classes = descent_classes(n, cs)
    coeffs = {}
    residual = dict(x.terms)
    for alpha in x.terms:
        c = descent_composition_B(alpha)
        if c in coeffs:
            continue
        a = x[alpha]
        coeffs[c] = a
        for beta in classes[c]:
            residual[beta] = residual.get(beta, 0) - a
    leftover = AlgebraElement(residual, cs)
    if leftover:
        raise NotInSubspace("element is not a combination of descent classes", leftover)
    return MRExpansion(coeffs)


def mr_word_coordinates(x: AlgebraElement) -> dict:
    """Coordinates of a homogeneous element on the generator products."""
    return expand_in_mr_basis(x).word_coordinates()


def from_word_coordinates(coords: Mapping[BComposition, int], cs: ColourSet) -> AlgebraElement:
    out = defaultdict(int)
    for c, a in coords.items():
        for alpha, v in mr_product(c, cs).terms.items():
            out[alpha] += a * v
    return AlgebraElement(dict(out), cs)


def mr_word_basis(n: int, cs: ColourSet) -> list[tuple[BComposition, AlgebraElement]]:
    return [(c, mr_product(c, cs)) for c in bcompositions(n, cs)]


def mr_internal_rule(c: BComposition, d: BComposition, cs: ColourSet) -> AlgebraElement:
    """
    Internal product of two generator products by the matrix rule: one
    generator per non-zero entry, colour = row colour times column colour,
    entries read down each column, columns left to right.
    """
    if not cs.is_group:
        raise ValueError("the internal product needs a group law on the colours")
    if c.size != d.size:
        raise ValueError("generator products of different degrees")
    out = zero(cs)
    for m in margin_matrices(c.parts, d.parts):
        pairs = []
        for j, (_, b) in enumerate(d.pairs):
            for i, (_, a) in enumerate(c.pairs):
                if m.entries[i][j]:
                    pairs.append((m.entries[i][j], cs.mul(a, b)))
        out = out + mr_product(BComposition(tuple(pairs)), cs)
    return out


def orthogonal_complement(elements: Iterable[AlgebraElement], n: int, cs: ColourSet) -> list[AlgebraElement]:
    """Basis of the degree-n elements pairing to zero with every given element."""
    keys = list(all_basis_elements(n, cs))
    rows = []
    for s in elements:
        rows.append({alpha: s[star(alpha, cs)] for alpha in keys if s[star(alpha, cs)]})
    return [AlgebraElement(v, cs) for v in kernel_vectors(rows, keys)]
