"""
Permutations in one-line notation and integer compositions.

A permutation of size n is a tuple holding the images of 1, 2, ..., n.
Products read right to left, so ``compose(p, q)[i-1] == p[q[i-1]-1]``.

>>> standardize("bcbaba")
(3, 6, 4, 1, 5, 2)
>>> descent_composition((5, 1, 2, 4, 3))
(1, 3, 1)
>>> sorted(coset_reps((2, 2)))
[(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)]
"""

__all__ = [
    "Permutation", "Composition", "WeakComposition", "MarginMatrix",
    "identity", "compose", "inverse", "sign", "all_permutations",
    "standardize", "descent_composition", "partial_sums", "refines",
    "compositions", "coarsenings", "coset_reps", "young_embed",
    "margin_matrices", "colr", "double_coset", "distinguished_rep",
    "simple_transposition",
]

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Hashable, NewType, Sequence

# one-line notation, values 1..n
Permutation = NewType("Permutation", tuple[int, ...])

# positive parts
Composition = NewType("Composition", tuple[int, ...])

# non-negative parts, zeros allowed
WeakComposition = NewType("WeakComposition", tuple[int, ...])


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """The product pq, acting as ``i -> p(q(i))``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    return tuple(p[x - 1] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(p)
    for i, x in enumerate(p, 1):
        inv[x - 1] = i
    return tuple(inv)


def sign(p: Sequence[int]) -> int:
    """Signature, computed from the cycle decomposition."""
    seen = [False] * len(p)
    s = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def simple_transposition(n: int, i: int) -> Permutation:
    """The transposition s_i exchanging i and i+1."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(permutations(range(1, n + 1)))


def standardize(word: Sequence[Hashable], key=None) -> Permutation:
    """
    Number the letters by increasing value, equal letters left to right.

    ``key`` orders the letters when their natural order is not the wanted one.

    >>> standardize("cba")
    (3, 2, 1)
    >>> standardize([2, 2, 1])
    (2, 3, 1)
    """
    if key is None:
        order = sorted(range(len(word)), key=lambda i: word[i])
    else:
        order = sorted(range(len(word)), key=lambda i: key(word[i]))
    # sorted() is stable, so ties keep their positions
    result = [0] * len(word)
    for value, pos in enumerate(order, 1):
        result[pos] = value
    return tuple(result)


def descent_composition(p: Sequence[int]) -> Composition:
    """Lengths of the maximal increasing runs of the word of p."""
    if not p:
        return ()
    parts = []
    run = 1
    for a, b in zip(p, p[1:]):
        if a < b:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return tuple(parts)


def partial_sums(c: Sequence[int]) -> frozenset[int]:
    out = set()
    t = 0
    for part in c:
        t += part
        out.add(t)
    return frozenset(out)


def refines(c: Sequence[int], d: Sequence[int]) -> bool:
    """
    True when c is a refinement of d (every cut of d is a cut of c).

    >>> refines((1, 3, 1), (4, 1)), refines((4, 1), (1, 3, 1))
    (True, False)
    """
    if sum(c) != sum(d):
        return False
    return partial_sums(d) <= partial_sums(c)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n, in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def coarsenings(c: Sequence[int]) -> list[Composition]:
    """All compositions d such that c refines d."""
    c = tuple(c)
    out = []
    for mask in product((False, True), repeat=max(len(c) - 1, 0)):
        parts = [c[0]] if c else []
        for merge, part in zip(mask, c[1:]):
            if merge:
                parts[-1] += part
            else:
                parts.append(part)
        out.append(tuple(parts))
    return out


@lru_cache(maxsize=None)
def _coset_reps(c: tuple[int, ...]) -> frozenset[Permutation]:
    n = sum(c)
    out = set()

    def fill(block, remaining, word):
        if block == len(c):
            out.add(tuple(word))
            return
        for values in combinations(remaining, c[block]):
            rest = [v for v in remaining if v not in values]
            fill(block + 1, rest, word + list(values))

    fill(0, list(range(1, n + 1)), [])
    return frozenset(out)


def coset_reps(c: Sequence[int]) -> frozenset[Permutation]:
    """
    Permutations increasing on each block of c; zero parts are skipped.

    >>> len(coset_reps((1, 0, 2)))
    3
    """
    return _coset_reps(tuple(x for x in c if x))


def young_embed(*perms: Sequence[int]) -> Permutation:
    """
    Blockwise product of permutations.

    >>> young_embed((2, 1), (2, 1))
    (2, 1, 4, 3)
    """
    out = []
    offset = 0
    for p in perms:
        out.extend(x + offset for x in p)
        offset += len(p)
    return tuple(out)


@dataclass(frozen=True)
class MarginMatrix:
    """A non-negative integer matrix with prescribed row and column sums."""
    entries: tuple[tuple[int, ...], ...]

    @property
    def row_sums(self) -> Composition:
        return tuple(sum(row) for row in self.entries)

    @property
    def col_sums(self) -> Composition:
        if not self.entries:
            return ()
        return tuple(sum(col) for col in zip(*self.entries))

    def to_json(self):
        return [list(row) for row in self.entries]


def margin_matrices(c: Sequence[int], d: Sequence[int]) -> list[MarginMatrix]:
    """
    Every matrix with row sums c and column sums d.

    >>> [m.entries for m in margin_matrices((1, 1), (1, 1))]
    [((1, 0), (0, 1)), ((0, 1), (1, 0))]
    """
    c, d = tuple(c), tuple(d)
    if sum(c) != sum(d):
        return []
    out = []

    def rows_from(i, remaining_cols, acc):
        if i == len(c):
            if all(x == 0 for x in remaining_cols):
                out.append(MarginMatrix(tuple(acc)))
            return
        for row in _bounded_rows(c[i], remaining_cols):
            rows_from(i + 1, tuple(r - x for r, x in zip(remaining_cols, row)), acc + [row])

    rows_from(0, d, [])
    return out


def _bounded_rows(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bounds[0]), -1, -1):
        for rest in _bounded_rows(total - first, bounds[1:]):
            yield (first,) + rest


def colr(m: MarginMatrix) -> WeakComposition:
    """Entries read column by column, each column top to bottom."""
    if not m.entries:
        return ()
    return tuple(x for col in zip(*m.entries) for x in col)


def _blocks(c):
    out = []
    t = 0
    for part in c:
        out.append(range(t + 1, t + part + 1))
        t += part
    return out


def double_coset(m: MarginMatrix) -> set[Permutation]:
    """The permutations sending block j of the columns to m_ij points of row block i."""
    c, d = m.row_sums, m.col_sums
    n = sum(c)
    row_of = {}
    for i, block in enumerate(_blocks(c)):
        for x in block:
            row_of[x] = i
    col_blocks = _blocks(d)
    out = set()
    for p in all_permutations(n):
        ok = True
        for j, block in enumerate(col_blocks):
            counts = [0] * len(c)
            for x in block:
                counts[row_of[p[x - 1]]] += 1
            if any(counts[i] != m.entries[i][j] for i in range(len(c))):
                ok = False
                break
        if ok:
            out.add(p)
    return out


def distinguished_rep(m: MarginMatrix) -> Permutation:
    """
    The representative of the double coset of m sending each column block,
    in order, onto consecutive stretches of the row blocks.

    >>> distinguished_rep(MarginMatrix(((1,), (1,))))
    (1, 2)
    >>> distinguished_rep(MarginMatrix(((0, 1), (1, 0))))
    (2, 1)
    """
    rows = m.entries
    k = len(rows)
    l = len(rows[0]) if rows else 0
    c, d = m.row_sums, m.col_sums
    t = [sum(c[:i]) for i in range(k)]
    u = [sum(d[:j]) for j in range(l)]
    rho = [0] * sum(c)
    for j in range(l):
        a = u[j]
        for i in range(k):
            # m_ij consecutive points of column block j go to row block i,
            # right after what columns 1..j-1 already placed there
            target = t[i] + sum(rows[i][:j])
            for step in range(rows[i][j]):
                a += 1
                rho[a - 1] = target + step + 1
    return tuple(rho)
