"""
Row insertion, its coloured version, and the plactic and coplactic
structures it induces on coloured permutations.

The coloured insertion splits the word of a coloured permutation by
position colour.  For each colour, the values at the positions of that
colour are row inserted in order; the insertion tableau keeps the values
and the recording tableau keeps the positions.

>>> alpha = ColouredPermutation.from_positions((1, 4, 2, 6, 7, 3, 5), "aaababb")
>>> P, Q = rso(alpha)
>>> P["a"].rows, P["b"].rows
(((1, 2, 7), (4,)), ((3, 5), (6,)))
>>> Q["a"].rows, Q["b"].rows
(((1, 2, 5), (3,)), ((4, 7), (6,)))
>>> tableau_descent_composition(Q)
BComposition(pairs=((2, 'a'), (1, 'a'), (1, 'b'), (1, 'a'), (2, 'b')))
"""

__all__ = [
    "Tableau", "BTableau", "row_insert", "rsk_word", "rsk_inverse",
    "rso", "rso_inverse", "knuth_related", "knuth_neighbours",
    "atkinson_neighbours", "closure_classes", "tableau_descent_composition",
    "coplactic_fibers", "plactic_fibers", "coplactic_element", "plactic_class_rep",
    "expand_in_coplactic_basis", "standard_btableaux",
]

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import networkx as nx

from .coloured_core import (
    BComposition, ColourSet, ColouredPermutation, atkinson_related,
)
from .fqsym_engine import AlgebraElement, NotInSubspace, all_basis_elements


@dataclass(frozen=True)
class Tableau:
    """Rows weakly increase, columns strictly increase, row lengths weakly decrease."""
    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if r)
        object.__setattr__(self, "rows", rows)
        for r1, r2 in zip(rows, rows[1:]):
            if len(r2) > len(r1) or any(b <= a for a, b in zip(r1, r2)):
                raise ValueError(f"not a tableau: {rows}")
        for r in rows:
            if any(b < a for a, b in zip(r, r[1:])):
                raise ValueError(f"row not weakly increasing: {r}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def position(self, x) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            if x in r:
                return i, r.index(x)
        raise KeyError(x)

    def to_json(self):
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class BTableau:
    """A family of tableaux indexed by colours; empty tableaux are dropped."""
    per_colour: tuple[tuple[str, Tableau], ...]

    def __post_init__(self):
        items = tuple(sorted((b, t) for b, t in self.per_colour if t.rows))
        object.__setattr__(self, "per_colour", items)

    @classmethod
    def of(cls, mapping: Mapping[str, Sequence[Sequence]]) -> "BTableau":
        return cls(tuple(
            (b, t if isinstance(t, Tableau) else Tableau(tuple(map(tuple, t))))
            for b, t in mapping.items()
        ))

    def __getitem__(self, b) -> Tableau:
        return dict(self.per_colour).get(b, Tableau(()))

    @property
    def size(self) -> int:
        return sum(t.size for _, t in self.per_colour)

    def shape(self):
        from .coloured_core import BPartition
        return BPartition(tuple((b, t.shape) for b, t in self.per_colour))

    def is_standard(self) -> bool:
        labels = [x for _, t in self.per_colour for x in t.entries()]
        return sorted(labels) == list(range(1, len(labels) + 1))

    def colour_of(self) -> dict:
        return {x: b for b, t in self.per_colour for x in t.entries()}

    def star(self, cs: ColourSet) -> "BTableau":
        return BTableau(tuple((cs.star(b), t) for b, t in self.per_colour))

    def to_json(self) -> dict:
        return {b: t.to_json() for b, t in self.per_colour}


def row_insert(rows: list[list], x) -> int:
    """Insert x by bumping, in place; return the index of the row that grew."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        # leftmost entry strictly greater than x
        j = next((k for k, y in enumerate(row) if y > x), None)
        if j is None:
            row.append(x)
            return i
        row[j], x = x, row[j]
        i += 1


def rsk_word(word: Sequence, labels: Sequence = None) -> tuple[Tableau, Tableau]:
    """
    Insertion and recording tableaux of a word; the recording tableau uses
    ``labels`` (default 1, 2, ...) for the successive letters.

    >>> P, Q = rsk_word([2, 3, 1])
    >>> P.rows, Q.rows
    (((1, 3), (2,)), ((1, 2), (3,)))
    """
    if labels is None:
        labels = range(1, len(word) + 1)
    P, Q = [], []
    for x, lab in zip(word, labels):
        i = row_insert(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(lab)
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


def rsk_inverse(P: Tableau, Q: Tableau) -> list[tuple]:
    """Pairs (label, letter) sorted by label, undoing :func:`rsk_word`."""
    if P.shape != Q.shape:
        raise ValueError("tableaux of different shapes")
    rows = [list(r) for r in P.rows]
    where = {lab: (i, j) for i, r in enumerate(Q.rows) for j, lab in enumerate(r)}
    out = []
    for lab in sorted(where, reverse=True):
        i, j = where[lab]
        x = rows[i].pop()
        assert j == len(rows[i])
        for k in range(i - 1, -1, -1):
            row = rows[k]
            # rightmost entry strictly smaller than x
            j = max(m for m, y in enumerate(row) if y < x)
            row[j], x = x, row[j]
        out.append((lab, x))
        while rows and not rows[-1]:
            rows.pop()
    return out[::-1]


def rso(alpha: ColouredPermutation) -> tuple[BTableau, BTableau]:
    colours = alpha.position_colours()
    words, positions = defaultdict(list), defaultdict(list)
    for i, (v, b) in enumerate(zip(alpha.perm, colours), 1):
        words[b].append(v)
        positions[b].append(i)
    P, Q = {}, {}
    for b in words:
        P[b], Q[b] = rsk_word(words[b], positions[b])
    return BTableau(tuple(P.items())), BTableau(tuple(Q.items()))


def rso_inverse(P: BTableau, Q: BTableau) -> ColouredPermutation:
    if P.shape() != Q.shape():
        raise ValueError("B-tableaux of different shapes")
    n = Q.size
    perm = [0] * n
    pos_colours = [None] * n
    for b, q in Q.per_colour:
        for pos, value in rsk_inverse(P[b], q):
            perm[pos - 1] = value
            pos_colours[pos - 1] = b
    return ColouredPermutation.from_positions(tuple(perm), tuple(pos_colours))


def knuth_related(alpha: ColouredPermutation, beta: ColouredPermutation) -> bool:
    """
    True when beta = alpha s_i, and either the swapped values have different
    colours, or a neighbour of the same colour lies between them.
    """
    if alpha.colours != beta.colours or alpha.n != beta.n:
        return False
    p, q = alpha.perm, beta.perm
    diff = [k for k in range(len(p)) if p[k] != q[k]]
    if len(diff) != 2 or diff[1] != diff[0] + 1 or p[diff[0]] != q[diff[1]]:
        return False
    i = diff[0]
    return _knuth_move_allowed(alpha, i)


def _knuth_move_allowed(alpha, i):
    p, col = alpha.perm, alpha.colours
    x, y = p[i], p[i + 1]
    cx, cy = col[x - 1], col[y - 1]
    if cx != cy:
        return True
    lo, hi = min(x, y), max(x, y)
    for k in (i - 1, i + 2):
        if 0 <= k < len(p) and lo < p[k] < hi and col[p[k] - 1] == cx:
            return True
    return False


def _swap(alpha, i):
    p = list(alpha.perm)
    p[i], p[i + 1] = p[i + 1], p[i]
    return ColouredPermutation(alpha.colours, tuple(p))


def knuth_neighbours(alpha: ColouredPermutation) -> list[ColouredPermutation]:
    return [_swap(alpha, i) for i in range(alpha.n - 1) if _knuth_move_allowed(alpha, i)]


def atkinson_neighbours(alpha: ColouredPermutation) -> list[ColouredPermutation]:
    out = []
    for i in range(alpha.n - 1):
        beta = _swap(alpha, i)
        if atkinson_related(alpha, beta):
            out.append(beta)
    return out


def closure_classes(elements: Iterable[Hashable], neighbours: Callable) -> list[set]:
    """Connected components of the graph joining each element to its neighbours."""
    g = nx.Graph()
    for a in elements:
        g.add_node(a)
        for b in neighbours(a):
            g.add_edge(a, b)
    return [set(c) for c in nx.connected_components(g)]


def tableau_descent_composition(T: BTableau) -> BComposition:
    """
    Cut 1..n where the colour holding the label changes, then wherever the
    next label sits in a lower row of the same tableau.
    """
    if not T.is_standard():
        raise ValueError("descent composition needs a standard B-tableau")
    colour = T.colour_of()
    n = T.size
    if n == 0:
        return BComposition(())
    row = {}
    for b, t in T.per_colour:
        for i, r in enumerate(t.rows):
            for x in r:
                row[x] = i
    pairs = []
    run = 1
    for i in range(1, n):
        if colour[i] == colour[i + 1] and row[i + 1] <= row[i]:
            run += 1
        else:
            pairs.append((run, colour[i]))
            run = 1
    pairs.append((run, colour[n]))
    return BComposition(tuple(pairs))


@lru_cache(maxsize=None)
def _fibers(n: int, cs: ColourSet):
    by_q, by_p = defaultdict(list), defaultdict(list)
    for alpha in all_basis_elements(n, cs):
        P, Q = rso(alpha)
        by_q[Q].append(alpha)
        by_p[P].append(alpha)
    return dict(by_q), dict(by_p)


def coplactic_fibers(n: int, cs: ColourSet) -> dict:
    """Recording tableau -> elements having it."""
    return _fibers(n, cs)[0]


def plactic_fibers(n: int, cs: ColourSet) -> dict:
    """Insertion tableau -> elements having it."""
    return _fibers(n, cs)[1]


def standard_btableaux(n: int, cs: ColourSet) -> list[BTableau]:
    """Every standard B-tableau of size n (each occurs as a recording tableau)."""
    return sorted(coplactic_fibers(n, cs), key=lambda t: str(t.to_json()))


def coplactic_element(T: BTableau, cs: ColourSet) -> AlgebraElement:
    """Sum of the coloured permutations whose recording tableau is T."""
    if not T.is_standard():
        raise ValueError("coplactic elements are indexed by standard B-tableaux")
    if any(b not in cs for b, _ in T.per_colour):
        raise ValueError("tableau uses colours outside the colour set")
    return AlgebraElement({a: 1 for a in coplactic_fibers(T.size, cs).get(T, [])}, cs)


def _superstandard(shape_pairs, cs: ColourSet) -> BTableau:
    label = 0
    out = []
    for b in cs.elements:
        shape = dict(shape_pairs).get(b)
        if not shape:
            continue
        rows = []
        for length in shape:
            rows.append(tuple(range(label + 1, label + length + 1)))
            label += length
        out.append((b, Tableau(tuple(rows))))
    return BTableau(tuple(out))


def plactic_class_rep(T: BTableau, cs: ColourSet) -> ColouredPermutation:
    """
    The element with insertion tableau T whose recording tableau is filled
    row by row, colours taken in the order of the colour set.
    """
    if not T.is_standard():
        raise ValueError("plactic representatives are indexed by standard B-tableaux")
    Q = _superstandard(T.shape().parts, cs)
    return rso_inverse(T, Q)


def expand_in_coplactic_basis(x: AlgebraElement) -> dict:
    """Coordinates of a homogeneous element on the coplactic elements."""
    cs = x.colour_set
    degrees = x.degrees()
    if len(degrees) > 1:
        raise ValueError("expand_in_coplactic_basis needs a homogeneous element")
    if not degrees:
        return {}
    n = degrees.pop()
    fibers = coplactic_fibers(n, cs)
    coeffs = {}
    residual = dict(x.terms)
    for alpha in x.terms:
        _, Q = rso(alpha)
        if Q in coeffs:
            continue
        a = x[alpha]
        coeffs[Q] = a
        for beta in fibers[Q]:
            residual[beta] = residual.get(beta, 0) - a
    leftover = AlgebraElement(residual, cs)
    if leftover:
        raise NotInSubspace("element is not a combination of coplactic elements", leftover)
    return coeffs
