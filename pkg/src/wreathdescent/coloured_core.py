"""
Coloured permutations, colour sets and coloured compositions.

An element of the wreath product is stored as ``(colours; perm)`` where
``colours[j-1]`` is the colour carried by the value j.  Acting on the left by
a permutation p moves colours with the values; acting on the right only
reorders the one-line word.  The colour seen at position i of the word is
``colours[perm[i-1]-1]``; the list of those is the *position colouring*.

>>> cs = ColourSet.plain("ab")
>>> alpha = ColouredPermutation.from_positions((1, 4, 2, 6, 7, 3, 5), "aaababb")
>>> alpha.colours
('a', 'a', 'b', 'a', 'b', 'b', 'a')
>>> descent_composition_B(alpha)
BComposition(pairs=((2, 'a'), (1, 'a'), (1, 'b'), (1, 'a'), (2, 'b')))
>>> receding_composition(alpha, cs)
BComposition(pairs=((2, 'a'), (1, 'b'), (1, 'a'), (1, 'b'), (1, 'b'), (1, 'a')))
"""

__all__ = [
    "ColourSet", "ColouredPermutation", "BComposition", "BPartition",
    "star", "descent_composition_B", "receding_composition",
    "atkinson_related", "refines_B", "bcompositions",
    "all_coloured_permutations",
]

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .perm_core import (
    Permutation, compose, inverse, identity, all_permutations,
    compositions, refines, coarsenings,
)


@dataclass(frozen=True)
class ColourSet:
    """
    A finite ordered set of colour labels with an involution and,
    optionally, a group law given by its Cayley table.
    """
    elements: tuple[str, ...]
    star_images: tuple[str, ...] = None
    table: Optional[tuple[tuple[str, ...], ...]] = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _star: dict = field(init=False, repr=False, compare=False, hash=False)
    _mul: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if len(set(elements)) != len(elements):
            raise ValueError("colour labels must be distinct")
        index = {b: i for i, b in enumerate(elements)}
        object.__setattr__(self, "_index", index)
        mul = None
        if self.table is not None:
            table = tuple(tuple(row) for row in self.table)
            object.__setattr__(self, "table", table)
            mul = {(a, b): table[index[a]][index[b]] for a in elements for b in elements}
            _check_group(elements, mul)
        object.__setattr__(self, "_mul", mul)
        if self.star_images is None:
            if mul is not None:
                images = tuple(self._inverse_of(b, mul) for b in elements)
            else:
                images = elements
            object.__setattr__(self, "star_images", images)
        images = tuple(self.star_images)
        object.__setattr__(self, "star_images", images)
        star_map = dict(zip(elements, images))
        if sorted(images) != sorted(elements) or any(star_map[star_map[b]] != b for b in elements):
            raise ValueError("star must be an involution of the colour set")
        if mul is not None and any(star_map[b] != self._inverse_of(b, mul) for b in elements):
            raise ValueError("for a group, star must be inversion")
        object.__setattr__(self, "_star", star_map)

    @classmethod
    def plain(cls, labels: Iterable[str], star: Optional[Mapping[str, str]] = None) -> "ColourSet":
        labels = tuple(labels)
        images = None if star is None else tuple(star.get(b, b) for b in labels)
        return cls(labels, images)

    @staticmethod
    def _inverse_of(b, mul):
        unit = _unit(mul)
        for c in {x for x, _ in mul}:
            if mul[b, c] == unit:
                return c
        raise ValueError("no inverse")

    @property
    def is_group(self) -> bool:
        return self._mul is not None

    @property
    def unit(self) -> str:
        if self._mul is None:
            raise ValueError("colour set has no group law")
        return _unit(self._mul)

    def mul(self, a: str, b: str) -> str:
        if self._mul is None:
            raise ValueError("colour set has no group law")
        return self._mul[a, b]

    def star(self, b: str) -> str:
        return self._star[b]

    def index(self, b: str) -> int:
        return self._index[b]

    def __contains__(self, b) -> bool:
        return b in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> dict:
        out = {"colours": list(self.elements), "star": dict(self._star)}
        if self.table is not None:
            out["group"] = [list(row) for row in self.table]
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "ColourSet":
        labels = tuple(data["colours"])
        star = data.get("star")
        images = None if star is None else tuple(star[b] for b in labels)
        return cls(labels, images, data.get("group"))


def _unit(mul):
    elements = {a for a, _ in mul}
    for e in elements:
        if all(mul[e, b] == b and mul[b, e] == b for b in elements):
            return e
    raise ValueError("group law has no unit")


def _check_group(elements, mul):
    unit = _unit(mul)
    for a in elements:
        if not any(mul[a, b] == unit for b in elements):
            raise ValueError(f"colour {a!r} has no inverse")
        for b in elements:
            if mul[a, b] not in elements:
                raise ValueError("group table is not closed")
            for c in elements:
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    raise ValueError("group law is not associative")


@dataclass(frozen=True)
class ColouredPermutation:
    """The element (colours; perm) of the wreath product, colours indexed by values."""
    colours: tuple[str, ...]
    perm: Permutation

    def __post_init__(self):
        if len(self.colours) != len(self.perm):
            raise ValueError("colour vector and permutation differ in length")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def from_positions(cls, perm: Sequence[int], position_colours: Sequence[str]) -> "ColouredPermutation":
        """Build ``perm . (position_colours; e)``: position i carries position_colours[i]."""
        colours = [None] * len(perm)
        for i, v in enumerate(perm):
            colours[v - 1] = position_colours[i]
        return cls(tuple(colours), tuple(perm))

    def position_colours(self) -> tuple[str, ...]:
        return tuple(self.colours[v - 1] for v in self.perm)

    def act_left(self, p: Sequence[int]) -> "ColouredPermutation":
        """``p . self``: the colour of value j moves to value p(j)."""
        colours = [None] * len(p)
        for j, b in enumerate(self.colours):
            colours[p[j] - 1] = b
        return ColouredPermutation(tuple(colours), compose(p, self.perm))

    def act_right(self, p: Sequence[int]) -> "ColouredPermutation":
        return ColouredPermutation(self.colours, compose(self.perm, p))

    def to_json(self) -> dict:
        return {"colours": list(self.colours), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, data: Mapping) -> "ColouredPermutation":
        return cls(tuple(data["colours"]), tuple(data["perm"]))

    def __str__(self):
        return "(" + ",".join(self.colours) + ";" + "".join(map(str, self.perm)) + ")"


def star(alpha: ColouredPermutation, cs: ColourSet) -> ColouredPermutation:
    """
    The basis element dual to alpha: colours read along the word and
    starred, permutation inverted.

    >>> cs = ColourSet.plain("ab", {"a": "b", "b": "a"})
    >>> print(star(ColouredPermutation(("a", "b"), (2, 1)), cs))
    (a,b;21)
    """
    colours = tuple(cs.star(alpha.colours[v - 1]) for v in alpha.perm)
    return ColouredPermutation(colours, inverse(alpha.perm))


@dataclass(frozen=True)
class BComposition:
    """A sequence of (part, colour) pairs with positive parts."""
    pairs: tuple[tuple[int, str], ...]

    def __post_init__(self):
        pairs = tuple((int(c), b) for c, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if any(c < 1 for c, _ in pairs):
            raise ValueError("parts of a B-composition must be positive")

    @classmethod
    def of(cls, *pairs) -> "BComposition":
        return cls(tuple(pairs))

    @property
    def size(self) -> int:
        return sum(c for c, _ in self.pairs)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.pairs)

    @property
    def colours(self) -> tuple[str, ...]:
        return tuple(b for _, b in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def colour_word(self) -> tuple[str, ...]:
        return tuple(b for c, b in self.pairs for _ in range(c))

    def star(self, cs: ColourSet) -> "BComposition":
        return BComposition(tuple((c, cs.star(b)) for c, b in self.pairs))

    def coarsenings(self) -> list["BComposition"]:
        """All d with self refining d (only same-colour neighbours merge)."""
        out = []
        for d in coarsenings(self.parts):
            word = self.colour_word()
            pairs, t = [], 0
            for part in d:
                block = word[t:t + part]
                if len(set(block)) != 1:
                    break
                pairs.append((part, block[0]))
                t += part
            else:
                out.append(BComposition(tuple(pairs)))
        return out

    def to_json(self):
        return [[c, b] for c, b in self.pairs]

    def __str__(self):
        return "(" + ",".join(f"({c},{b})" for c, b in self.pairs) + ")"


def refines_B(c: BComposition, d: BComposition) -> bool:
    """True when c refines d and both expand to the same colour word."""
    return refines(c.parts, d.parts) and c.colour_word() == d.colour_word()


def descent_composition_B(alpha: ColouredPermutation) -> BComposition:
    """Cut the word at colour changes, then at descents."""
    b = alpha.position_colours()
    p = alpha.perm
    if not p:
        return BComposition(())
    pairs = []
    run = 1
    for i in range(1, len(p)):
        if b[i] == b[i - 1] and p[i - 1] < p[i]:
            run += 1
        else:
            pairs.append((run, b[i - 1]))
            run = 1
    pairs.append((run, b[-1]))
    return BComposition(tuple(pairs))


def receding_composition(alpha: ColouredPermutation, cs: ColourSet) -> BComposition:
    return descent_composition_B(star(alpha, cs)).star(cs)


def _adjacent_swap_index(alpha, beta):
    if alpha.colours != beta.colours or alpha.n != beta.n:
        return None
    diff = [i for i in range(alpha.n) if alpha.perm[i] != beta.perm[i]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    i = diff[0]
    if alpha.perm[i] != beta.perm[i + 1]:
        return None
    return i + 1


def atkinson_related(alpha: ColouredPermutation, beta: ColouredPermutation) -> bool:
    """
    True when beta = alpha s_i and the two swapped values are either far
    apart or separated by a colour change among the values between them.
    """
    i = _adjacent_swap_index(alpha, beta)
    if i is None:
        return False
    x, y = alpha.perm[i - 1], alpha.perm[i]
    lo, hi = min(x, y), max(x, y)
    if hi - lo > 1:
        return True
    return len(set(alpha.colours[lo - 1:hi])) > 1


@lru_cache(maxsize=None)
def bcompositions(n: int, cs: ColourSet) -> tuple[BComposition, ...]:
    out = []
    for c in compositions(n):
        for colours in product(cs.elements, repeat=len(c)):
            out.append(BComposition(tuple(zip(c, colours))))
    return tuple(out)


@lru_cache(maxsize=None)
def all_coloured_permutations(n: int, cs: ColourSet) -> tuple[ColouredPermutation, ...]:
    return tuple(
        ColouredPermutation(colours, p)
        for p in all_permutations(n)
        for colours in product(cs.elements, repeat=n)
    )


@dataclass(frozen=True)
class BPartition:
    """A family of partitions indexed by colours; empty partitions are dropped."""
    parts: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        items = tuple(sorted((b, tuple(lam)) for b, lam in self.parts if lam))
        for _, lam in items:
            if any(x < 1 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
                raise ValueError(f"not a partition: {lam}")
        if len({b for b, _ in items}) != len(items):
            raise ValueError("colour repeated in B-partition")
        object.__setattr__(self, "parts", items)

    @classmethod
    def of(cls, mapping: Mapping[str, Sequence[int]]) -> "BPartition":
        return cls(tuple((b, tuple(lam)) for b, lam in mapping.items()))

    def __getitem__(self, b) -> tuple[int, ...]:
        return dict(self.parts).get(b, ())

    def as_dict(self) -> dict:
        return dict(self.parts)

    @property
    def size(self) -> int:
        return sum(sum(lam) for _, lam in self.parts)

    def star(self, cs: ColourSet) -> "BPartition":
        return BPartition(tuple((cs.star(b), lam) for b, lam in self.parts))

    def to_json(self) -> dict:
        return {b: list(lam) for b, lam in self.parts}

    def __str__(self):
        return "{" + ", ".join(f"{b}:{lam}" for b, lam in self.parts) + "}"
