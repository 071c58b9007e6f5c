"""
The hyperoctahedral case G = Z/2, where G ≀ S_n is the Coxeter group of
type B_n.  Colours are the two characters t (trivial) and s (sign).

Elements x~_C indexed by signed compositions, the elements z_n, and the
sign-twisted map ``tilde_theta`` sending y_{n,s} to e_n(s) instead of
h_n(s).

>>> z_element(2)
1*(s,s;21)
>>> xtilde(SignedComposition((-1,)))
1*(t;1) + 1*(s;1)
"""

__all__ = [
    "SignedComposition", "signed_compositions", "HYPEROCTAHEDRAL_GROUP",
    "CHARACTER_COLOURS", "z_element", "xtilde", "tilde_theta",
    "tilde_character_value", "as_group_element", "parabolic_index",
    "solomon_subalgebra_compositions",
]

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial

from .coloured_core import ColouredPermutation
from .coloured_symfun import SchurExpansion, omega_on_colour
from .fqsym_engine import AlgebraElement, basis, expand_in_mr_basis, mr_generator, unit
from .perm_core import compositions
from .solomon_characters import (
    CyclotomicValue, FiniteAbelianGroup, character_value, theta_G,
)

HYPEROCTAHEDRAL_GROUP = FiniteAbelianGroup((2,))
CHARACTER_COLOURS = HYPEROCTAHEDRAL_GROUP.dual().colour_set()


@dataclass(frozen=True)
class SignedComposition:
    """
    A sequence of non-zero integers.

    >>> SignedComposition((2, -1)).positive
    (2, 1)
    """
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p == 0 for p in self.parts):
            raise ValueError("signed compositions have no zero parts")

    @property
    def size(self) -> int:
        return sum(abs(p) for p in self.parts)

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(abs(p) for p in self.parts)

    def subgroup_order(self) -> int:
        """Order of the subgroup G^C ⋊ S_{C+}: sign changes only in positive blocks."""
        out = 1
        for p in self.parts:
            out *= factorial(abs(p)) * (2 ** p if p > 0 else 1)
        return out

    def to_json(self) -> list:
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def signed_compositions(n: int) -> list[SignedComposition]:
    """All 2·3^(n-1) signed compositions of n (one, the empty one, for n = 0)."""
    out = []
    for c in compositions(n):
        for signs in product((1, -1), repeat=len(c)):
            out.append(SignedComposition(tuple(s * p for s, p in zip(signs, c))))
    return out


def z_element(n: int) -> AlgebraElement:
    """All colours s on the longest permutation."""
    if n == 0:
        return unit(CHARACTER_COLOURS)
    alpha = ColouredPermutation(("s",) * n, tuple(range(n, 0, -1)))
    return basis(alpha, CHARACTER_COLOURS)


def _y(n: int, colour: str) -> AlgebraElement:
    if n == 0:
        return unit(CHARACTER_COLOURS)
    return mr_generator(n, colour, CHARACTER_COLOURS)


@lru_cache(maxsize=None)
def _xtilde_single(c: int) -> AlgebraElement:
    if c > 0:
        return _y(c, "t")
    n = -c
    total = AlgebraElement({}, CHARACTER_COLOURS)
    for i in range(n + 1):
        total = total + z_element(i) * _y(n - i, "t")
    return total


def xtilde(C: SignedComposition) -> AlgebraElement:
    """Sum of the minimal coset representatives modulo W_C."""
    out = unit(CHARACTER_COLOURS)
    for c in C.parts:
        out = out * _xtilde_single(c)
    return out


def solomon_subalgebra_compositions(n: int) -> list[SignedComposition]:
    """Signed compositions indexing parabolic subgroups: every part but the first negative."""
    return [C for C in signed_compositions(n) if all(p < 0 for p in C.parts[1:])]


def tilde_theta(x: AlgebraElement) -> SchurExpansion:
    """
    theta_G followed by conjugating the colour-s partitions.

    >>> tilde_theta(mr_generator(2, "s", CHARACTER_COLOURS))
    SchurExpansion({s:(1, 1)}: 1)
    """
    for n in x.degrees():
        expand_in_mr_basis(x.homogeneous_part(n))
    return omega_on_colour(theta_G(x), "s")


def as_group_element(x: AlgebraElement) -> AlgebraElement:
    """Read an element over {t, s} as one of the group ring of W_n (t = +1, s = -1)."""
    table = dict(zip(CHARACTER_COLOURS.elements, HYPEROCTAHEDRAL_GROUP.labels()))
    return x.map_colours(table.__getitem__, HYPEROCTAHEDRAL_GROUP.colour_set())


def tilde_character_value(y: AlgebraElement, x: AlgebraElement) -> CyclotomicValue:
    """Value of the character tilde_theta(y) on x, both over {t, s}."""
    return character_value(y, as_group_element(x), HYPEROCTAHEDRAL_GROUP, signed_colours=("s",))


def parabolic_index(C: SignedComposition) -> int:
    """[W_n : W_C]."""
    return factorial(C.size) * 2 ** C.size // C.subgroup_order()
