"""
Characters of wreath products G ≀ S_n for a finite abelian group G, and the
map sending descent-algebra elements over the character group to them.

The character group and the group are kept apart: a
:class:`FiniteAbelianGroup` has a role, ``"group"`` or ``"characters"``,
and :meth:`FiniteAbelianGroup.dual` switches it.  Colours of algebra
elements are the labels of the corresponding role.

Character values are exact elements of Z[zeta_e], e the exponent of G.

>>> G = FiniteAbelianGroup((2,))
>>> Gamma = G.dual()
>>> Gamma.labels(), G.labels()
(('t', 's'), ('g0', 'g1'))
>>> from .fqsym_engine import mr_generator
>>> theta_G(mr_generator(2, "s", Gamma.colour_set()))
SchurExpansion({s:(2,)}: 1)
"""

__all__ = [
    "FiniteAbelianGroup", "parse_group", "CyclotomicValue", "InducedCharacter",
    "theta_G", "evaluate_induced", "character_value", "symmetry_check",
    "phi_tot", "value_table", "reduce_values", "kernel_equals_pairing_kernel", "kernel_report",
    "dual_homomorphism", "functorial_map", "is_nilpotent", "wreath_elements",
]

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Callable, Mapping, Optional, Sequence

import numpy as np
from sympy import Poly, cyclotomic_poly, symbols

from .coloured_core import BComposition, ColourSet, ColouredPermutation
from .coloured_symfun import HMonomialExpansion, SchurExpansion, h_to_schur, bpartitions
from .fqsym_engine import (
    AlgebraElement, all_basis_elements, internal_product, mr_word_basis,
    mr_word_coordinates, pairing, zero,
)
from .linalg import relations, same_span
from .perm_core import compose, coset_reps, inverse, sign


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    Z/r_1 x ... x Z/r_m.  Elements are exponent tuples; ``names`` overrides
    the default labels (listed in the order of :meth:`elements`).
    """
    cyclic_orders: tuple[int, ...]
    role: str = "group"
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(r) for r in self.cyclic_orders))
        if any(r < 1 for r in self.cyclic_orders):
            raise ValueError("cyclic orders must be positive")
        if self.role not in ("group", "characters"):
            raise ValueError("role is 'group' or 'characters'")
        if self.names is not None and len(self.names) != self.order:
            raise ValueError("one name per element is needed")

    @property
    def order(self) -> int:
        out = 1
        for r in self.cyclic_orders:
            out *= r
        return out

    @property
    def exponent(self) -> int:
        return lcm(1, *self.cyclic_orders)

    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(r) for r in self.cyclic_orders)))

    def labels(self) -> tuple[str, ...]:
        if self.names is not None:
            return tuple(self.names)
        els = self.elements()
        if self.role == "characters" and self.cyclic_orders == (2,):
            return ("t", "s")
        prefix = "g" if self.role == "group" else "x"
        return tuple(prefix + "_".join(map(str, g)) if g else prefix for g in els)

    def label(self, g: tuple[int, ...]) -> str:
        return self.labels()[self.elements().index(tuple(g))]

    def element(self, label: str) -> tuple[int, ...]:
        return self.elements()[self.labels().index(label)]

    def add(self, g, h):
        return tuple((a + b) % r for a, b, r in zip(g, h, self.cyclic_orders))

    def unit(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.cyclic_orders)

    def dual(self) -> "FiniteAbelianGroup":
        return FiniteAbelianGroup(self.cyclic_orders, "characters" if self.role == "group" else "group")

    @lru_cache(maxsize=None)
    def colour_set(self) -> ColourSet:
        els = self.elements()
        labels = self.labels()
        table = tuple(tuple(labels[els.index(self.add(g, h))] for h in els) for g in els)
        return ColourSet(labels, table=table)

    def bracket(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        """Exponent k with <a, b> = zeta_e^k, for a character and a group element."""
        e = self.exponent
        return sum(x * y * (e // r) for x, y, r in zip(a, b, self.cyclic_orders)) % e


def parse_group(text: str) -> FiniteAbelianGroup:
    """
    >>> parse_group("Z2xZ2").cyclic_orders
    (2, 2)
    """
    parts = text.replace(" ", "").split("x")
    orders = []
    for p in parts:
        m = re.fullmatch(r"Z/?(\d+)", p)
        if not m:
            raise ValueError(f"cannot read group {text!r}; expected e.g. Z2, Z3, Z2xZ2")
        orders.append(int(m.group(1)))
    return FiniteAbelianGroup(tuple(orders))


@lru_cache(maxsize=None)
def _reduction(e: int) -> np.ndarray:
    """Row k: coefficients of x^k reduced modulo the e-th cyclotomic polynomial."""
    x = symbols("x")
    phi = Poly(cyclotomic_poly(e, x), x)
    rows = []
    for k in range(e):
        r = Poly(x ** k, x).rem(phi)
        coeffs = [int(c) for c in reversed(r.all_coeffs())]
        coeffs += [0] * (phi.degree() - len(coeffs))
        rows.append(coeffs)
    return np.array(rows, dtype=object)


def reduce_values(values: np.ndarray, e: int) -> np.ndarray:
    """Canonical coordinates of exponent-basis vectors (last axis of length e)."""
    return values.dot(_reduction(e))


@dataclass(frozen=True)
class CyclotomicValue:
    """
    sum_k coeffs[k] zeta_e^k with zeta_e = exp(2 pi i / e).  Equality is
    tested on the remainder modulo the e-th cyclotomic polynomial.
    """
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs) + [0] * (self.order - len(self.coeffs))
        if len(c) > self.order:
            folded = [0] * self.order
            for k, v in enumerate(c):
                folded[k % self.order] += v
            c = folded
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    @classmethod
    def from_exponents(cls, order: int, exps: Mapping[int, int]) -> "CyclotomicValue":
        c = [0] * order
        for k, v in exps.items():
            c[k % order] += v
        return cls(order, tuple(c))

    @classmethod
    def integer(cls, value: int, order: int = 1) -> "CyclotomicValue":
        return cls.from_exponents(order, {0: value})

    def lift(self, order: int) -> "CyclotomicValue":
        if order % self.order:
            raise ValueError("can only lift to a multiple of the order")
        step = order // self.order
        return CyclotomicValue.from_exponents(order, {k * step: v for k, v in enumerate(self.coeffs)})

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(other, self.order)
        e = lcm(self.order, other.order)
        return self.lift(e), other.lift(e)

    def __add__(self, other):
        a, b = self._common(other)
        return CyclotomicValue(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __mul__(self, other):
        a, b = self._common(other)
        e = a.order
        c = [0] * e
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    c[(i + j) % e] += x * y
        return CyclotomicValue(e, tuple(c))

    __rmul__ = __mul__

    def canonical(self) -> tuple[int, ...]:
        return tuple(reduce_values(np.array(self.coeffs, dtype=object), self.order))

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(other, self.order)
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        a, b = self._common(other)
        return a.canonical() == b.canonical()

    def __hash__(self):
        # equal values share the reduction in the smallest common order only,
        # so hash the complex value rounded
        z = complex(self)
        return hash((round(z.real, 9), round(z.imag, 9)))

    def __complex__(self):
        return complex(sum(v * np.exp(2j * np.pi * k / self.order) for k, v in enumerate(self.coeffs)))

    def to_int(self) -> int:
        c = self.canonical()
        if any(c[1:]):
            raise ValueError("value is not an integer")
        return int(c[0]) if c else 0

    def to_json(self):
        return {"order": self.order, "coeffs": list(self.coeffs)}

    def __repr__(self):
        try:
            return str(self.to_int())
        except ValueError:
            terms = [f"{v}*z{self.order}^{k}" for k, v in enumerate(self.coeffs) if v]
            return " + ".join(terms)


@dataclass(frozen=True)
class InducedCharacter:
    """
    The character induced from a Young-type subgroup G ≀ (S_c1 x ... x S_ck)
    of the linear character equal, on block i, to a character of G on every
    coordinate, times the sign of the block permutation when signs[i] is set.
    """
    composition: tuple[int, ...]
    colours: tuple[str, ...]
    signs: Optional[tuple[bool, ...]] = None

    def __post_init__(self):
        if len(self.composition) != len(self.colours):
            raise ValueError("one colour per part is needed")
        if self.signs is None:
            object.__setattr__(self, "signs", (False,) * len(self.composition))
        if len(self.signs) != len(self.composition):
            raise ValueError("one sign flag per part is needed")

    @classmethod
    def from_bcomposition(cls, c: BComposition, signed_colours=()) -> "InducedCharacter":
        return cls(c.parts, c.colours, tuple(b in signed_colours for b in c.colours))

    @property
    def degree(self) -> int:
        return sum(self.composition)


@lru_cache(maxsize=None)
def _block_data(composition):
    block_of = []
    for i, part in enumerate(composition):
        block_of.extend([i] * part)
    return tuple(block_of), tuple(sorted(coset_reps(composition)))


def _evaluate_term(ch: InducedCharacter, gamma, g_colours, sigma, group, exps):
    """Add the value at (g_colours; sigma) into ``exps`` (exponent -> coefficient)."""
    block_of, reps = _block_data(tuple(ch.composition))
    e = group.exponent
    for pi in reps:
        pinv = inverse(pi)
        tau = compose(pinv, compose(sigma, pi))
        if any(block_of[tau[i] - 1] != block_of[i] for i in range(len(tau))):
            continue
        k = 0
        for i in range(len(tau)):
            k += group.bracket(gamma[block_of[i]], g_colours[pi[i] - 1])
        s = 1
        if any(ch.signs):
            start = 0
            for b, part in enumerate(ch.composition):
                if ch.signs[b]:
                    s *= sign(tuple(t - start for t in tau[start:start + part]))
                start += part
        exps[k % e] = exps.get(k % e, 0) + s


def evaluate_induced(ch: InducedCharacter, x: AlgebraElement, group: FiniteAbelianGroup) -> CyclotomicValue:
    """
    Value of the induced character on x, an element of the group ring of
    G ≀ S_n (colours are labels of ``group``); terms of other degrees give 0.
    """
    chars = group.dual()
    gamma = [chars.element(b) for b in ch.colours]
    exps = {}
    for alpha, coeff in x.terms.items():
        if alpha.n != ch.degree:
            continue
        g = [group.element(b) for b in alpha.colours]
        term = {}
        _evaluate_term(ch, gamma, g, alpha.perm, group, term)
        for k, v in term.items():
            exps[k] = exps.get(k, 0) + coeff * v
    return CyclotomicValue.from_exponents(group.exponent, exps)


def _homogeneous_word_coordinates(y: AlgebraElement) -> dict:
    out = {}
    for n in y.degrees():
        out.update(mr_word_coordinates(y.homogeneous_part(n)))
    return out


def theta_G(y: AlgebraElement) -> SchurExpansion:
    """
    Frobenius characteristic of the character attached to y; generators
    y_{n,gamma} go to h_n(gamma).  Colours of y are characters of G.
    """
    out = HMonomialExpansion({})
    for c, v in _homogeneous_word_coordinates(y).items():
        out = out + HMonomialExpansion({c.pairs: v})
    if y.terms and all(a.n == 0 for a in y.terms):
        return SchurExpansion({bpartitions(0, y.colour_set)[0]: y.terms[next(iter(y.terms))]})
    return h_to_schur(out)


def character_value(y: AlgebraElement, x: AlgebraElement, group: FiniteAbelianGroup,
                    signed_colours=()) -> CyclotomicValue:
    """
    Value on x (over the group) of the character attached to y (over its
    characters).  Generators whose colour is in ``signed_colours`` are sent to
    the sign-twisted character instead.
    """
    total = CyclotomicValue.integer(0, group.exponent)
    for c, v in _homogeneous_word_coordinates(y).items():
        ch = InducedCharacter.from_bcomposition(c, signed_colours)
        total = total + v * evaluate_induced(ch, x, group)
    return total


def symmetry_check(y: AlgebraElement, x: AlgebraElement, group: FiniteAbelianGroup):
    """Both sides of the symmetry: (char of y at x, char of x at y)."""
    if y.degrees() != x.degrees():
        raise ValueError("elements of different degrees")
    return character_value(y, x, group), character_value(x, y, group.dual())


def phi_tot(s: SchurExpansion, group: FiniteAbelianGroup) -> int:
    """Multiplicity of the trivial character: coefficient of s_(n) at the unit character."""
    unit = group.dual().label(group.unit())
    out = 0
    for lam, v in s.coeffs.items():
        if all(b == unit for b, _ in lam.parts) and len(lam[unit]) <= 1:
            out += v
    return out


def wreath_elements(n: int, group: FiniteAbelianGroup):
    return all_basis_elements(n, group.colour_set())


def value_table(n: int, group: FiniteAbelianGroup, signed_colours=()):
    """
    Values of every generator-product character on every element of
    G ≀ S_n, as integer arrays of shape (elements, exponent).
    """
    chars = group.dual()
    els = wreath_elements(n, group)
    e = group.exponent
    table = {}
    for c, _ in mr_word_basis(n, chars.colour_set()):
        ch = InducedCharacter.from_bcomposition(c, signed_colours)
        gamma = [chars.element(b) for b in ch.colours]
        arr = np.zeros((len(els), e), dtype=object)
        for idx, alpha in enumerate(els):
            exps = {}
            _evaluate_term(ch, gamma, [group.element(b) for b in alpha.colours], alpha.perm, group, exps)
            for k, v in exps.items():
                arr[idx, k] += v
        table[c] = arr
    return els, table


def kernel_report(n: int, group: FiniteAbelianGroup) -> dict:
    """
    Compare, inside the degree-n descent algebra over the characters, the
    kernel of theta_G with the elements pairing to zero with everything.
    """
    cs = group.dual().colour_set()
    words = mr_word_basis(n, cs)
    images = [{lam: v for lam, v in theta_G(y).coeffs.items()} for _, y in words]
    gram = [{j: pairing(y, z) for j, (_, z) in enumerate(words)} for _, y in words]
    ker_theta = relations(images)
    ker_pair = relations(gram)
    as_dicts = lambda vs: [{i: v for i, v in enumerate(vec) if v} for vec in vs]
    basis_elements = []
    for vec in ker_theta:
        el = zero(cs)
        for coef, (_, y) in zip(vec, words):
            if coef:
                el = el + coef * y
        basis_elements.append(el)
    return {
        "dim": len(words),
        "kernel_dim": len(ker_theta),
        "expected_kernel_dim": len(words) - len(bpartitions(n, cs)),
        "equal": same_span(as_dicts(ker_theta), as_dicts(ker_pair)),
        "kernel_basis": basis_elements,
    }


def kernel_equals_pairing_kernel(n: int, group: FiniteAbelianGroup) -> bool:
    report = kernel_report(n, group)
    return report["equal"] and report["kernel_dim"] == report["expected_kernel_dim"]


def is_nilpotent(x: AlgebraElement, bound: int) -> bool:
    power = x
    for _ in range(bound):
        if not power:
            return True
        power = internal_product(power, x)
    return not power


def dual_homomorphism(f: Callable, source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> dict:
    """
    For f: source -> target, the map on character labels sending a
    character of target to its composite with f.
    """
    src_chars, tgt_chars = source.dual(), target.dual()
    out = {}
    for chi in tgt_chars.elements():
        for gamma in src_chars.elements():
            if all(
                CyclotomicValue.from_exponents(source.exponent, {source.bracket(gamma, g): 1})
                == CyclotomicValue.from_exponents(target.exponent, {target.bracket(chi, f(g)): 1})
                for g in source.elements()
            ):
                out[tgt_chars.label(chi)] = src_chars.label(gamma)
                break
        else:
            raise ValueError("f is not a homomorphism")
    return out


def functorial_map(f: Callable, source: FiniteAbelianGroup, target: FiniteAbelianGroup,
                   x: AlgebraElement) -> AlgebraElement:
    """Relabel the colours of x (characters of target) through the dual of f."""
    table = dual_homomorphism(f, source, target)
    return x.map_colours(table.__getitem__, source.dual().colour_set())
