"""
Symmetric functions in one copy of the ring per colour.

An element is kept either on the Schur basis, indexed by B-partitions, or
as a combination of commutative monomials in the complete functions
``h_n(b)``.  Products and coproducts go through the monomials; the two
bases are related by Kostka numbers.

>>> kostka((2,), (1, 1)), kostka((1, 1), (1, 1)), kostka((1, 1), (2,))
(1, 1, 0)
>>> h_to_schur(HMonomialExpansion.of((1, "a"), (1, "a")))
SchurExpansion({a:(1, 1)}: 1, {a:(2,)}: 1)
"""

__all__ = [
    "Partition", "partitions", "conjugate", "kostka", "bpartitions",
    "SchurExpansion", "HMonomialExpansion", "h_to_schur", "schur_to_h",
    "schur_product", "schur_coproduct", "lambda_pairing", "omega_on_colour",
    "theta_B",
]

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, NewType, Sequence

from .coloured_core import BPartition, ColourSet
from .fqsym_engine import AlgebraElement
from .rso_tableaux import expand_in_coplactic_basis

# weakly decreasing positive parts
Partition = NewType("Partition", tuple[int, ...])


@lru_cache(maxsize=None)
def partitions(n: int, largest: int = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    """
    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """
    Number of semistandard tableaux of shape lam and weight mu.

    The entries equal to the last letter form a horizontal strip; strip it
    off and recurse.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    k = mu[-1]
    total = 0
    for inner in _remove_horizontal_strips(lam, k):
        total += kostka(inner, mu[:-1])
    return total


def _remove_horizontal_strips(lam, k):
    """Partitions nu inside lam with lam/nu a horizontal strip of size k."""
    lam = list(lam)
    out = []

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            rec(i + 1, left - take, acc + [lam[i] - take])

    rec(0, k, [])
    return out


def bpartitions(n: int, cs: ColourSet) -> list[BPartition]:
    """All B-partitions of total size n."""
    out = []
    labels = cs.elements

    def rec(i, left, acc):
        if i == len(labels) - 1:
            for lam in partitions(left):
                out.append(BPartition(tuple(acc + [(labels[i], lam)])))
            return
        for size in range(left + 1):
            for lam in partitions(size):
                rec(i + 1, left - size, acc + [(labels[i], lam)])

    if not labels:
        return [BPartition(())] if n == 0 else []
    rec(0, n, [])
    return out


@dataclass(eq=False)
class SchurExpansion:
    """An element of the coloured symmetric function ring on the Schur basis."""
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def single(cls, lam: BPartition, coeff: int = 1) -> "SchurExpansion":
        return cls({lam: coeff})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchurExpansion(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return SchurExpansion({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return schur_product(self, other)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, lam):
        return self.coeffs.get(lam, 0)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: str(kv[0]))

    def to_json(self) -> list:
        return [{"bpartition": lam.to_json(), "coeff": v} for lam, v in self.sorted_items()]

    @classmethod
    def from_json(cls, data) -> "SchurExpansion":
        return cls({BPartition.of(d["bpartition"]): int(d["coeff"]) for d in data})

    def __repr__(self):
        return "SchurExpansion(" + ", ".join(f"{k}: {v}" for k, v in self.sorted_items()) + ")"


@dataclass(eq=False)
class HMonomialExpansion:
    """
    Combination of commutative monomials in the generators h_n(b); a monomial
    is a sorted tuple of (n, colour) pairs.
    """
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = defaultdict(int)
        for mono, v in self.coeffs.items():
            if any(n < 1 for n, _ in mono):
                raise ValueError("generator degrees must be positive")
            clean[tuple(sorted(mono))] += v
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def of(cls, *generators) -> "HMonomialExpansion":
        return cls({tuple(generators): 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return HMonomialExpansion(out)

    def __rmul__(self, scalar: int):
        return HMonomialExpansion({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = defaultdict(int)
        for m1, u in self.coeffs.items():
            for m2, v in other.coeffs.items():
                out[tuple(sorted(m1 + m2))] += u * v
        return HMonomialExpansion(dict(out))

    def __eq__(self, other):
        return isinstance(other, HMonomialExpansion) and self.coeffs == other.coeffs


def _h_monomial_to_schur(mono) -> dict:
    by_colour = defaultdict(list)
    for n, b in mono:
        by_colour[b].append(n)
    factors = []
    for b, degrees in by_colour.items():
        mu = tuple(sorted(degrees, reverse=True))
        factors.append([(b, lam, kostka(lam, mu)) for lam in partitions(sum(mu)) if kostka(lam, mu)])
    out = {}
    for choice in product(*factors):
        coeff = 1
        for _, _, k in choice:
            coeff *= k
        out[BPartition(tuple((b, lam) for b, lam, _ in choice))] = coeff
    return out


def h_to_schur(x: HMonomialExpansion) -> SchurExpansion:
    out = defaultdict(int)
    for mono, v in x.coeffs.items():
        for lam, k in _h_monomial_to_schur(mono).items():
            out[lam] += v * k
    return SchurExpansion(dict(out))


@lru_cache(maxsize=None)
def _schur_in_h(lam: tuple[int, ...]) -> dict:
    """s_lam as a combination of h_mu, by unitriangularity of the Kostka matrix."""
    out = defaultdict(int)
    out[lam] += 1
    for nu in partitions(sum(lam)):
        if nu != lam and kostka(nu, lam):
            for mu, v in _schur_in_h(nu).items():
                out[mu] -= kostka(nu, lam) * v
    return {k: v for k, v in out.items() if v}


def schur_to_h(x: SchurExpansion) -> HMonomialExpansion:
    out = HMonomialExpansion({})
    for lam, v in x.coeffs.items():
        term = HMonomialExpansion({(): v})
        for b, part in lam.parts:
            term = term * HMonomialExpansion(
                {tuple((m, b) for m in mu): w for mu, w in _schur_in_h(part).items()}
            )
        out = out + term
    return out


def schur_product(x: SchurExpansion, y: SchurExpansion) -> SchurExpansion:
    return h_to_schur(schur_to_h(x) * schur_to_h(y))


def _h_coproduct(mono) -> dict:
    out = {((), ()): 1}
    for n, b in mono:
        new = defaultdict(int)
        for (l, r), v in out.items():
            for k in range(n + 1):
                nl = l + (((k, b),) if k else ())
                nr = r + (((n - k, b),) if n - k else ())
                new[tuple(sorted(nl)), tuple(sorted(nr))] += v
        out = new
    return out


def schur_coproduct(x: SchurExpansion) -> dict:
    """The coproduct with h_n(b) -> sum of h_k(b) (x) h_{n-k}(b), on Schur pairs."""
    out = defaultdict(int)
    for mono, v in schur_to_h(x).coeffs.items():
        for (l, r), w in _h_coproduct(mono).items():
            for lam, a in _h_monomial_to_schur(l).items():
                for mu, b in _h_monomial_to_schur(r).items():
                    out[lam, mu] += v * w * a * b
    return {k: v for k, v in out.items() if v}


def lambda_pairing(x: SchurExpansion, y: SchurExpansion, cs: ColourSet) -> int:
    """The form making s_lam dual to s_{lam*}."""
    return sum(v * y[lam.star(cs)] for lam, v in x.coeffs.items())


def omega_on_colour(x: SchurExpansion, b: str) -> SchurExpansion:
    """Conjugate the partition of colour b in every term."""
    out = {}
    for lam, v in x.coeffs.items():
        parts = tuple((c, conjugate(p) if c == b else p) for c, p in lam.parts)
        out[BPartition(parts)] = v
    return SchurExpansion(out)


def theta_B(x: AlgebraElement) -> SchurExpansion:
    """Send each coplactic element to the Schur function of its shape."""
    out = defaultdict(int)
    for n in x.degrees():
        for T, v in expand_in_coplactic_basis(x.homogeneous_part(n)).items():
            out[T.shape()] += v
    if not x.terms:
        return SchurExpansion({})
    return SchurExpansion(dict(out))
