"""
Named identity suites with exact pass/fail reports.

Each suite takes a :class:`SuiteParameters` and returns a
:class:`VerificationReport`; the first counterexamples are kept in a
serializable form.  Randomized suites draw from ``random.Random(seed)``.

>>> run_suite("pentagon", SuiteParameters(degree=3, samples=10)).passed
True
"""

__all__ = ["SuiteParameters", "VerificationReport", "SUITES", "run_suite", "suite_names"]

import json
import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Callable

import numpy as np

from .coloured_core import (
    BComposition, ColourSet, ColouredPermutation, all_coloured_permutations,
    bcompositions, descent_composition_B, receding_composition, refines_B, star,
)
from .coloured_symfun import (
    HMonomialExpansion, bpartitions, h_to_schur, lambda_pairing, schur_coproduct, theta_B,
)
from .fqsym_engine import (
    AlgebraElement, all_basis_elements, basis, coproduct, counit, descent_class,
    internal_product, iterated_coproduct, mr_internal_rule, mr_product,
    mr_word_basis, mr_word_coordinates, orthogonal_complement, pairing, tau, unit, zero,
)
from .hyperoctahedral import (
    CHARACTER_COLOURS, HYPEROCTAHEDRAL_GROUP, SignedComposition, as_group_element,
    parabolic_index, signed_compositions, tilde_character_value, tilde_theta, xtilde,
    z_element,
)
from .linalg import rank, relations, same_span
from .perm_core import (
    all_permutations, colr, compose, compositions, coset_reps, distinguished_rep,
    double_coset, inverse, margin_matrices, standardize,
)
from .qsym_words import (
    abelianize, expand_F_in_M, fundamental_F, monomial_M, phi, std_B, weight_composition,
    words, CSeries,
)
from .rso_tableaux import (
    BTableau, atkinson_neighbours, closure_classes, coplactic_element, coplactic_fibers,
    knuth_neighbours, plactic_fibers, rso, rso_inverse, standard_btableaux,
    tableau_descent_composition,
)
from .solomon_characters import (
    FiniteAbelianGroup, character_value, functorial_map, is_nilpotent,
    kernel_report, parse_group, phi_tot, reduce_values, symmetry_check,
    theta_G, value_table,
)


@dataclass(frozen=True)
class SuiteParameters:
    degree: int = 3
    colours: int = 2
    alphabet: int = 0       # 0 means: the degree, then the degree plus one
    group: str = "Z2"
    seed: int = 0
    samples: int = 200


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def check(self, ok: bool, counterexample: Callable = None):
        """Count one check; on failure record ``counterexample()`` (first 5 kept)."""
        self.checks += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(counterexample() if counterexample else {})
        elif not ok:
            self.failures.append(None)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": self.status,
            "checks": self.checks,
            "failure_count": len(self.failures),
            "failures": [f for f in self.failures if f is not None],
            "notes": self.notes,
        }

    def to_text(self) -> str:
        line = f"{self.suite}: {self.status} ({self.checks} checks"
        line += f", {len(self.failures)} failed)" if self.failures else ")"
        extra = [f"  {n}" for n in self.notes]
        extra += ["  counterexample: " + json.dumps(f, sort_keys=True) for f in self.failures if f]
        return "\n".join([line] + extra)


SUITES: dict[str, Callable] = {}


def suite(name):
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


def suite_names() -> list[str]:
    return sorted(SUITES)


def run_suite(name: str, params: SuiteParameters = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    params = params or SuiteParameters()
    report = VerificationReport(name, asdict(params))
    SUITES[name](params, report)
    return report


def _plain(k: int) -> ColourSet:
    return ColourSet.plain("abcdefgh"[:k])


def _cyclic(k: int) -> ColourSet:
    """Characters of Z/k as a colour set with its group law."""
    return FiniteAbelianGroup((k,)).dual().colour_set()


def _cp(perm: str, colours) -> ColouredPermutation:
    return ColouredPermutation(tuple(colours), tuple(int(ch) for ch in perm))


def _el(terms, cs) -> dict:
    return AlgebraElement(dict(terms), cs).to_json()


# ---------------------------------------------------------------- examples

@suite("worked-examples")
def _worked_examples(p, r):
    r.check(standardize("bcbaba") == (3, 6, 4, 1, 5, 2), lambda: {"standardize": "bcbaba"})
    X22 = {tuple(int(ch) for ch in w) for w in ("1234", "1324", "1423", "2314", "2413", "3412")}
    r.check(set(coset_reps((2, 2))) == X22, lambda: {"coset_reps": [2, 2]})

    cs = ColourSet.plain(["v1", "v2", "v3", "v4", "w1", "w2"])
    a = basis(_cp("12", ("v1", "v2")), cs)
    b = basis(_cp("21", ("w2", "w1")), cs)
    expected = {}
    for perm, colours in [("1243", "v1 v2 w2 w1"), ("1342", "v1 w2 v2 w1"), ("1432", "v1 w2 w1 v2"),
                          ("2341", "w2 v1 v2 w1"), ("2431", "w2 v1 w1 v2"), ("3421", "w2 w1 v1 v2")]:
        expected[_cp(perm, colours.split())] = 1
    r.check((a * b).terms == expected, lambda: {"product": _el((a * b).terms, cs)})

    alpha = ColouredPermutation(("v3", "v1", "v2", "v4"), (2, 3, 1, 4))
    E = ColouredPermutation((), ())
    exp_cop = {
        (E, alpha): 1,
        (ColouredPermutation(("v3",), (1,)), ColouredPermutation(("v1", "v2", "v4"), (1, 2, 3))): 1,
        (ColouredPermutation(("v3", "v1"), (2, 1)), ColouredPermutation(("v2", "v4"), (1, 2))): 1,
        (ColouredPermutation(("v3", "v1", "v2"), (2, 3, 1)), ColouredPermutation(("v4",), (1,))): 1,
        (alpha, E): 1,
    }
    got = coproduct(basis(alpha, cs)).terms
    r.check(got == exp_cop, lambda: {"coproduct": [[str(x), str(y), v] for (x, y), v in got.items()]})

    ab = _plain(2)
    alpha = ColouredPermutation.from_positions((1, 4, 2, 6, 7, 3, 5), "aaababb")
    r.check(alpha.colours == tuple("aababba"), lambda: {"colours": alpha.colours})
    D = BComposition.of((2, "a"), (1, "a"), (1, "b"), (1, "a"), (2, "b"))
    R = BComposition.of((2, "a"), (1, "b"), (1, "a"), (1, "b"), (1, "b"), (1, "a"))
    r.check(descent_composition_B(alpha) == D, lambda: {"D": str(descent_composition_B(alpha))})
    r.check(receding_composition(alpha, ab) == R, lambda: {"R": str(receding_composition(alpha, ab))})

    P, Q = rso(alpha)
    expected_rso = (((1, 2, 7), (4,)), ((1, 2, 5), (3,)), ((3, 5), (6,)), ((4, 7), (6,)))
    got_rso = (P["a"].rows, Q["a"].rows, P["b"].rows, Q["b"].rows)
    r.check(got_rso == expected_rso, lambda: {"rso": [P.to_json(), Q.to_json()]})

    T = BTableau.of({"a": [[1, 2, 5], [3]], "b": [[4, 7], [6]]})
    r.check(tableau_descent_composition(T) == D, lambda: {"D(T)": str(tableau_descent_composition(T))})

    one = ColourSet(("e",), table=(("e",),))

    def elt(*ws):
        return AlgebraElement({_cp(w, "e" * len(w)): 1 for w in ws}, one)

    tT = elt("3142", "2143")
    y = (mr_product(BComposition.of((1, "e"), (2, "e"), (1, "e")), one)
         - mr_product(BComposition.of((3, "e"), (1, "e")), one)
         - mr_product(BComposition.of((1, "e"), (3, "e")), one)
         + mr_product(BComposition.of((4, "e")), one))
    r.check(y == elt("3142", "2143", "4132", "4231", "3241"), lambda: {"y": str(y)})
    r.check(tT == coplactic_element(BTableau.of({"e": [[1, 3], [2, 4]]}), one), lambda: {"t_T": str(tT)})
    prod = y @ tT
    expected_prod = elt("4321", "4231", "1324", "1234", "3421", "3412", "4312", "1423", "2413", "2314")
    r.check(prod == expected_prod, lambda: {"y.t_T": str(prod)})


# ---------------------------------------------------------------- bialgebra

def _random_basis(rng, n, cs):
    return basis(rng.choice(all_basis_elements(n, cs)), cs)


def _degrees(rng, parts, total):
    while True:
        ds = [rng.randint(0, total) for _ in range(parts)]
        if sum(ds) <= total:
            return ds


@suite("pentagon")
def _pentagon(p, r):
    cs = _plain(p.colours)
    rng = random.Random(p.seed)
    for _ in range(p.samples):
        m, n = _degrees(rng, 2, p.degree)
        x, y = _random_basis(rng, m, cs), _random_basis(rng, n, cs)
        r.check(coproduct(x * y) == coproduct(x) * coproduct(y), lambda: {"x": x.to_json(), "y": y.to_json()})


@suite("bialgebra-laws")
def _bialgebra_laws(p, r):
    cs = _plain(p.colours)
    rng = random.Random(p.seed)
    e = unit(cs)
    for _ in range(p.samples):
        a, b, c = _degrees(rng, 3, p.degree)
        x, y, z = (_random_basis(rng, k, cs) for k in (a, b, c))
        r.check((x * y) * z == x * (y * z), lambda: {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()})
        r.check(x * e == x == e * x, lambda: {"unit": x.to_json()})
        w = _random_basis(rng, min(p.degree, 4), cs)
        left, right = defaultdict(int), defaultdict(int)
        for (u, v), k in coproduct(w).terms.items():
            for (u1, u2), k1 in coproduct(basis(u, cs)).terms.items():
                left[u1, u2, v] += k * k1
            for (v1, v2), k2 in coproduct(basis(v, cs)).terms.items():
                right[u, v1, v2] += k * k2
        r.check(dict(left) == dict(right) == iterated_coproduct(w, 3), lambda: {"coassociativity": w.to_json()})
        lc, rc = zero(cs), zero(cs)
        for (u, v), k in coproduct(w).terms.items():
            lc = lc + k * counit(basis(u, cs)) * basis(v, cs)
            rc = rc + k * counit(basis(v, cs)) * basis(u, cs)
        r.check(lc == w == rc, lambda: {"counit": w.to_json()})


# ---------------------------------------------------------------- double cosets

@suite("double-coset")
def _double_coset(p, r):
    for n in range(1, p.degree + 1):
        for c in compositions(n):
            for d in compositions(n):
                covered = []
                Xc, Xd = coset_reps(c), coset_reps(d)
                for M in margin_matrices(c, d):
                    C = double_coset(M)
                    covered.append(C)
                    mids = [s for s in C if s in Xd]
                    union = [compose(x, s) for s in mids for x in Xc]
                    target = coset_reps(colr(M))
                    r.check(len(union) == len(set(union)) and set(union) == set(target),
                            lambda: {"c": c, "d": d, "M": M.to_json()})
                    rho = distinguished_rep(M)
                    r.check(rho in C and rho in Xd and inverse(rho) in Xc,
                            lambda: {"distinguished": M.to_json()})
                total = sum(len(C) for C in covered)
                r.check(total == len(all_permutations(n)) and set().union(*covered) == set(all_permutations(n)),
                        lambda: {"partition": [c, d]})


# ---------------------------------------------------------------- internal product

@suite("mr-rule")
def _mr_rule(p, r):
    cs = _cyclic(p.colours)
    for n in range(1, p.degree + 1):
        words_ = mr_word_basis(n, cs)
        for c, x in words_:
            for d, y in words_:
                r.check(internal_product(x, y) == mr_internal_rule(c, d, cs),
                        lambda: {"c": c.to_json(), "d": d.to_json()})


@suite("splitting")
def _splitting(p, r):
    cs = _cyclic(p.colours)
    rng = random.Random(p.seed)
    done = 0
    while done < p.samples:
        l = rng.randint(1, 3)
        degs = _degrees(rng, l, p.degree)
        n = sum(degs)
        if n == 0:
            continue
        done += 1
        c = rng.choice(bcompositions(n, cs))
        y = mr_product(c, cs)
        zs = [_random_basis(rng, k, cs) for k in degs]
        lhs = internal_product(y, reduce(lambda a, b: a * b, zs))
        rhs = zero(cs)
        for parts, v in iterated_coproduct(y, l).items():
            term = unit(cs)
            for part, z in zip(parts, zs):
                term = term * internal_product(basis(part, cs), z)
            rhs = rhs + v * term
        r.check(lhs == rhs, lambda: {"y": c.to_json(), "z": [z.to_json() for z in zs]})


# ---------------------------------------------------------------- Solomon map

def _groups(p):
    return [parse_group(g) for g in p.group.split(",")]


def _pointwise(A, B, e):
    out = np.zeros_like(A)
    for i in range(e):
        for j in range(e):
            out[:, (i + j) % e] += A[:, i] * B[:, j]
    return out


@suite("solomon-homomorphism")
def _solomon(p, r):
    for G in _groups(p):
        chars = G.dual().colour_set()
        e = G.exponent
        for n in range(1, p.degree + 1):
            els, table = value_table(n, G)

            def values(x):
                out = np.zeros((len(els), e), dtype=object)
                for c, v in mr_word_coordinates(x).items():
                    out = out + v * table[c]
                return out

            words_ = mr_word_basis(n, chars)
            vals = {c: values(y) for c, y in words_}
            for c, x in words_:
                for d, y in words_:
                    lhs = reduce_values(values(mr_internal_rule(c, d, chars)), e)
                    rhs = reduce_values(_pointwise(vals[c], vals[d], e), e)
                    r.check(bool((lhs == rhs).all()), lambda: {"G": G.cyclic_orders, "x": c.to_json(), "y": d.to_json()})
            info = kernel_report(n, G)
            r.check(info["equal"] and info["kernel_dim"] == info["expected_kernel_dim"],
                    lambda: {"G": G.cyclic_orders, "n": n, "kernel": info["kernel_dim"]})
            for z in info["kernel_basis"]:
                r.check(is_nilpotent(z, info["dim"] + 1), lambda: {"nilpotent": z.to_json()})
            for c, y in words_:
                r.check(tau(y) == phi_tot(theta_G(y), G), lambda: {"tau": c.to_json()})


@suite("symmetry")
def _symmetry(p, r):
    for G in _groups(p):
        for n in range(1, p.degree + 1):
            for c, y in mr_word_basis(n, G.dual().colour_set()):
                for d, x in mr_word_basis(n, G.colour_set()):
                    a, b = symmetry_check(y, x, G)
                    r.check(a == b, lambda: {"G": G.cyclic_orders, "y": c.to_json(), "x": d.to_json(),
                                             "values": [repr(a), repr(b)]})


@suite("functoriality")
def _functoriality(p, r):
    """One instance: reduction Z/4 -> Z/2."""
    source, target = FiniteAbelianGroup((4,)), FiniteAbelianGroup((2,))
    f = lambda g: (g[0] % 2,)
    relabel = lambda b: target.label(f(source.element(b)))
    for n in range(1, min(p.degree, 3) + 1):
        for c, x in mr_word_basis(n, target.dual().colour_set()):
            fx = functorial_map(f, source, target, x)
            for w in all_basis_elements(n, source.colour_set()):
                lhs = character_value(fx, basis(w, source.colour_set()), source)
                fw = ColouredPermutation(tuple(relabel(b) for b in w.colours), w.perm)
                rhs = character_value(x, basis(fw, target.colour_set()), target)
                r.check(lhs == rhs, lambda: {"x": c.to_json(), "w": w.to_json()})


# ---------------------------------------------------------------- type B

@suite("hyperoctahedral")
def _hyperoctahedral(p, r):
    cs = CHARACTER_COLOURS
    for n in range(1, p.degree + 1):
        xs = [xtilde(C) for C in signed_compositions(n)]
        r.check(len(xs) == 2 * 3 ** (n - 1) and rank([x.terms for x in xs]) == len(mr_word_basis(n, cs)),
                lambda: {"basis": n})
        both = [x.terms for x in xs] + [y.terms for _, y in mr_word_basis(n, cs)]
        r.check(rank(both) == len(xs), lambda: {"span": n})
    for n in range(0, p.degree + 2):
        ys = lambda k: unit(cs) if k == 0 else mr_product(BComposition.of((k, "s")), cs)
        left = sum(((-1) ** i * (z_element(i) * ys(n - i)) for i in range(n + 1)), zero(cs))
        right = sum(((-1) ** i * (ys(n - i) * z_element(i)) for i in range(n + 1)), zero(cs))
        r.check(left == right == (unit(cs) if n == 0 else zero(cs)), lambda: {"alternating": n})
    X = lambda *parts: xtilde(SignedComposition(parts))
    y2s = mr_product(BComposition.of((2, "s")), cs)
    r.check(y2s == X(-1, -1) - X(1, -1) + X(2) - X(-2), lambda: {"identity": "y_2s"})
    r.check(theta_G(y2s) != tilde_theta(y2s), lambda: {"discrimination": str(theta_G(y2s))})
    for n in range(1, min(p.degree, 4) + 1):
        for C in signed_compositions(n):
            v = tilde_character_value(xtilde(C), unit(cs, n))
            r.check(v == parabolic_index(C), lambda: {"index": C.to_json(), "value": repr(v)})
    a = tilde_character_value(X(-2), X(1, 1))
    b = tilde_character_value(X(1, 1), X(-2))
    r.notes.append(f"twisted values: {a!r} and {b!r}")
    r.check(a == 6 and b == 4, lambda: {"values": [repr(a), repr(b)]})


@suite("tilde-symmetry-counterexample")
def _tilde_counterexample(p, r):
    """Passes when the twisted map fails symmetry (6 against 4) while theta_G keeps it."""
    X = lambda *parts: xtilde(SignedComposition(parts))
    a = tilde_character_value(X(-2), X(1, 1))
    b = tilde_character_value(X(1, 1), X(-2))
    r.notes.append(f"twisted: {a!r} vs {b!r}")
    r.check(a == 6 and b == 4 and a != b, lambda: {"values": [repr(a), repr(b)]})
    s1, s2 = symmetry_check(X(-2), as_group_element(X(1, 1)), HYPEROCTAHEDRAL_GROUP)
    r.notes.append(f"untwisted: {s1!r} vs {s2!r}")
    r.check(s1 == s2, lambda: {"untwisted": [repr(s1), repr(s2)]})


# ---------------------------------------------------------------- tableaux

def _colour_sets(k):
    """Plain colours, and for two colours also the swapping involution."""
    out = [_plain(k)]
    if k == 2:
        out.append(ColourSet.plain("ab", {"a": "b", "b": "a"}))
    return out


@suite("okada-duality")
def _okada(p, r):
    for cs in _colour_sets(p.colours):
        for n in range(1, p.degree + 1):
            for a in all_coloured_permutations(n, cs):
                P, Q = rso(a)
                r.check(rso_inverse(P, Q) == a, lambda: {"inverse": a.to_json()})
                r.check(rso(star(a, cs))[1] == P.star(cs), lambda: {"duality": a.to_json()})
                r.check(descent_composition_B(a) == tableau_descent_composition(Q), lambda: {"descent": a.to_json()})
            pairs = {(P, Q) for P, Q in map(rso, all_coloured_permutations(n, cs))}
            r.check(len(pairs) == len(all_coloured_permutations(n, cs)), lambda: {"bijection": n})


@suite("knuth-fibers")
def _knuth(p, r):
    for cs in _colour_sets(p.colours):
        for n in range(1, p.degree + 1):
            els = all_coloured_permutations(n, cs)
            classes = closure_classes(els, knuth_neighbours)
            fibers = {frozenset(v) for v in plactic_fibers(n, cs).values()}
            r.check({frozenset(c) for c in classes} == fibers, lambda: {"n": n, "colours": cs.to_json()})


@suite("atkinson-fibers")
def _atkinson(p, r):
    for cs in _colour_sets(p.colours):
        for n in range(1, p.degree + 1):
            els = all_coloured_permutations(n, cs)
            classes = closure_classes(els, atkinson_neighbours)
            fibers = defaultdict(set)
            for a in els:
                fibers[receding_composition(a, cs)].add(a)
            r.check({frozenset(c) for c in classes} == {frozenset(v) for v in fibers.values()},
                    lambda: {"n": n, "colours": cs.to_json()})


def _theta_B_tensor(t, cs):
    """(Theta_B x Theta_B) of a tensor whose factors are coplactic combinations."""
    sizes = {}

    def fiber(a):
        if a not in sizes:
            T = rso(a)[1]
            sizes[a] = (T.shape(), len(coplactic_fibers(a.n, cs)[T]))
        return sizes[a]

    out = defaultdict(Fraction)
    for (u, v), k in t.terms.items():
        (lu, su), (lv, sv) = fiber(u), fiber(v)
        out[lu, lv] += Fraction(k, su * sv)
    return {key: int(v) for key, v in out.items() if v}


@suite("theta-B")
def _theta_B(p, r):
    rng = random.Random(p.seed)
    for cs in _colour_sets(p.colours):
        tabs = {n: standard_btableaux(n, cs) for n in range(0, p.degree + 1)}
        for n in range(1, p.degree + 1):
            images = []
            for T in tabs[n]:
                tT = coplactic_element(T, cs)
                image = theta_B(tT)
                images.append(image.coeffs)
                r.check(image.coeffs == {T.shape(): 1}, lambda: {"t_T": T.to_json()})
                r.check(_theta_B_tensor(coproduct(tT), cs) == schur_coproduct(image),
                        lambda: {"coproduct": T.to_json()})
            ker = len(relations(images))
            r.check(ker == len(tabs[n]) - len(bpartitions(n, cs)), lambda: {"kernel": n, "dim": ker})
            for T in tabs[n]:
                for U in tabs[n]:
                    a, b = coplactic_element(T, cs), coplactic_element(U, cs)
                    r.check(pairing(a, b) == lambda_pairing(theta_B(a), theta_B(b), cs),
                            lambda: {"pairing": [T.to_json(), U.to_json()]})
            for c in bcompositions(n, cs):
                h = HMonomialExpansion({tuple(c.pairs): 1})
                r.check(theta_B(mr_product(c, cs)) == h_to_schur(h), lambda: {"mr": c.to_json()})
        for _ in range(min(p.samples, 60)):
            m, n = _degrees(rng, 2, p.degree)
            if not tabs[m] or not tabs[n]:
                continue
            T, U = rng.choice(tabs[m]), rng.choice(tabs[n])
            x, y = coplactic_element(T, cs), coplactic_element(U, cs)
            r.check(theta_B(x * y) == theta_B(x) * theta_B(y), lambda: {"product": [T.to_json(), U.to_json()]})


@suite("descent-multiplicity")
def _descent_multiplicity(p, r):
    for cs in _colour_sets(p.colours)[:1]:
        for n in range(1, p.degree + 1):
            counts = defaultdict(lambda: defaultdict(int))
            for T in standard_btableaux(n, cs):
                counts[tableau_descent_composition(T)][T.shape()] += 1
            for c in bcompositions(n, cs):
                expected = {lam: k for lam, k in counts[c].items()}
                got = theta_B(descent_class(c, cs)).coeffs
                r.check(got == expected, lambda: {"c": c.to_json()})


# ---------------------------------------------------------------- words

def _alphabets(p, n):
    return [p.alphabet] if p.alphabet else [n, n + 1]


@suite("word-realization")
def _word_realization(p, r):
    cs = _plain(p.colours)
    rng = random.Random(p.seed)
    for n in range(1, p.degree + 1):
        els = all_coloured_permutations(n, cs)
        for m in _alphabets(p, n):
            images = [abelianize(phi(a, m, cs)) for a in els]
            for a, image in zip(els, images):
                r.check(bool(words(a, m, cs)), lambda: {"empty fiber": a.to_json(), "m": m})
                r.check(image == fundamental_F(receding_composition(a, cs), m, cs),
                        lambda: {"F_R": a.to_json(), "m": m})
                for w in words(a, m, cs)[:3]:
                    r.check(std_B(w, cs) == a, lambda: {"std": a.to_json()})
                    r.check(refines_B(weight_composition(w, cs), receding_composition(a, cs)),
                            lambda: {"weight": a.to_json()})
            ker = relations([im.coeffs for im in images])
            perp = orthogonal_complement([y for _, y in mr_word_basis(n, cs)], n, cs)
            kv = [{i: v for i, v in enumerate(k) if v} for k in ker]
            pv = [{i: z[a] for i, a in enumerate(els) if z[a]} for z in perp]
            r.check(same_span(kv, pv), lambda: {"kernel": n, "m": m})
            Fs = [fundamental_F(c, m, cs).coeffs for c in bcompositions(n, cs)]
            r.check(rank(Fs) == len(Fs), lambda: {"independence": n, "m": m})
    for _ in range(min(p.samples, 40)):
        k, l = _degrees(rng, 2, p.degree)
        if k + l == 0:
            continue
        x, y = _random_basis(rng, k, cs), _random_basis(rng, l, cs)
        m = k + l + 1
        r.check(phi(x * y, m) == phi(x, m) * phi(y, m), lambda: {"x": x.to_json(), "y": y.to_json()})


@suite("fundamental-expansion")
def _fundamental_expansion(p, r):
    for k in range(1, p.colours + 1):
        cs = _plain(k)
        for n in range(1, p.degree + 1):
            for m in _alphabets(p, n):
                for c in bcompositions(n, cs):
                    total = CSeries({})
                    for I in expand_F_in_M(c, m, cs):
                        total = total + monomial_M(I, m, cs)
                    r.check(total == fundamental_F(c, m, cs), lambda: {"c": c.to_json(), "m": m})
