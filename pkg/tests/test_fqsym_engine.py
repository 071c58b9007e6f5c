from functools import reduce
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathdescent.coloured_core import (
    BComposition, ColourSet, ColouredPermutation, all_coloured_permutations,
    bcompositions, star,
)
from wreathdescent.fqsym_engine import (
    AlgebraElement, DegreeCapExceeded, NotInSubspace, Tensor, all_basis_elements,
    basis, coproduct, counit, descent_class, expand_in_mr_basis, from_word_coordinates,
    internal_product, iterated_coproduct, mr_generator, mr_internal_rule, mr_product,
    mr_word_basis, mr_word_coordinates, orthogonal_complement, pairing, tau, unit, zero,
)
from wreathdescent.linalg import rank, same_span
from wreathdescent.perm_core import standardize
from wreathdescent.rso_tableaux import atkinson_neighbours
from wreathdescent.solomon_characters import FiniteAbelianGroup

from conftest import PLAIN2, Z2_CHARS, Z3_CHARS, coloured_permutations


def restrict(gamma, positions):
    """The coloured permutation read off the given positions, standardized."""
    values = [gamma.perm[i] for i in positions]
    return ColouredPermutation(tuple(gamma.colours[v - 1] for v in sorted(values)), standardize(values))


def brute_external(alpha, beta, cs):
    n, m = alpha.n, beta.n
    out = {}
    for gamma in all_coloured_permutations(n + m, cs):
        if restrict(gamma, range(n)) == alpha and restrict(gamma, range(n, n + m)) == beta:
            out[gamma] = 1
    return AlgebraElement(out, cs)


def brute_coproduct(alpha, cs):
    out = {}
    for k in range(alpha.n + 1):
        low = [i for i, v in enumerate(alpha.perm) if v <= k]
        high = [i for i, v in enumerate(alpha.perm) if v > k]
        key = (restrict(alpha, low), restrict(alpha, high))
        out[key] = out.get(key, 0) + 1
    return Tensor(out, cs)


def monomial_matrix(alpha, group, cs):
    """(a; sigma) as diag(a) P_sigma over the complex numbers, for a cyclic group."""
    e = group.exponent
    n = alpha.n
    M = np.zeros((n, n), dtype=complex)
    for j in range(n):
        i = alpha.perm[j] - 1
        (k,) = group.dual().element(alpha.colours[i])
        M[i, j] = np.exp(2j * np.pi * k / e)
    return M


def elements_of(cs, max_n=3, min_n=0, max_terms=3):
    term = st.tuples(coloured_permutations(cs, max_n=max_n, min_n=min_n), st.integers(-3, 3))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: reduce(lambda a, b: a + b, [v * basis(t, cs) for t, v in ts], zero(cs)))


@st.composite
def homogeneous(draw, cs, n, max_terms=3):
    ts = draw(st.lists(st.tuples(coloured_permutations(cs, max_n=n, min_n=n), st.integers(-3, 3)),
                       min_size=1, max_size=max_terms))
    return reduce(lambda a, b: a + b, [v * basis(t, cs) for t, v in ts], zero(cs))


def test_six_term_product():
    cs = ColourSet.plain(["v1", "v2", "w1", "w2"])
    a = basis(ColouredPermutation(("v1", "v2"), (1, 2)), cs)
    b = basis(ColouredPermutation(("w2", "w1"), (2, 1)), cs)
    assert sorted("".join(map(str, g.perm)) for g in (a * b).terms) == \
        ["1243", "1342", "1432", "2341", "2431", "3421"]


def test_five_term_coproduct():
    cs = ColourSet.plain(["v1", "v2", "v3", "v4"])
    alpha = ColouredPermutation.from_positions((2, 3, 1, 4), ("v1", "v2", "v3", "v4"))
    t = coproduct(basis(alpha, cs))
    assert len(t.terms) == 5
    perms = sorted(("".join(map(str, a.perm)), "".join(map(str, b.perm))) for a, b in t.terms)
    assert perms == sorted([("", "2314"), ("1", "123"), ("21", "12"), ("231", "1"), ("2314", "")])


@given(coloured_permutations(PLAIN2, max_n=3), coloured_permutations(PLAIN2, max_n=2))
def test_external_product_matches_restriction_oracle(alpha, beta):
    got = basis(alpha, PLAIN2) * basis(beta, PLAIN2)
    assert got == brute_external(alpha, beta, PLAIN2)
    assert len(got) == comb(alpha.n + beta.n, alpha.n)


@given(coloured_permutations(PLAIN2, max_n=5))
def test_coproduct_matches_value_cut_oracle(alpha):
    assert coproduct(basis(alpha, PLAIN2)) == brute_coproduct(alpha, PLAIN2)


@given(elements_of(PLAIN2), elements_of(PLAIN2))
def test_coproduct_is_multiplicative(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@given(elements_of(PLAIN2, max_n=2), elements_of(PLAIN2, max_n=2), elements_of(PLAIN2, max_n=2))
def test_product_is_associative_with_unit(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert unit(PLAIN2) * x == x == x * unit(PLAIN2)


@given(elements_of(PLAIN2, max_n=4))
def test_coassociative_and_counital(x):
    left = {}
    for (a, b), v in coproduct(x).terms.items():
        for (a1, a2), w in coproduct(basis(a, PLAIN2)).terms.items():
            left[a1, a2, b] = left.get((a1, a2, b), 0) + v * w
    assert {k: v for k, v in left.items() if v} == iterated_coproduct(x, 3)
    total = zero(PLAIN2)
    for (a, b), v in coproduct(x).terms.items():
        total = total + v * counit(basis(a, PLAIN2)) * basis(b, PLAIN2)
    assert total == x


@pytest.mark.parametrize("cs", [Z2_CHARS, Z3_CHARS], ids=["Z2", "Z3"])
def test_internal_product_matches_monomial_matrices(cs):
    group = FiniteAbelianGroup((len(cs),))
    els = all_coloured_permutations(2, cs) + all_coloured_permutations(3, cs)[::7]
    for a in els:
        for b in els:
            if a.n != b.n:
                continue
            (prod,) = (basis(a, cs) @ basis(b, cs)).terms
            lhs = monomial_matrix(a, group, cs) @ monomial_matrix(b, group, cs)
            assert np.allclose(lhs, monomial_matrix(prod, group, cs))


def test_internal_product_examples():
    a = basis(ColouredPermutation(("s", "t"), (2, 1)), Z2_CHARS)
    b = basis(ColouredPermutation(("s", "s"), (2, 1)), Z2_CHARS)
    assert a @ b == basis(ColouredPermutation(("t", "s"), (1, 2)), Z2_CHARS)
    with pytest.raises(ValueError):
        basis(ColouredPermutation(("a",), (1,)), PLAIN2) @ basis(ColouredPermutation(("a",), (1,)), PLAIN2)


@given(homogeneous(Z3_CHARS, 3))
def test_internal_unit(x):
    e = unit(Z3_CHARS, 3)
    assert e @ x == x == x @ e


@given(homogeneous(Z2_CHARS, 3), homogeneous(Z2_CHARS, 3), homogeneous(Z2_CHARS, 3))
def test_internal_product_associative_and_pairing_symmetric(x, y, z):
    assert (x @ y) @ z == x @ (y @ z)
    assert pairing(x @ y, z) == pairing(x, y @ z)
    assert pairing(x, y) == pairing(y, x)
    assert pairing(x, y) == tau(x @ y)


@pytest.mark.parametrize("n", range(0, 5))
def test_pairing_is_perfect(n):
    cs = ColourSet.plain("ab", {"a": "b", "b": "a"})
    els = all_coloured_permutations(n, cs)
    for a in els:
        assert pairing(basis(a, cs), basis(star(a, cs), cs)) == 1
    for a in els[:20]:
        assert sum(pairing(basis(a, cs), basis(b, cs)) for b in els) == 1


@given(elements_of(PLAIN2, max_n=2), elements_of(PLAIN2, max_n=2), homogeneous(PLAIN2, 3))
def test_pairing_adjoint_to_coproduct(x, y, z):
    rhs = sum(v * pairing(x, basis(a, PLAIN2)) * pairing(y, basis(b, PLAIN2))
              for (a, b), v in coproduct(z).terms.items())
    assert pairing(x * y, z) == rhs


def test_tau_examples():
    assert tau(unit(Z3_CHARS, 3)) == 1
    assert tau(basis(ColouredPermutation(("t", "t"), (2, 1)), Z2_CHARS)) == 0
    assert tau(mr_product(BComposition.of((2, "t"), (1, "t")), Z2_CHARS)) == 1
    assert tau(mr_product(BComposition.of((2, "t"), (1, "s")), Z2_CHARS)) == 0


def test_generator_errors_and_cap():
    with pytest.raises(ValueError):
        mr_generator(0, "a", PLAIN2)
    with pytest.raises(DegreeCapExceeded):
        all_basis_elements(9, PLAIN2)


def test_coproduct_of_generator():
    y = mr_generator(3, "a", PLAIN2)
    expected = {}
    for k in range(4):
        left = unit(PLAIN2) if k == 0 else mr_generator(k, "a", PLAIN2)
        right = unit(PLAIN2) if k == 3 else mr_generator(3 - k, "a", PLAIN2)
        (a,), (b,) = left.terms, right.terms
        expected[a, b] = 1
    assert coproduct(y) == Tensor(expected, PLAIN2)


@pytest.mark.parametrize("n", range(1, 5))
def test_descent_classes_by_moebius_inversion(n):
    for c in bcompositions(n, PLAIN2):
        rhs = zero(PLAIN2)
        for d in c.coarsenings():
            rhs = rhs + (-1) ** (len(c) - len(d)) * mr_product(d, PLAIN2)
        assert descent_class(c, PLAIN2) == rhs


def test_mr_product_is_product_of_generators():
    c = BComposition.of((2, "a"), (1, "b"), (1, "a"))
    gens = [mr_generator(k, b, PLAIN2) for k, b in c.pairs]
    assert mr_product(c, PLAIN2) == reduce(lambda a, b: a * b, gens)


@pytest.mark.parametrize("n", range(1, 4))
def test_word_basis_is_free(n):
    words = mr_word_basis(n, PLAIN2)
    assert rank([y.terms for _, y in words]) == len(bcompositions(n, PLAIN2))
    for c, y in words:
        assert mr_word_coordinates(y) == {c: 1}
        assert from_word_coordinates({c: 1}, PLAIN2) == y


def test_single_nontrivial_element_is_not_in_subspace():
    with pytest.raises(NotInSubspace) as info:
        expand_in_mr_basis(basis(ColouredPermutation(("a", "a", "a"), (1, 3, 2)), PLAIN2))
    assert info.value.residual
    with pytest.raises(ValueError):
        expand_in_mr_basis(unit(PLAIN2, 1) + unit(PLAIN2, 2))


@pytest.mark.parametrize("n", range(1, 4))
def test_descent_algebra_closed_under_operations(n):
    words = [y for _, y in mr_word_basis(n, Z2_CHARS)]
    for y in words:
        for z in words:
            expand_in_mr_basis(y @ z)
    for y in words:
        # group the coproduct by its left factor; each group's right sum and,
        # dually, each degree piece of the left sums lie in the descent algebra
        t = coproduct(y)
        for k in range(n + 1):
            rights = {}
            for (a, b), v in t.terms.items():
                if a.n == k:
                    rights.setdefault(a, zero(Z2_CHARS))
                    rights[a] = rights[a] + v * basis(b, Z2_CHARS)
            for el in rights.values():
                expand_in_mr_basis(el)


@pytest.mark.parametrize("n", range(1, 4))
def test_polar_of_descent_algebra_spanned_by_atkinson_differences(n):
    words = [y for _, y in mr_word_basis(n, PLAIN2)]
    polar = orthogonal_complement(words, n, PLAIN2)
    diffs = []
    for a in all_coloured_permutations(n, PLAIN2):
        for b in atkinson_neighbours(a):
            diffs.append((basis(a, PLAIN2) - basis(b, PLAIN2)).terms)
    assert same_span([p.terms for p in polar], diffs)


@pytest.mark.parametrize("n", range(1, 4))
def test_matrix_rule_matches_internal_product(n):
    for c in bcompositions(n, Z3_CHARS):
        for d in bcompositions(n, Z3_CHARS)[::3]:
            assert mr_internal_rule(c, d, Z3_CHARS) == internal_product(
                mr_product(c, Z3_CHARS), mr_product(d, Z3_CHARS))
    with pytest.raises(ValueError):
        mr_internal_rule(BComposition.of((1, "t")), BComposition.of((2, "t")), Z2_CHARS)


def test_mixed_degree_internal_product_drops_cross_terms():
    x = unit(Z2_CHARS, 1) + unit(Z2_CHARS, 2)
    assert x @ unit(Z2_CHARS, 2) == unit(Z2_CHARS, 2)


def test_element_json_round_trip():
    x = 3 * mr_product(BComposition.of((1, "a"), (1, "b")), PLAIN2) - basis(
        ColouredPermutation(("a",), (1,)), PLAIN2)
    assert AlgebraElement.from_json(x.to_json(), PLAIN2) == x
