from math import factorial, prod

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathdescent.coloured_core import BComposition, BPartition, ColouredPermutation, bcompositions
from wreathdescent.coloured_symfun import SchurExpansion, lambda_pairing, schur_product, theta_B
from wreathdescent.fqsym_engine import (
    NotInSubspace, basis, mr_generator, mr_product, mr_word_basis,
    pairing, tau, unit, zero,
)
from wreathdescent.perm_core import identity, sign
from wreathdescent.solomon_characters import (
    CyclotomicValue, FiniteAbelianGroup, InducedCharacter, character_value,
    dual_homomorphism, evaluate_induced, functorial_map, is_nilpotent,
    kernel_equals_pairing_kernel, kernel_report, parse_group, phi_tot,
    symmetry_check, theta_G, wreath_elements,
)

Z2 = FiniteAbelianGroup((2,))
Z3 = FiniteAbelianGroup((3,))
TRIVIAL = FiniteAbelianGroup((1,))


def group_inverse(alpha, group):
    cs = group.colour_set()
    for beta in wreath_elements(alpha.n, group):
        if basis(alpha, cs) @ basis(beta, cs) == unit(cs, alpha.n):
            return beta
    raise AssertionError("no inverse")


def brute_induced(ch, alpha, group):
    """(1/|H|) sum over the whole group of the linear character psi at g^-1 alpha g."""
    cs = group.colour_set()
    chars = group.dual()
    e = group.exponent
    block_of = [i for i, part in enumerate(ch.composition) for _ in range(part)]
    starts = [sum(ch.composition[:i]) for i in range(len(ch.composition))]
    H_order = prod(factorial(c) for c in ch.composition) * group.order ** ch.degree
    total = 0j
    x = basis(alpha, cs)
    for g in wreath_elements(alpha.n, group):
        g_inv = group_inverse(g, group)
        (h,) = (basis(g_inv, cs) @ x @ basis(g, cs)).terms
        if any(block_of[h.perm[i] - 1] != block_of[i] for i in range(h.n)):
            continue
        k = sum(group.bracket(chars.element(ch.colours[block_of[i]]), group.element(h.colours[i]))
                for i in range(h.n))
        value = np.exp(2j * np.pi * k / e)
        for b, flag in enumerate(ch.signs):
            if flag:
                s = starts[b]
                value *= sign(tuple(t - s for t in h.perm[s:s + ch.composition[b]]))
        total += value
    return total / H_order


def test_labels_and_parsing():
    assert Z2.labels() == ("g0", "g1") and Z2.dual().labels() == ("t", "s")
    assert Z3.dual().labels() == ("x0", "x1", "x2")
    assert parse_group("Z2xZ2").cyclic_orders == (2, 2)
    assert parse_group("Z/3").cyclic_orders == (3,)
    with pytest.raises(ValueError):
        parse_group("S3")
    with pytest.raises(ValueError):
        FiniteAbelianGroup((0,))
    with pytest.raises(ValueError):
        FiniteAbelianGroup((2,), role="other")


def test_cyclotomic_arithmetic():
    z3 = CyclotomicValue(3, (0, 1))
    assert 1 + z3 + z3 * z3 == 0
    z4 = CyclotomicValue(4, (0, 1))
    assert z4 * z4 == -1
    assert CyclotomicValue(2, (0, 1)).lift(4) == z4 * z4
    assert CyclotomicValue(6, (0, 0, 1)) == z3
    assert (z3 * 2).to_json() == {"order": 3, "coeffs": [0, 2, 0]}
    with pytest.raises(ValueError):
        z3.to_int()
    with pytest.raises(ValueError):
        z3.lift(4)


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_cyclotomic_equality_agrees_with_complex_value(coeffs):
    v = CyclotomicValue(6, tuple(coeffs))
    assert (v == 0) == bool(abs(complex(v)) < 1e-9)


@pytest.mark.parametrize("group,n", [(Z2, 2), (Z2, 3), (Z3, 2)], ids=["Z2-2", "Z2-3", "Z3-2"])
def test_induced_characters_match_the_averaging_formula(group, n):
    chars = group.dual().colour_set()
    els = wreath_elements(n, group)
    for c in bcompositions(n, chars)[::2]:
        for signs in {(False,) * len(c), (True,) * len(c)}:
            ch = InducedCharacter(c.parts, c.colours, signs)
            for alpha in els[::5]:
                got = complex(evaluate_induced(ch, basis(alpha, group.colour_set()), group))
                assert abs(got - brute_induced(ch, alpha, group)) < 1e-9


@pytest.mark.parametrize("n", range(1, 5))
def test_induced_degree(n):
    # the value at the identity is the index of the Young-type subgroup
    cs = Z2.colour_set()
    e = basis(ColouredPermutation(("g0",) * n, identity(n)), cs)
    for c in bcompositions(n, Z2.dual().colour_set()):
        ch = InducedCharacter.from_bcomposition(c)
        assert evaluate_induced(ch, e, Z2) == factorial(n) // prod(factorial(p) for p in c.parts)


def test_theta_on_generators_and_units():
    chars = Z3.dual().colour_set()
    assert theta_G(mr_generator(2, "x1", chars)) == SchurExpansion.single(BPartition.of({"x1": (2,)}))
    assert theta_G(unit(chars, 3)) == SchurExpansion.single(BPartition.of({"x0": (3,)}))
    with pytest.raises(NotInSubspace):
        theta_G(basis(ColouredPermutation(("x0",) * 3, (1, 3, 2)), chars))


@pytest.mark.parametrize("group", [Z2, Z3], ids=["Z2", "Z3"])
def test_theta_agrees_with_tableau_map_on_descent_algebra(group):
    chars = group.dual().colour_set()
    for n in range(1, 4):
        for _, y in mr_word_basis(n, chars):
            assert theta_G(y) == theta_B(y)


def test_theta_is_multiplicative_for_external_product():
    chars = Z2.dual().colour_set()
    ws = [y for n in (1, 2) for _, y in mr_word_basis(n, chars)]
    for y in ws:
        for z in ws:
            assert theta_G(y * z) == schur_product(theta_G(y), theta_G(z))


@pytest.mark.parametrize("group,top", [(Z2, 3), (Z3, 2)], ids=["Z2", "Z3"])
def test_character_of_internal_product_is_pointwise_product(group, top):
    chars = group.dual().colour_set()
    for n in range(1, top + 1):
        ws = [y for _, y in mr_word_basis(n, chars)]
        xs = [basis(a, group.colour_set()) for a in wreath_elements(n, group)[::3]]
        for y in ws[::2]:
            for z in ws[1::2]:
                yz = y @ z
                assert theta_G(yz @ z - z @ yz) == SchurExpansion({})
                for x in xs:
                    assert character_value(yz, x, group) == \
                        character_value(y, x, group) * character_value(z, x, group)


@pytest.mark.parametrize("group,top", [(Z2, 3), (Z3, 2)], ids=["Z2", "Z3"])
def test_pairing_and_trace_through_theta(group, top):
    chars = group.dual().colour_set()
    for n in range(1, top + 1):
        ws = [y for _, y in mr_word_basis(n, chars)]
        for y in ws:
            assert tau(y) == phi_tot(theta_G(y), group)
            for z in ws:
                assert pairing(y, z) == lambda_pairing(theta_G(y), theta_G(z), chars)


@pytest.mark.parametrize("group,top", [(Z2, 3), (Z3, 2)], ids=["Z2", "Z3"])
def test_kernel_is_the_radical_and_nilpotent(group, top):
    for n in range(1, top + 1):
        assert kernel_equals_pairing_kernel(n, group)
        report = kernel_report(n, group)
        for el in report["kernel_basis"]:
            assert is_nilpotent(el, n + 1)


@pytest.mark.parametrize("group,top", [(TRIVIAL, 4), (Z2, 3), (Z3, 2)], ids=["1", "Z2", "Z3"])
def test_symmetry(group, top):
    for n in range(1, top + 1):
        ys = [y for _, y in mr_word_basis(n, group.dual().colour_set())]
        xs = [x for _, x in mr_word_basis(n, group.colour_set())]
        for y in ys:
            for x in xs:
                a, b = symmetry_check(y, x, group)
                assert a == b


def test_symmetry_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        symmetry_check(mr_generator(1, "t", Z2.dual().colour_set()),
                       mr_generator(2, "g0", Z2.colour_set()), Z2)


def test_functorial_identity_and_quotient():
    chars = Z2.dual().colour_set()
    y = mr_product(BComposition.of((1, "s"), (2, "t")), chars)
    assert functorial_map(lambda g: g, Z2, Z2, y) == y

    # Z2 -> trivial group: the trivial character pulls back to t, and the
    # character of the pulled-back element is the old one composed with the quotient
    assert dual_homomorphism(lambda g: (0,), Z2, TRIVIAL) == {"x0": "t"}
    z = mr_product(BComposition.of((1, "x0"), (2, "x0")), TRIVIAL.dual().colour_set())
    pulled = functorial_map(lambda g: (0,), Z2, TRIVIAL, z)
    for alpha in wreath_elements(3, Z2):
        x = basis(alpha, Z2.colour_set())
        image = x.map_colours(lambda b: "g0", TRIVIAL.colour_set())
        assert character_value(pulled, x, Z2) == character_value(z, image, TRIVIAL)


def test_dual_homomorphism_rejects_non_homomorphisms():
    with pytest.raises(ValueError):
        dual_homomorphism(lambda g: ((g[0] + 1) % 2,), Z2, Z2)


def test_nilpotency_helper():
    chars = Z2.dual().colour_set()
    assert not is_nilpotent(unit(chars, 2), 5)
    assert is_nilpotent(zero(chars), 1)
