from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathdescent.coloured_core import (
    BComposition, ColourSet, ColouredPermutation, all_coloured_permutations,
)
from wreathdescent.fqsym_engine import (
    AlgebraElement, NotInSubspace, basis, descent_class, expand_in_mr_basis,
    mr_product, pairing, zero,
)
from wreathdescent.linalg import rank
from wreathdescent.rso_tableaux import (
    BTableau, Tableau, closure_classes, coplactic_element, coplactic_fibers,
    expand_in_coplactic_basis, knuth_neighbours, knuth_related, plactic_class_rep,
    plactic_fibers, rsk_inverse, rsk_word, rso, rso_inverse, standard_btableaux,
    tableau_descent_composition,
)

from conftest import PLAIN2, coloured_permutations, permutations_of

ONE = ColourSet(("e",), table=(("e",),))


def longest_monotone(word, increasing=True):
    best = 0
    for k in range(1, len(word) + 1):
        for idx in combinations(range(len(word)), k):
            sub = [word[i] for i in idx]
            if all((a < b) if increasing else (a > b) for a, b in zip(sub, sub[1:])):
                best = k
                break
    return best


def test_insertion_example():
    P, Q = rsk_word([2, 3, 1])
    assert P.rows == ((1, 3), (2,)) and Q.rows == ((1, 2), (3,))


@given(st.integers(1, 6).flatmap(permutations_of))
def test_shape_agrees_with_longest_monotone_subsequences(p):
    P, Q = rsk_word(p)
    assert P.shape == Q.shape
    assert P.shape[0] == longest_monotone(p, True)
    assert len(P.shape) == longest_monotone(p, False)


def test_rsk_word_is_a_bijection_on_short_words():
    seen = set()
    for n in range(6):
        for w in product((1, 2, 3), repeat=n):
            P, Q = rsk_word(list(w))
            key = (P, Q)
            assert key not in seen
            seen.add(key)
            assert [x for _, x in rsk_inverse(P, Q)] == list(w)


@given(coloured_permutations(PLAIN2, max_n=6))
def test_rso_round_trip(alpha):
    P, Q = rso(alpha)
    assert P.shape() == Q.shape()
    assert P.is_standard() and Q.is_standard()
    assert rso_inverse(P, Q) == alpha


def test_rso_rejects_mismatched_shapes():
    P = BTableau.of({"a": [[1, 2]]})
    Q = BTableau.of({"a": [[1], [2]]})
    with pytest.raises(ValueError):
        rso_inverse(P, Q)


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(((2, 1),))
    with pytest.raises(ValueError):
        Tableau(((1, 2), (1,)))


def test_tableau_descent_example_and_error():
    T = BTableau.of({"a": [[1, 2, 5], [3]], "b": [[4, 7], [6]]})
    assert tableau_descent_composition(T) == BComposition.of((2, "a"), (1, "a"), (1, "b"), (1, "a"), (2, "b"))
    with pytest.raises(ValueError):
        tableau_descent_composition(BTableau.of({"a": [[1, 3]]}))


def test_knuth_example():
    a = ColouredPermutation(("a",) * 3, (2, 1, 3))
    b = ColouredPermutation(("a",) * 3, (2, 3, 1))
    assert knuth_related(a, b) and knuth_related(b, a)
    assert not knuth_related(ColouredPermutation(("a",) * 2, (1, 2)), ColouredPermutation(("a",) * 2, (2, 1)))


@pytest.mark.parametrize("n", range(1, 5))
def test_knuth_classes_are_insertion_fibers(n):
    els = all_coloured_permutations(n, PLAIN2)
    classes = {frozenset(c) for c in closure_classes(els, knuth_neighbours)}
    fibers = {frozenset(v) for v in plactic_fibers(n, PLAIN2).values()}
    assert classes == fibers
    diffs = [(basis(a, PLAIN2) - basis(b, PLAIN2)).terms for a in els for b in knuth_neighbours(a)]
    assert rank(diffs) + len(fibers) == len(els)


@pytest.mark.parametrize("n", range(1, 5))
def test_plactic_class_rep(n):
    for T in plactic_fibers(n, PLAIN2):
        alpha = plactic_class_rep(T, PLAIN2)
        P, Q = rso(alpha)
        assert P == T
        labels = [x for _, t in Q.per_colour for r in t.rows for x in r]
        assert labels == list(range(1, n + 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_descent_classes_are_sums_of_coplactic_elements(n):
    by_descent = {}
    for T in standard_btableaux(n, PLAIN2):
        c = tableau_descent_composition(T)
        by_descent[c] = by_descent.get(c, zero(PLAIN2)) + coplactic_element(T, PLAIN2)
    for c, total in by_descent.items():
        assert total == descent_class(c, PLAIN2)


@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_of_coplactic_elements(n):
    tabs = standard_btableaux(n, PLAIN2)
    for T in tabs[::2]:
        for U in tabs:
            expected = 1 if T.shape() == U.shape() else 0
            assert pairing(coplactic_element(T, PLAIN2), coplactic_element(U, PLAIN2)) == expected


def test_coplactic_subspace_is_not_an_internal_ideal():
    T = BTableau.of({"e": [[1, 3], [2, 4]]})
    tT = coplactic_element(T, ONE)
    y = (mr_product(BComposition.of((1, "e"), (2, "e"), (1, "e")), ONE)
         - mr_product(BComposition.of((3, "e"), (1, "e")), ONE)
         - mr_product(BComposition.of((1, "e"), (3, "e")), ONE)
         + mr_product(BComposition.of((4, "e")), ONE))
    prod = y @ tT
    assert len(prod) == 10
    with pytest.raises(NotInSubspace):
        expand_in_coplactic_basis(prod)


def test_coplactic_expansion_and_errors():
    T = BTableau.of({"a": [[1, 2]], "b": [[3]]})
    x = 2 * coplactic_element(T, PLAIN2)
    assert expand_in_coplactic_basis(x) == {T: 2}
    with pytest.raises(ValueError):
        coplactic_element(BTableau.of({"a": [[1, 3]]}), PLAIN2)
    with pytest.raises(ValueError):
        coplactic_element(BTableau.of({"z": [[1]]}), PLAIN2)


@pytest.mark.parametrize("n", range(0, 5))
def test_every_element_is_in_exactly_one_fiber(n):
    fibers = coplactic_fibers(n, PLAIN2)
    assert sum(map(len, fibers.values())) == len(all_coloured_permutations(n, PLAIN2))
