import pytest
from hypothesis import settings
from hypothesis import strategies as st

from wreathdescent.coloured_core import ColourSet, ColouredPermutation
from wreathdescent.solomon_characters import FiniteAbelianGroup

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PLAIN2 = ColourSet.plain("ab")
PLAIN3 = ColourSet.plain("abc")
Z2_CHARS = FiniteAbelianGroup((2,)).dual().colour_set()
Z3_CHARS = FiniteAbelianGroup((3,)).dual().colour_set()


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


@st.composite
def coloured_permutations(draw, cs=PLAIN2, max_n=4, min_n=0):
    n = draw(st.integers(min_n, max_n))
    perm = draw(permutations_of(n))
    colours = draw(st.lists(st.sampled_from(cs.elements), min_size=n, max_size=n))
    return ColouredPermutation(tuple(colours), perm)


@pytest.fixture
def plain2():
    return PLAIN2


@pytest.fixture
def z2_chars():
    return Z2_CHARS
