from hypothesis import given
from hypothesis import strategies as st
from pytest_check import check

from fanolab.features.topomod.steenrod import (
    SW_RING,
    sq_top_axiom,
    square_nonvanishing,
    steenrod_sq,
    stiefel_whitney,
    total_square,
    wu_formula,
)
from fanolab.features.topomod.torsion_ring import TorsionRingElement, reduce_mod2

w2, w3, w4 = SW_RING.gens()
MONOMIALS = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


def _degree(monomial):
    return 2 * monomial[0] + 3 * monomial[1] + 4 * monomial[2]


@st.composite
def homogeneous_classes(draw):
    degree = draw(st.integers(0, 10))
    monomials = [
        (a, b, c) for a in range(6) for b in range(4) for c in range(3) if _degree((a, b, c)) == degree
    ]
    chosen = draw(st.lists(st.sampled_from(monomials), max_size=4)) if monomials else []
    return SW_RING.element([(m, 1) for m in chosen])


POLYNOMIALS = st.lists(MONOMIALS, max_size=4).map(lambda ms: SW_RING.element([(m, 1) for m in ms]))


def test_wu_formula_on_generators():
    with check:
        assert wu_formula(1, 2) == w3
    with check:
        assert wu_formula(2, 2) == w2 * w2
    with check:
        assert wu_formula(1, 3).is_zero
    with check:
        assert wu_formula(2, 3) == w2 * w3
    with check:
        assert wu_formula(3, 3) == w3 * w3
    with check:
        assert wu_formula(1, 4).is_zero
    with check:
        assert wu_formula(2, 4) == w2 * w4
    with check:
        assert wu_formula(3, 4) == w3 * w4
    with check:
        assert stiefel_whitney(1).is_zero and stiefel_whitney(5).is_zero


def test_nu_squared_reduces_to_w3_squared():
    nu = TorsionRingElement.nu()
    assert reduce_mod2(nu) == steenrod_sq(1, w2)
    assert reduce_mod2(nu**2) == w3 * w3
    assert square_nonvanishing(reduce_mod2(nu))
    assert (nu + nu).is_zero
    assert reduce_mod2(TorsionRingElement.pontryagin()) == w2 * w2


@given(POLYNOMIALS, POLYNOMIALS, st.integers(0, 8))
def test_cartan_formula(x, y, k):
    expected = sum((steenrod_sq(i, x) * steenrod_sq(k - i, y) for i in range(k + 1)), SW_RING.zero())
    assert steenrod_sq(k, x * y) == expected


@given(POLYNOMIALS)
def test_total_square_is_multiplicative(x):
    assert total_square(x * x) == total_square(x) * total_square(x)


@given(POLYNOMIALS)
def test_adem_relations(x):
    with check:
        assert steenrod_sq(1, steenrod_sq(1, x)).is_zero
    with check:
        assert steenrod_sq(1, steenrod_sq(2, x)) == steenrod_sq(3, x)
    with check:
        assert steenrod_sq(2, steenrod_sq(2, x)) == steenrod_sq(3, steenrod_sq(1, x))


@given(homogeneous_classes())
def test_top_square_is_the_cup_square(x):
    assert sq_top_axiom(x)
    if not x.is_zero:
        assert steenrod_sq(x.degree + 1, x).is_zero


def test_square_of_zero():
    assert not square_nonvanishing(SW_RING.zero())
    assert steenrod_sq(0, w2 + w3) == w2 + w3
