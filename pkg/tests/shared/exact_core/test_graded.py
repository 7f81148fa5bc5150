import pytest
from hypothesis import given
from hypothesis import strategies as st
from pytest_check import check

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.exact_core.graded import TruncatedRingSpec
from fanolab.shared.utils.exceptions import DegreeMismatchError, InvalidSpecError, RingMismatchError

P4_P5 = TruncatedRingSpec.projective_product([4, 5])


def polynomials(ring: TruncatedRingSpec):
    exponents = st.tuples(*(st.integers(0, order - 1) for order in ring.nilpotency))
    return st.dictionaries(exponents, st.integers(-5, 5), max_size=6).map(ring.element)


def test_fundamental_class_of_product():
    h1, h2 = P4_P5.gens()
    assert P4_P5.fundamental == (4, 5)
    assert P4_P5.integrate(h1**4 * h2**5) == 1
    assert P4_P5.integrate(h1**4 * h2**4) == 0


def test_nilpotency_drops_monomials():
    h1, _ = P4_P5.gens()
    assert (h1**5).is_zero


def test_binomial_expansion_degree():
    h1, h2 = P4_P5.gens()
    assert P4_P5.integrate((h1 + h2) ** 9) == 126


def test_string_form():
    h1, h2 = P4_P5.gens()
    assert str(h1.scale(3) * h1 - h2.scale(2)) == "3*h1^2 - 2*h2"
    assert str(P4_P5.zero()) == "0"


def test_mixed_rings_are_rejected():
    other = TruncatedRingSpec.projective_product([4, 4])
    with pytest.raises(RingMismatchError):
        P4_P5.gens()[0] + other.gens()[0]


def test_degree_of_inhomogeneous_class():
    h1, h2 = P4_P5.gens()
    with pytest.raises(DegreeMismatchError):
        (h1 + h2 * h2).degree


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        TruncatedRingSpec.projective_product([])
    with pytest.raises(InvalidSpecError):
        TruncatedRingSpec(names=("x", "x"), weights=(1, 1), nilpotency=(2, 2))
    with pytest.raises(InvalidSpecError):
        P4_P5.variable("h3")


def test_mod2_coefficients_cancel():
    ring = TruncatedRingSpec.projective_product([2], domain=CoefficientDomain.mod2)
    (h,) = ring.gens()
    assert (h + h).is_zero


def test_polynomial_ring_has_no_fundamental_class():
    ring = TruncatedRingSpec.polynomial(("a",), (2,), CoefficientDomain.integer)
    with pytest.raises(InvalidSpecError):
        ring.integrate(ring.one())


@given(polynomials(P4_P5), polynomials(P4_P5), polynomials(P4_P5))
def test_ring_axioms(a, b, c):
    with check:
        assert a * (b + c) == a * b + a * c
    with check:
        assert (a * b) * c == a * (b * c)
    with check:
        assert a * b == b * a
    with check:
        assert a - a == P4_P5.zero()


@given(polynomials(P4_P5), st.integers(-4, 4))
def test_scale_matches_repeated_addition(a, k):
    expected = sum((a for _ in range(abs(k))), P4_P5.zero())
    assert a.scale(k) == (expected if k >= 0 else -expected)
