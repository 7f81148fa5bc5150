"""Steenrod squares on H*(BSO(4), Z/2) = Z/2[w2, w3, w4]."""

from math import comb

from cachetools import cached

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.exact_core.graded import GradedElement, TruncatedRingSpec
from fanolab.shared.utils.exceptions import ConsistencyError, RingMismatchError

SW_RING = TruncatedRingSpec.polynomial(("w2", "w3", "w4"), (2, 3, 4), CoefficientDomain.mod2)
SWPolynomial = GradedElement

# w1 = 0 on BSO(4) and w_j = 0 for j > 4
_GENERATOR_DEGREES = {2: 0, 3: 1, 4: 2}


def stiefel_whitney(j: int) -> SWPolynomial:
    if j == 0:
        return SW_RING.one()
    if j not in _GENERATOR_DEGREES:
        return SW_RING.zero()
    return SW_RING.gens()[_GENERATOR_DEGREES[j]]


def _binomial(n: int, t: int) -> int:
    if t == 0:
        return 1
    if n < t:
        return 0
    return comb(n, t)


def wu_formula(i: int, j: int) -> SWPolynomial:
    """Sq^i(w_j) = sum_t C(j - i + t - 1, t) w_{i-t} w_{j+t}."""
    if i < 0 or i > j:
        return SW_RING.zero()
    result = SW_RING.zero()
    for t in range(i + 1):
        coefficient = _binomial(j - i + t - 1, t) % 2
        if coefficient:
            result = result + stiefel_whitney(i - t) * stiefel_whitney(j + t)
    return result


@cached(cache={})
def _total_square_of_generator(j: int) -> SWPolynomial:
    return sum((wu_formula(i, j) for i in range(j + 1)), SW_RING.zero())


def total_square(x: SWPolynomial) -> SWPolynomial:
    """Sq = Sq^0 + Sq^1 + ..., a ring homomorphism, evaluated on monomials through the generators."""
    _check_sw(x)
    result = SW_RING.zero()
    for monomial, coefficient in x.terms.items():
        image = SW_RING.one()
        for exponent, j in zip(monomial, (2, 3, 4)):
            if exponent:
                image = image * _total_square_of_generator(j) ** exponent
        result = result + image.scale(coefficient)
    return result


def _check_sw(x: SWPolynomial) -> None:
    if not isinstance(x, GradedElement) or x.ring != SW_RING:
        raise RingMismatchError(f"{x!r} is not a Stiefel-Whitney polynomial")


def steenrod_sq(i: int, x: SWPolynomial) -> SWPolynomial:
    """
    Sq^i on a mod-2 class of BSO(4).

    Args:
        i: nonnegative index
        x: Stiefel-Whitney polynomial, not necessarily homogeneous

    Returns:
        sum over the homogeneous parts x_d of the degree d + i part of Sq(x_d)

    """
    if i < 0:
        raise ValueError(f"Steenrod squares are indexed by i >= 0, got {i}")
    _check_sw(x)
    result = SW_RING.zero()
    for d in x.degrees():
        result = result + total_square(x.homogeneous(d)).homogeneous(d + i)
    return result


def square_nonvanishing(x: SWPolynomial) -> bool:
    """Whether x^2 != 0; in a polynomial ring over a field this must agree with x != 0."""
    _check_sw(x)
    nonzero = not (x * x).is_zero
    if nonzero != (not x.is_zero):
        raise ConsistencyError(f"Square of {x} contradicts Z/2[w2, w3, w4] being a domain")
    return nonzero


def sq_top_axiom(x: SWPolynomial) -> bool:
    """Sq^{deg x}(x) == x^2 on a homogeneous class; holds trivially for 0."""
    _check_sw(x)
    if x.is_zero:
        return True
    return steenrod_sq(x.degree, x) == x * x
