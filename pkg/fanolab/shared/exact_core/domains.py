"""Coefficient domains of the intersection rings and explicit conversions between them."""

from fractions import Fraction
from typing import Any

from sympy import Basic, Rational
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.domains.domain import Domain
from sympy.polys.domains.modularinteger import ModularInteger

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.utils.exceptions import NonIntegralResultError

GF2 = GF(2, symmetric=False)

_SYMPY_DOMAINS: dict[CoefficientDomain, Domain] = {
    CoefficientDomain.integer: ZZ,
    CoefficientDomain.rational: QQ,
    CoefficientDomain.mod2: GF2,
}

# exact rational coefficient, always in lowest terms with a positive denominator
BigRat = type(QQ.one)


def sympy_domain(domain: CoefficientDomain) -> Domain:
    return _SYMPY_DOMAINS[domain]


def _as_fraction(value: Any) -> tuple[int, int]:
    if isinstance(value, bool):
        return int(value), 1
    if isinstance(value, int):
        return value, 1
    if isinstance(value, ModularInteger):
        return int(value), 1
    if isinstance(value, Basic):
        rational = Rational(value)
        return int(rational.p), int(rational.q)
    if isinstance(value, Fraction) or (hasattr(value, "numerator") and hasattr(value, "denominator")):
        return int(value.numerator), int(value.denominator)
    return int(value), 1


def coerce(value: Any, domain: CoefficientDomain) -> Any:
    """
    Converts a scalar (python int, Fraction, sympy number or a domain element) into the given domain.

    Args:
        value: scalar to convert
        domain: target coefficient domain

    Returns:
        the corresponding element of the sympy domain

    """
    numerator, denominator = _as_fraction(value)
    target = sympy_domain(domain)
    if domain == CoefficientDomain.rational:
        return QQ(numerator, denominator)
    if denominator != 1:
        raise NonIntegralResultError(f"{numerator}/{denominator} is not integral and cannot live in {domain}")
    return target(numerator)


def to_integer(value: Any) -> int:
    """Returns the value as a python int, raising if it carries a denominator."""
    numerator, denominator = _as_fraction(value)
    if denominator != 1:
        raise NonIntegralResultError(f"Expected an integer, got {numerator}/{denominator}")
    return numerator


def to_fraction(value: Any) -> Fraction:
    numerator, denominator = _as_fraction(value)
    return Fraction(numerator, denominator)


def format_coefficient(value: Any) -> str:
    numerator, denominator = _as_fraction(value)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"
