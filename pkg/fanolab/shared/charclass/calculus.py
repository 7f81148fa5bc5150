from __future__ import annotations

import threading
from math import factorial
from typing import Any

from cachetools import LRUCache, cached
from sympy import Poly, Rational, Symbol, exp, log, series

from fanolab.shared.charclass.chern import CharacterData, ChernData
from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.config.config import settings
from fanolab.shared.exact_core.domains import coerce, to_integer
from fanolab.shared.exact_core.rings import RingElement
from fanolab.shared.utils.exceptions import (
    InvalidChernDataError,
    NonIntegralResultError,
    RingMismatchError,
)
from fanolab.shared.utils.logger import logger

QQ_DOMAIN = CoefficientDomain.rational


def _same_ring(a: ChernData, b: ChernData) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"Chern data on {a.ring!r} and {b.ring!r}")


def _product_components(a: tuple[RingElement, ...], b: tuple[RingElement, ...]) -> tuple[RingElement, ...]:
    ring = a[0].ring
    return tuple(sum((a[i] * b[d - i] for i in range(d + 1)), ring.zero()) for d in range(len(a)))


def inverse_components(components: tuple[RingElement, ...]) -> tuple[RingElement, ...]:
    """
    Formal inverse of a total class 1 + x_1 + x_2 + ... truncated at the cap.

    Uses the degree recursion s_0 = 1, s_d = -(x_1 s_{d-1} + ... + x_d s_0).
    """
    ring = components[0].ring
    if components[0] != ring.one():
        raise InvalidChernDataError(f"Cannot invert a total class with degree-0 part {components[0]}")
    inverse = [ring.one()]
    for d in range(1, len(components)):
        inverse.append(-sum((components[i] * inverse[d - i] for i in range(1, d + 1)), ring.zero()))
    return tuple(inverse)


def whitney_sum(a: ChernData, b: ChernData) -> ChernData:
    _same_ring(a, b)
    return ChernData(a.ring, a.rank + b.rank, _product_components(a.total, b.total))


def segre(c: ChernData) -> tuple[RingElement, ...]:
    """Components of the total Segre class s with s * c = 1."""
    return inverse_components(c.total)


def whitney_quotient(total: ChernData, sub: ChernData) -> ChernData:
    """
    Chern data of the quotient in 0 -> sub -> total -> q -> 0.

    Args:
        total: Chern data of the middle term
        sub: Chern data of the subbundle, degree-0 component 1

    Returns:
        q with c(sub) c(q) = c(total) up to the cap

    """
    _same_ring(total, sub)
    if total.rank < sub.rank:
        raise InvalidChernDataError(f"Quotient of rank {total.rank} by rank {sub.rank} is negative")
    return ChernData(total.ring, total.rank - sub.rank, _product_components(total.total, segre(sub)))


def dual(c: ChernData) -> ChernData:
    return ChernData(c.ring, c.rank, tuple(component.scale((-1) ** i) for i, component in enumerate(c.total)))


def chern_to_ch(c: ChernData) -> CharacterData:
    """Newton's identities p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k, then ch_k = p_k / k!."""
    rational = c.convert(QQ_DOMAIN)
    ring = rational.ring
    e = rational.total
    power_sums = [ring.scalar(c.rank)]
    for k in range(1, rational.cap + 1):
        p_k = e[k].scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            p_k = p_k + (e[i] * power_sums[k - i]).scale((-1) ** (i - 1))
        power_sums.append(p_k)
    components = [power_sums[0]] + [power_sums[k].scale(Rational(1, factorial(k))) for k in range(1, rational.cap + 1)]
    return CharacterData(ring, c.rank, tuple(components))


def ch_to_chern(ch: CharacterData, integral: bool = False) -> ChernData:
    """
    Inverse of chern_to_ch: e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i with p_i = i! ch_i.

    Args:
        ch: Chern character with a nonnegative integral rank
        integral: convert the result to integer coefficients, raising if a coefficient is fractional

    Returns:
        Chern data over the rationals, or over the integers when integral is set

    """
    try:
        rank = to_integer(ch.rank)
    except NonIntegralResultError as error:
        raise InvalidChernDataError(f"Rank {ch.rank} of a Chern character must be an integer") from error
    ring = ch.ring
    power_sums = [None] + [ch.components[i].scale(factorial(i)) for i in range(1, ch.cap + 1)]
    e = [ring.one()]
    for k in range(1, ch.cap + 1):
        e_k = ring.zero()
        for i in range(1, k + 1):
            e_k = e_k + (e[k - i] * power_sums[i]).scale((-1) ** (i - 1))
        e.append(e_k.scale(Rational(1, k)))
    result = ChernData(ring, rank, tuple(e))
    if integral:
        result = result.convert(CoefficientDomain.integer)
    return result


def adams(k: int, ch: CharacterData) -> CharacterData:
    """psi^k scales the degree-i component by k^i."""
    if k <= 0:
        raise ValueError(f"Adams operations are indexed by positive integers, got {k}")
    return CharacterData(ch.ring, ch.rank, tuple(component.scale(k**i) for i, component in enumerate(ch.components)))


def sym2(c: ChernData) -> ChernData:
    """Chern data of Sym^2 E from ch(Sym^2 E) = (ch(E)^2 + psi^2 ch(E)) / 2."""
    ch = chern_to_ch(c)
    square = (ch * ch + adams(2, ch)).scale(Rational(1, 2))
    try:
        result = ch_to_chern(square, integral=True)
    except NonIntegralResultError as error:
        raise NonIntegralResultError(f"Sym^2 of rank {c.rank} data produced a fractional Chern class") from error
    if result.rank != c.rank * (c.rank + 1) // 2:
        raise InvalidChernDataError(f"Sym^2 of rank {c.rank} has rank {result.rank}")
    logger.debug(f"Sym^2 of rank {c.rank} on {c.ring!r}: c_1 = {result.c(1)}")
    return result


def tensor(a: ChernData, b: ChernData) -> ChernData:
    _same_ring(a, b)
    return ch_to_chern(chern_to_ch(a) * chern_to_ch(b), integral=a.domain != QQ_DOMAIN)


def _lock_cache(maxsize: int):
    return cached(cache=LRUCache(maxsize=maxsize), lock=threading.Lock())


@_lock_cache(settings.todd_cache_size)
def todd_log_coefficients(cap: int) -> tuple[Any, ...]:
    """
    Coefficients b_k of log(x / (1 - e^{-x})) = sum b_k x^k, for k = 0..cap, as exact rationals.

    The Todd class of a bundle with power sums p_k of its roots is exp(sum_k b_k p_k).
    """
    x = Symbol("x")
    expansion = series(log(x / (1 - exp(-x))), x, 0, cap + 1).removeO()
    coefficients = Poly(expansion, x).all_coeffs()[::-1] if expansion != 0 else []
    return tuple(coerce(Rational(coefficients[k]) if k < len(coefficients) else 0, QQ_DOMAIN) for k in range(cap + 1))


def _exp_nilpotent(x: RingElement, cap: int) -> RingElement:
    ring = x.ring
    result, power = ring.one(), ring.one()
    for j in range(1, cap + 1):
        power = power * x
        if power.is_zero:
            break
        result = result + power.scale(Rational(1, factorial(j)))
    return result


def todd(tangent: ChernData | CharacterData) -> RingElement:
    """
    Todd class over the rationals, truncated at the ambient cap.

    Args:
        tangent: Chern data or Chern character of the tangent bundle

    Returns:
        td(T) as a rational element of the ring

    """
    ch = tangent if isinstance(tangent, CharacterData) else chern_to_ch(tangent)
    b = todd_log_coefficients(ch.cap)
    exponent = ch.ring.zero()
    for k in range(1, ch.cap + 1):
        exponent = exponent + ch.ch(k).scale(b[k] * factorial(k))
    return _exp_nilpotent(exponent, ch.cap)


def _integrate_with(x: RingElement, fundamental: RingElement | None) -> Any:
    if fundamental is not None:
        x = x * fundamental.convert(x.ring.domain)
    return x.ring.integrate(x)


def hrr_chi(sheaf: CharacterData, tangent: ChernData, fundamental: RingElement | None = None) -> int:
    """
    Euler characteristic by Hirzebruch-Riemann-Roch, chi = integral of ch(sheaf) td(T).

    Args:
        sheaf: Chern character of the sheaf
        tangent: tangent Chern data of the variety
        fundamental: class of the variety in its ambient ring, when integrating on a complete intersection

    Returns:
        chi as an integer

    """
    td = todd(tangent)
    if td.ring != sheaf.ring:
        raise RingMismatchError(f"Sheaf on {sheaf.ring!r} and tangent on {td.ring!r}")
    value = _integrate_with(sheaf.total() * td, fundamental)
    try:
        return to_integer(value)
    except NonIntegralResultError as error:
        raise NonIntegralResultError(f"Riemann-Roch produced the non-integer {value}") from error


def chi_top(tangent: ChernData, dim: int, fundamental: RingElement | None = None) -> int:
    """Topological Euler characteristic by Gauss-Bonnet, the integral of c_dim(T)."""
    return to_integer(_integrate_with(tangent.c(dim), fundamental))
