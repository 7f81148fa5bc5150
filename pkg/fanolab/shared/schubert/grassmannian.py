from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Callable, Iterator, Mapping

from cachetools import LRUCache, cached
from sympy.combinatorics import Permutation

from fanolab.shared.charclass.chern import ChernData
from fanolab.shared.common.enums import CoefficientDomain, TautologicalBundle
from fanolab.shared.config.config import settings
from fanolab.shared.exact_core.domains import coerce, format_coefficient, sympy_domain, to_integer
from fanolab.shared.exact_core.rings import IntersectionRing, RingElement, is_scalar
from fanolab.shared.schubert.partitions import Partition, horizontal_strips, partitions_in_box, vertical_strips
from fanolab.shared.utils.exceptions import InvalidSpecError, OutOfBoxError, OutOfRangeError, RingMismatchError
from fanolab.shared.utils.logger import logger

StripRule = Callable[[Partition, int, int, int], Iterator[Partition]]


@dataclass(frozen=True)
class GrassmannianSpec:
    """Gr(k, n): k-dimensional subspaces of an n-dimensional space. Schubert partitions fit in a k x (n - k) box."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise InvalidSpecError(f"Gr({self.k}, {self.n}) needs 0 < k < n")

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def box(self) -> Partition:
        return Partition.rectangle(self.rows, self.cols)

    def contains(self, shape: Partition) -> bool:
        return shape.fits_in_box(self.rows, self.cols)

    def __str__(self) -> str:
        return f"Gr({self.k},{self.n})"


def _check_in_box(shape: Partition, spec: GrassmannianSpec) -> None:
    if not spec.contains(shape):
        raise OutOfBoxError(f"{shape} does not fit in the {spec.rows}x{spec.cols} box of {spec}")


def _apply_strips(terms: dict[Partition, int], p: int, spec: GrassmannianSpec, rule: StripRule) -> dict[Partition, int]:
    result: dict[Partition, int] = {}
    for shape, coefficient in terms.items():
        for mu in rule(shape, p, spec.rows, spec.cols):
            result[mu] = result.get(mu, 0) + coefficient
    return {mu: c for mu, c in result.items() if c}


def _giambelli_times(shape: Partition, target: Partition, spec: GrassmannianSpec) -> dict[Partition, int]:
    """
    sigma_shape * sigma_target, expanding sigma_shape by the Giambelli determinant and applying Pieri rules.

    The determinant in special classes sigma_p is used when shape has at most as many rows as columns, the dual
    determinant in sigma_{1^p} otherwise, so the expansion has min(length, first part)! terms.
    """
    if shape.length <= (shape.parts[0] if shape.parts else 0):
        entries, bound, rule = shape, spec.cols, horizontal_strips
    else:
        entries, bound, rule = shape.conjugate(), spec.rows, vertical_strips
    size = entries.length
    if size == 0:
        return {target: 1}
    result: dict[Partition, int] = {}
    for perm in permutations(range(size)):
        indices = [entries.parts[i] + perm[i] - i for i in range(size)]
        if any(index < 0 or index > bound for index in indices):
            continue
        sign = Permutation(list(perm)).signature()
        current = {target: 1}
        for index in indices:
            if index:
                current = _apply_strips(current, index, spec, rule)
            if not current:
                break
        for mu, coefficient in current.items():
            result[mu] = result.get(mu, 0) + sign * coefficient
    return {mu: c for mu, c in result.items() if c}


@cached(cache=LRUCache(maxsize=settings.schubert_cache_size), lock=threading.Lock())
def structure_constants(spec: GrassmannianSpec, lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Coefficients c^nu_{lam,mu} of sigma_lam * sigma_mu, as sorted (nu, c) pairs."""
    _check_in_box(lam, spec)
    _check_in_box(mu, spec)
    expanded, other = sorted((lam, mu), key=lambda s: min(s.length, s.parts[0] if s.parts else 0))
    logger.debug(f"Schubert product {lam} * {mu} on {spec}")
    return tuple(sorted(_giambelli_times(expanded, other, spec).items(), reverse=True))


@dataclass(frozen=True)
class GrassmannianRing(IntersectionRing):
    spec: GrassmannianSpec
    domain: CoefficientDomain = CoefficientDomain.integer

    @property
    def dim(self) -> int:
        return self.spec.dim

    def element(self, terms: Mapping[Partition, Any]) -> SchubertClass:
        domain = sympy_domain(self.domain)
        accumulated: dict[Partition, Any] = {}
        for shape, coefficient in terms.items():
            shape = shape if isinstance(shape, Partition) else Partition.of(shape)
            _check_in_box(shape, self.spec)
            accumulated[shape] = accumulated.get(shape, domain.zero) + coerce(coefficient, self.domain)
        return SchubertClass(self, {s: c for s, c in accumulated.items() if c})

    def sigma(self, *parts: int) -> SchubertClass:
        return self.element({Partition.of(parts): 1})

    def special(self, p: int) -> SchubertClass:
        """sigma_p = c_p(Q); zero beyond the number of columns."""
        if p > self.spec.cols:
            return self.zero()
        return self.sigma(p)

    def elementary(self, p: int) -> SchubertClass:
        """sigma_{1^p} = c_p(S dual); zero beyond the number of rows."""
        if p > self.spec.rows:
            return self.zero()
        return self.sigma(*([1] * p))

    def zero(self) -> SchubertClass:
        return SchubertClass(self, {})

    def one(self) -> SchubertClass:
        return self.sigma()

    def integrate(self, x: RingElement) -> Any:
        self.check_member(x)
        return x.terms.get(self.spec.box(), sympy_domain(self.domain).zero)

    def unit_coefficient(self, x: RingElement) -> Any:
        self.check_member(x)
        return x.terms.get(Partition(), sympy_domain(self.domain).zero)

    def with_domain(self, domain: CoefficientDomain) -> GrassmannianRing:
        return GrassmannianRing(self.spec, domain)

    def basis(self, degree: int | None = None) -> list[SchubertClass]:
        return [self.element({shape: 1}) for shape in partitions_in_box(self.spec.rows, self.spec.cols, degree)]

    def __repr__(self) -> str:
        return f"GrassmannianRing({self.spec}; {self.domain})"


@dataclass(frozen=True, eq=False)
class SchubertClass(RingElement):
    ring: GrassmannianRing
    terms: dict[Partition, Any]

    @property
    def grassmannian(self) -> GrassmannianSpec:
        return self.ring.spec

    def _same_ring(self, other: SchubertClass) -> None:
        if not isinstance(other, SchubertClass) or other.ring != self.ring:
            raise RingMismatchError(f"Cannot combine classes of {self.ring!r} and {getattr(other, 'ring', other)!r}")

    def __add__(self, other: SchubertClass) -> SchubertClass:
        if is_scalar(other):
            return self + self.ring.scalar(other)
        self._same_ring(other)
        result = dict(self.terms)
        for shape, coefficient in other.terms.items():
            value = result.get(shape, 0) + coefficient
            if value:
                result[shape] = value
            else:
                result.pop(shape, None)
        return SchubertClass(self.ring, result)

    def __mul__(self, other: SchubertClass | Any) -> SchubertClass:
        if is_scalar(other):
            return self.scale(other)
        return multiply(self, other)

    def scale(self, value: Any) -> SchubertClass:
        factor = coerce(value, self.ring.domain)
        return SchubertClass(self.ring, {s: c * factor for s, c in self.terms.items() if c * factor})

    def homogeneous(self, degree: int) -> SchubertClass:
        return SchubertClass(self.ring, {s: c for s, c in self.terms.items() if s.size == degree})

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({s.size for s in self.terms}))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, shape: Partition) -> Any:
        return self.terms.get(shape, sympy_domain(self.ring.domain).zero)

    def convert(self, domain: CoefficientDomain) -> SchubertClass:
        return self.ring.with_domain(domain).element(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self) -> str:
        """Text form, e.g. '2*s[2,2] - s[1]'."""
        if not self.terms:
            return "0"
        pieces = []
        for shape in sorted(self.terms, key=lambda s: (-s.size, tuple(-p for p in s.parts))):
            text = format_coefficient(self.terms[shape])
            magnitude = text.lstrip("-")
            term = str(shape) if magnitude == "1" else f"{magnitude}*{shape}"
            if text.startswith("-"):
                pieces.append(f"-{term}" if not pieces else f"- {term}")
            else:
                pieces.append(term if not pieces else f"+ {term}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SchubertClass({self.grassmannian}: {self})"


def pieri(shape: Partition, p: int, spec: GrassmannianSpec) -> SchubertClass:
    """
    sigma_shape * sigma_p: sum of sigma_mu over horizontal strips mu / shape of size p inside the box.

    Args:
        shape: partition in the k x (n - k) box
        p: degree of the special class, 0 <= p <= n - k
        spec: the Grassmannian

    Returns:
        the product, with all coefficients 1

    """
    _check_in_box(shape, spec)
    if not 0 <= p <= spec.cols:
        raise OutOfRangeError(f"Special class sigma_{p} does not exist on {spec}")
    ring = GrassmannianRing(spec)
    return ring.element({mu: 1 for mu in horizontal_strips(shape, p, spec.rows, spec.cols)})


def multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Bilinear product through cached Giambelli-Pieri structure constants."""
    a._same_ring(b)
    ring = a.ring
    result: dict[Partition, Any] = {}
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            for nu, c in structure_constants(ring.spec, lam, mu):
                result[nu] = result.get(nu, 0) + x * y * c
    return SchubertClass(ring, {nu: c for nu, c in result.items() if c})


def integrate_gr(a: SchubertClass) -> int:
    return to_integer(a.ring.integrate(a))


def tautological_chern(
    spec: GrassmannianSpec,
    which: TautologicalBundle,
    domain: CoefficientDomain = CoefficientDomain.integer,
) -> ChernData:
    """
    Chern data of the tautological bundles in the Schubert basis.

    c_i(Q) = sigma_i, c_i(S dual) = sigma_{1^i} and c_i(S) = (-1)^i sigma_{1^i}.
    """
    ring = GrassmannianRing(spec, domain)
    if which == TautologicalBundle.quotient:
        return ChernData.from_classes(ring, spec.cols, [ring.special(i) for i in range(1, spec.cols + 1)])
    classes = [ring.elementary(i) for i in range(1, spec.rows + 1)]
    if which == TautologicalBundle.subbundle:
        classes = [c.scale((-1) ** i) for i, c in enumerate(classes, start=1)]
    return ChernData.from_classes(ring, spec.rows, classes)
