from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.exact_core.domains import coerce
from fanolab.shared.exact_core.rings import IntersectionRing, RingElement
from fanolab.shared.utils.exceptions import InvalidChernDataError, RingMismatchError


def _cap(ring: IntersectionRing) -> int:
    if ring.dim is None:
        raise InvalidChernDataError(f"Characteristic classes need a ring with a degree cap, got {ring!r}")
    return ring.dim


def split_components(ring: IntersectionRing, x: RingElement) -> tuple[RingElement, ...]:
    return tuple(x.homogeneous(d) for d in range(_cap(ring) + 1))


def _check_components(ring: IntersectionRing, components: Sequence[RingElement]) -> None:
    if len(components) != _cap(ring) + 1:
        raise InvalidChernDataError(f"Expected {_cap(ring) + 1} components, got {len(components)}")
    for degree, component in enumerate(components):
        if component.ring != ring:
            raise RingMismatchError(f"Component of degree {degree} lives in {component.ring!r}, not {ring!r}")
        if not component.is_zero and component.degrees() != (degree,):
            raise InvalidChernDataError(f"Component {component} is not homogeneous of degree {degree}")


@dataclass(frozen=True)
class ChernData:
    """Rank and total Chern class of a (possibly virtual) bundle, one component per degree 0..cap."""

    ring: IntersectionRing
    rank: int
    total: tuple[RingElement, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidChernDataError(f"Rank must be nonnegative, got {self.rank}")
        object.__setattr__(self, "total", tuple(self.total))
        _check_components(self.ring, self.total)
        if self.total[0] != self.ring.one():
            raise InvalidChernDataError(f"Degree-0 Chern component must be 1, got {self.total[0]}")

    @classmethod
    def from_total(cls, ring: IntersectionRing, rank: int, total_class: RingElement) -> ChernData:
        return cls(ring, rank, split_components(ring, total_class))

    @classmethod
    def from_classes(cls, ring: IntersectionRing, rank: int, classes: Sequence[RingElement]) -> ChernData:
        """From c_1, c_2, ...; missing components are zero."""
        components = [ring.one()] + [ring.zero()] * _cap(ring)
        for degree, c in enumerate(classes, start=1):
            if degree <= _cap(ring):
                components[degree] = c
        return cls(ring, rank, tuple(components))

    @classmethod
    def trivial(cls, ring: IntersectionRing, rank: int) -> ChernData:
        return cls.from_classes(ring, rank, [])

    @classmethod
    def line_bundle(cls, ring: IntersectionRing, first_chern: RingElement) -> ChernData:
        return cls.from_classes(ring, 1, [first_chern])

    @property
    def cap(self) -> int:
        return len(self.total) - 1

    @property
    def domain(self) -> CoefficientDomain:
        return self.ring.domain

    def c(self, i: int) -> RingElement:
        if i < 0 or i > self.cap:
            return self.ring.zero()
        return self.total[i]

    def total_class(self) -> RingElement:
        return sum(self.total[1:], self.total[0])

    def convert(self, domain: CoefficientDomain) -> ChernData:
        return ChernData(self.ring.with_domain(domain), self.rank, tuple(c.convert(domain) for c in self.total))

    def __str__(self) -> str:
        return f"ChernData(rank={self.rank}, c={' + '.join(str(c) for c in self.total if not c.is_zero)})"


@dataclass(frozen=True)
class CharacterData:
    """Chern character with exact rational components ch_0..ch_cap; ch_0 is the rank."""

    ring: IntersectionRing
    rank: Any
    components: tuple[RingElement, ...]

    def __post_init__(self):
        if self.ring.domain != CoefficientDomain.rational:
            raise InvalidChernDataError("Chern characters live over the rationals")
        object.__setattr__(self, "rank", coerce(self.rank, CoefficientDomain.rational))
        object.__setattr__(self, "components", tuple(self.components))
        _check_components(self.ring, self.components)
        if self.components[0] != self.ring.scalar(self.rank):
            raise InvalidChernDataError(f"Degree-0 part {self.components[0]} differs from the rank {self.rank}")

    @classmethod
    def from_total(cls, ring: IntersectionRing, total: RingElement) -> CharacterData:
        components = split_components(ring, total)
        return cls(ring, ring.unit_coefficient(components[0]), components)

    @property
    def cap(self) -> int:
        return len(self.components) - 1

    def ch(self, i: int) -> RingElement:
        if i < 0 or i > self.cap:
            return self.ring.zero()
        return self.components[i]

    def total(self) -> RingElement:
        return sum(self.components[1:], self.components[0])

    def _same_ring(self, other: CharacterData) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"Characters on {self.ring!r} and {other.ring!r}")

    def __add__(self, other: CharacterData) -> CharacterData:
        self._same_ring(other)
        return CharacterData(
            self.ring, self.rank + other.rank, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __mul__(self, other: CharacterData) -> CharacterData:
        self._same_ring(other)
        product = []
        for degree in range(self.cap + 1):
            product.append(
                sum(
                    (self.components[i] * other.components[degree - i] for i in range(degree + 1)),
                    self.ring.zero(),
                )
            )
        return CharacterData(self.ring, self.rank * other.rank, tuple(product))

    def scale(self, value: Any) -> CharacterData:
        factor = coerce(value, CoefficientDomain.rational)
        return CharacterData(self.ring, self.rank * factor, tuple(c.scale(factor) for c in self.components))
