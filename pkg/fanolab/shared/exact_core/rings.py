from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.utils.exceptions import DegreeMismatchError, RingMismatchError


class IntersectionRing(ABC):
    """
    Graded ring with a top-degree integration functional.

    Concrete rings are frozen dataclasses carrying a `domain` field, so two rings compare equal exactly when they
    present the same space over the same coefficients.
    """

    domain: CoefficientDomain

    @property
    @abstractmethod
    def dim(self) -> int | None: ...

    @abstractmethod
    def zero(self) -> RingElement: ...

    @abstractmethod
    def one(self) -> RingElement: ...

    @abstractmethod
    def integrate(self, x: RingElement) -> Any:
        """Coefficient of the fundamental class; 0 for classes without a top-degree part."""

    @abstractmethod
    def with_domain(self, domain: CoefficientDomain) -> IntersectionRing: ...

    @abstractmethod
    def unit_coefficient(self, x: RingElement) -> Any:
        """Coefficient of the unit class in x."""

    def scalar(self, value: Any) -> RingElement:
        return self.one().scale(value)

    def check_member(self, x: RingElement) -> None:
        if x.ring != self:
            raise RingMismatchError(f"Element of {x.ring!r} used in {self!r}")


def is_scalar(value: Any) -> bool:
    return not isinstance(value, RingElement)


class RingElement(ABC):
    ring: IntersectionRing

    @abstractmethod
    def __add__(self, other: RingElement) -> RingElement: ...

    @abstractmethod
    def __mul__(self, other: RingElement | Any) -> RingElement: ...

    @abstractmethod
    def scale(self, value: Any) -> RingElement: ...

    @abstractmethod
    def homogeneous(self, degree: int) -> RingElement: ...

    @abstractmethod
    def degrees(self) -> tuple[int, ...]:
        """Sorted degrees of the nonzero homogeneous components."""

    @property
    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def convert(self, domain: CoefficientDomain) -> RingElement: ...

    def __neg__(self) -> RingElement:
        return self.scale(-1)

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __radd__(self, other: Any) -> RingElement:
        # lets sum() start from 0
        if is_scalar(other) and other == 0:
            return self
        return self + self.ring.scalar(other)

    def __rmul__(self, other: Any) -> RingElement:
        return self.scale(other)

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("Negative powers are not defined in an intersection ring")
        result, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    @property
    def degree(self) -> int:
        degrees = self.degrees()
        if len(degrees) != 1:
            raise DegreeMismatchError(f"{self} is not a nonzero homogeneous class")
        return degrees[0]

    def components(self, up_to: int) -> list[RingElement]:
        return [self.homogeneous(d) for d in range(up_to + 1)]

    def integrate(self) -> Any:
        return self.ring.integrate(self)
