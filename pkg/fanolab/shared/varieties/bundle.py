from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from fanolab.shared.charclass.chern import ChernData
from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.exact_core.rings import IntersectionRing, RingElement, is_scalar
from fanolab.shared.utils.exceptions import InvalidChernDataError, InvalidSpecError, RingMismatchError


@dataclass(frozen=True)
class ProjectiveBundleRing(IntersectionRing):
    """
    Chow ring of P(E), the bundle of lines in a rank-r bundle E, over a base ring.

    Elements are a_0 + a_1 zeta + ... + a_{r-1} zeta^{r-1} with a_i pulled back from the base, where zeta = c_1(O(1)).
    Higher powers are rewritten with the relation zeta^r + c_1(E) zeta^{r-1} + ... + c_r(E) = 0.
    """

    base: IntersectionRing
    rank: int
    chern: tuple[RingElement, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidSpecError(f"Projective bundles need rank >= 1, got {self.rank}")
        if len(self.chern) != self.rank:
            raise InvalidSpecError(f"Expected c_1..c_{self.rank}, got {len(self.chern)} classes")
        for c in self.chern:
            self.base.check_member(c)

    @classmethod
    def of(cls, bundle: ChernData) -> ProjectiveBundleRing:
        for i in range(bundle.rank + 1, bundle.cap + 1):
            if not bundle.c(i).is_zero:
                raise InvalidChernDataError(f"c_{i} of a rank {bundle.rank} bundle is nonzero")
        return cls(bundle.ring, bundle.rank, tuple(bundle.c(i) for i in range(1, bundle.rank + 1)))

    @property
    def domain(self) -> CoefficientDomain:
        return self.base.domain

    @property
    def dim(self) -> int:
        return self.base.dim + self.rank - 1

    def reduce(self, coefficients: Sequence[RingElement]) -> BundleElement:
        """Normal form of sum a_i zeta^i for any number of coefficients."""
        work = list(coefficients) + [self.base.zero()] * max(0, self.rank - len(coefficients))
        for i in range(len(work) - 1, self.rank - 1, -1):
            a = work[i]
            if a.is_zero:
                continue
            # zeta^i = -sum_j c_j zeta^{i-j}
            for j, c in enumerate(self.chern, start=1):
                work[i - j] = work[i - j] - c * a
        return BundleElement(self, tuple(work[: self.rank]))

    def zero(self) -> BundleElement:
        return BundleElement(self, (self.base.zero(),) * self.rank)

    def one(self) -> BundleElement:
        return self.pullback(self.base.one())

    def pullback(self, x: RingElement) -> BundleElement:
        self.base.check_member(x)
        return self.reduce([x])

    def zeta(self) -> BundleElement:
        return self.reduce([self.base.zero(), self.base.one()])

    def pushforward(self, x: RingElement) -> RingElement:
        """pi_* onto the base: the coefficient of zeta^{r-1} in normal form."""
        self.check_member(x)
        return x.coefficients[self.rank - 1]

    def integrate(self, x: RingElement) -> Any:
        return self.base.integrate(self.pushforward(x))

    def unit_coefficient(self, x: RingElement) -> Any:
        self.check_member(x)
        return self.base.unit_coefficient(x.coefficients[0])

    def with_domain(self, domain: CoefficientDomain) -> ProjectiveBundleRing:
        chern = tuple(c.convert(domain) for c in self.chern)
        return ProjectiveBundleRing(self.base.with_domain(domain), self.rank, chern)

    def __repr__(self) -> str:
        return f"ProjectiveBundleRing(rank {self.rank} over {self.base!r})"


@dataclass(frozen=True, eq=False)
class BundleElement(RingElement):
    ring: ProjectiveBundleRing
    coefficients: tuple[RingElement, ...]

    def _same_ring(self, other: BundleElement) -> None:
        if not isinstance(other, BundleElement) or other.ring != self.ring:
            raise RingMismatchError(f"Cannot combine classes of {self.ring!r} and {getattr(other, 'ring', other)!r}")

    def __add__(self, other: BundleElement) -> BundleElement:
        if is_scalar(other):
            return self + self.ring.scalar(other)
        self._same_ring(other)
        return BundleElement(self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: BundleElement | Any) -> BundleElement:
        if is_scalar(other):
            return self.scale(other)
        self._same_ring(other)
        base = self.ring.base
        product = [base.zero()] * (2 * self.ring.rank - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coefficients):
                if not b.is_zero:
                    product[i + j] = product[i + j] + a * b
        return self.ring.reduce(product)

    def scale(self, value: Any) -> BundleElement:
        return BundleElement(self.ring, tuple(a.scale(value) for a in self.coefficients))

    def homogeneous(self, degree: int) -> BundleElement:
        return BundleElement(self.ring, tuple(a.homogeneous(degree - i) for i, a in enumerate(self.coefficients)))

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({d + i for i, a in enumerate(self.coefficients) for d in a.degrees()}))

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coefficients)

    def convert(self, domain: CoefficientDomain) -> BundleElement:
        return BundleElement(self.ring.with_domain(domain), tuple(a.convert(domain) for a in self.coefficients))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BundleElement):
            return NotImplemented
        return self.ring == other.ring and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.ring, self.coefficients))

    def __str__(self) -> str:
        pieces = []
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            power = "" if i == 0 else ("zeta" if i == 1 else f"zeta^{i}")
            pieces.append(f"({a})" + (f"*{power}" if power else ""))
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"BundleElement({self})"
