from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Sequence

from fanolab.shared.common.enums import CoefficientDomain
from fanolab.shared.exact_core.domains import coerce, format_coefficient, sympy_domain
from fanolab.shared.exact_core.rings import IntersectionRing, RingElement, is_scalar
from fanolab.shared.utils.exceptions import InvalidSpecError, RingMismatchError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class TruncatedRingSpec(IntersectionRing):
    """
    Polynomial ring in weighted variables modulo pure monomial relations.

    Every relation is either a nilpotency x_i^{k_i} = 0 or the degree cap, so the normal form of a polynomial is
    obtained by dropping monomials, never by rewriting them.
    """

    names: tuple[str, ...]
    weights: tuple[int, ...]
    nilpotency: tuple[int | None, ...]
    cap: int | None = None
    domain: CoefficientDomain = CoefficientDomain.integer
    fundamental: Monomial | None = field(init=False, compare=False, default=None)

    def __post_init__(self):
        if not (len(self.names) == len(self.weights) == len(self.nilpotency)):
            raise InvalidSpecError("names, weights and nilpotency orders must have the same length")
        if len(set(self.names)) != len(self.names):
            raise InvalidSpecError(f"Duplicate variable names in {self.names}")
        if any(weight <= 0 for weight in self.weights):
            raise InvalidSpecError("Variable weights must be positive")
        if any(order is not None and order <= 0 for order in self.nilpotency):
            raise InvalidSpecError("Nilpotency orders must be positive")
        if self.cap is None or any(order is None for order in self.nilpotency):
            return
        fundamental = tuple(order - 1 for order in self.nilpotency)
        if self._weighted_degree(fundamental) != self.cap:
            raise InvalidSpecError(f"Fundamental monomial {fundamental} does not have the cap degree {self.cap}")
        object.__setattr__(self, "fundamental", fundamental)

    @classmethod
    def projective_product(
        cls,
        dims: Sequence[int],
        domain: CoefficientDomain = CoefficientDomain.integer,
        names: Sequence[str] | None = None,
    ) -> TruncatedRingSpec:
        """
        Chow ring of P^{n_1} x ... x P^{n_m}: hyperplane classes h_i with h_i^{n_i + 1} = 0.

        Args:
            dims: the dimensions n_i
            domain: coefficient domain
            names: variable names, h1..hm by default

        Returns:
            the truncated ring spec, with fundamental class h_1^{n_1} ... h_m^{n_m}

        """
        if not dims or any(n < 0 for n in dims):
            raise InvalidSpecError(f"Invalid projective dimensions {dims}")
        names = tuple(names) if names is not None else tuple(f"h{i + 1}" for i in range(len(dims)))
        return cls(
            names=names,
            weights=(1,) * len(dims),
            nilpotency=tuple(n + 1 for n in dims),
            cap=sum(dims),
            domain=domain,
        )

    @classmethod
    def polynomial(
        cls, names: Sequence[str], weights: Sequence[int], domain: CoefficientDomain
    ) -> TruncatedRingSpec:
        """Free graded polynomial ring, no truncation."""
        return cls(names=tuple(names), weights=tuple(weights), nilpotency=(None,) * len(names), domain=domain)

    @property
    def dim(self) -> int | None:
        return self.cap

    def _weighted_degree(self, monomial: Monomial) -> int:
        return sum(e * w for e, w in zip(monomial, self.weights))

    def degree_of(self, monomial: Monomial) -> int:
        return self._weighted_degree(monomial)

    def admits(self, monomial: Monomial) -> bool:
        for exponent, order in zip(monomial, self.nilpotency):
            if order is not None and exponent >= order:
                return False
        return self.cap is None or self._weighted_degree(monomial) <= self.cap

    def sort_key(self, monomial: Monomial) -> tuple:
        # graded lexicographic, highest first
        return -self._weighted_degree(monomial), tuple(-e for e in monomial)

    def element(self, terms: Mapping[Monomial, Any] | Iterable[tuple[Monomial, Any]]) -> GradedElement:
        """Builds an element in normal form from raw terms; coefficients are coerced, repeated monomials summed."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        domain = sympy_domain(self.domain)
        accumulated: dict[Monomial, Any] = {}
        for monomial, coefficient in items:
            monomial = tuple(monomial)
            if len(monomial) != len(self.names) or any(e < 0 for e in monomial):
                raise InvalidSpecError(f"Monomial {monomial} does not fit variables {self.names}")
            if not self.admits(monomial):
                continue
            accumulated[monomial] = accumulated.get(monomial, domain.zero) + coerce(coefficient, self.domain)
        return GradedElement(self, {m: c for m, c in accumulated.items() if c})

    def zero(self) -> GradedElement:
        return GradedElement(self, {})

    def one(self) -> GradedElement:
        return self.element({(0,) * len(self.names): 1})

    def variable(self, name: str) -> GradedElement:
        if name not in self.names:
            raise InvalidSpecError(f"Unknown variable {name!r}; ring variables are {self.names}")
        exponents = tuple(int(n == name) for n in self.names)
        return self.element({exponents: 1})

    def gens(self) -> tuple[GradedElement, ...]:
        return tuple(self.variable(name) for name in self.names)

    def normal_form(self, x: GradedElement) -> GradedElement:
        return self.element(x.terms)

    def integrate(self, x: RingElement) -> Any:
        self.check_member(x)
        if self.fundamental is None:
            raise InvalidSpecError(f"Ring {self.names} has no fundamental class")
        return x.terms.get(self.fundamental, sympy_domain(self.domain).zero)

    def with_domain(self, domain: CoefficientDomain) -> TruncatedRingSpec:
        return replace(self, domain=domain)

    def unit_coefficient(self, x: RingElement) -> Any:
        self.check_member(x)
        return x.coefficient((0,) * len(self.names))

    def __repr__(self) -> str:
        return f"TruncatedRingSpec({','.join(self.names)}; cap={self.cap}; {self.domain})"


@dataclass(frozen=True, eq=False)
class GradedElement(RingElement):
    ring: TruncatedRingSpec
    terms: dict[Monomial, Any]

    def _same_ring(self, other: GradedElement) -> None:
        if not isinstance(other, GradedElement) or other.ring != self.ring:
            raise RingMismatchError(f"Cannot combine elements of {self.ring!r} and {getattr(other, 'ring', other)!r}")

    def __add__(self, other: GradedElement) -> GradedElement:
        if is_scalar(other):
            return self + self.ring.scalar(other)
        self._same_ring(other)
        result = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            value = result.get(monomial, 0) + coefficient
            if value:
                result[monomial] = value
            else:
                result.pop(monomial, None)
        return GradedElement(self.ring, result)

    def __mul__(self, other: GradedElement | Any) -> GradedElement:
        if is_scalar(other):
            return self.scale(other)
        self._same_ring(other)
        ring = self.ring
        result: dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                if not ring.admits(monomial):
                    continue
                result[monomial] = result.get(monomial, 0) + c1 * c2
        return GradedElement(ring, {m: c for m, c in result.items() if c})

    def scale(self, value: Any) -> GradedElement:
        factor = coerce(value, self.ring.domain)
        if not factor:
            return self.ring.zero()
        return GradedElement(self.ring, {m: c * factor for m, c in self.terms.items() if c * factor})

    def homogeneous(self, degree: int) -> GradedElement:
        return GradedElement(self.ring, {m: c for m, c in self.terms.items() if self.ring.degree_of(m) == degree})

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({self.ring.degree_of(m) for m in self.terms}))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Any:
        return self.terms.get(tuple(monomial), sympy_domain(self.ring.domain).zero)

    def convert(self, domain: CoefficientDomain) -> GradedElement:
        return self.ring.with_domain(domain).element(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def _format_monomial(self, monomial: Monomial) -> str:
        factors = []
        for name, exponent in zip(self.ring.names, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors)

    def __str__(self) -> str:
        """Canonical text form, e.g. '3*h1^2*h2 - 2*h2^3'."""
        if not self.terms:
            return "0"
        pieces = []
        for monomial in sorted(self.terms, key=self.ring.sort_key):
            text = format_coefficient(self.terms[monomial])
            negative = text.startswith("-")
            magnitude = text.lstrip("-")
            body = self._format_monomial(monomial)
            if not body:
                term = magnitude
            elif magnitude == "1":
                term = body
            else:
                term = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(f"-{term}" if negative else term)
            else:
                pieces.append(f"- {term}" if negative else f"+ {term}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"GradedElement({self})"
