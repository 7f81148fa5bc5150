from __future__ import annotations

from dataclasses import dataclass, field

from fanolab.features.topomod.steenrod import SW_RING, SWPolynomial
from fanolab.shared.utils.exceptions import InvalidSpecError

# (a, b, c) stands for nu^a e^b p^c
TorsionMonomial = tuple[int, int, int]
WEIGHTS = (3, 4, 4)


def _normalise(terms: dict[TorsionMonomial, int]) -> dict[TorsionMonomial, int]:
    result = {}
    for monomial, coefficient in terms.items():
        if monomial[0] > 0:
            # 2 nu = 0
            coefficient %= 2
        if coefficient:
            result[monomial] = coefficient
    return result


@dataclass(frozen=True, eq=False)
class TorsionRingElement:
    """Element of H*(BSO(4), Z) = Z[nu, e, p] / (2 nu); nu-positive coefficients are taken mod 2."""

    terms: dict[TorsionMonomial, int] = field(default_factory=dict)

    def __post_init__(self):
        for monomial in self.terms:
            if len(monomial) != 3 or any(e < 0 for e in monomial):
                raise InvalidSpecError(f"Bad monomial {monomial} in Z[nu, e, p]")
        object.__setattr__(self, "terms", _normalise(dict(self.terms)))

    @classmethod
    def one(cls) -> TorsionRingElement:
        return cls({(0, 0, 0): 1})

    @classmethod
    def nu(cls) -> TorsionRingElement:
        return cls({(1, 0, 0): 1})

    @classmethod
    def euler(cls) -> TorsionRingElement:
        return cls({(0, 1, 0): 1})

    @classmethod
    def pontryagin(cls) -> TorsionRingElement:
        return cls({(0, 0, 1): 1})

    def __add__(self, other: TorsionRingElement) -> TorsionRingElement:
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return TorsionRingElement(terms)

    def __neg__(self) -> TorsionRingElement:
        return self.scale(-1)

    def __sub__(self, other: TorsionRingElement) -> TorsionRingElement:
        return self + (-other)

    def __mul__(self, other: TorsionRingElement | int) -> TorsionRingElement:
        if isinstance(other, int):
            return self.scale(other)
        terms: dict[TorsionMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return TorsionRingElement(terms)

    def __rmul__(self, other: int) -> TorsionRingElement:
        return self.scale(other)

    def __pow__(self, exponent: int) -> TorsionRingElement:
        result = TorsionRingElement.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value: int) -> TorsionRingElement:
        return TorsionRingElement({m: c * value for m, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({sum(e * w for e, w in zip(m, WEIGHTS)) for m in self.terms}))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorsionRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (a, b, c), coefficient in sorted(self.terms.items(), reverse=True):
            factors = [f"{name}^{e}" if e > 1 else name for name, e in zip(("nu", "e", "p"), (a, b, c)) if e]
            body = "*".join(factors) or "1"
            pieces.append(body if coefficient == 1 else f"{coefficient}*{body}")
        return " + ".join(pieces)


def reduce_mod2(x: TorsionRingElement) -> SWPolynomial:
    """Mod-2 reduction as the ring map nu -> w3, e -> w4, p -> w2^2."""
    return SW_RING.element({(2 * c, a, b): coefficient for (a, b, c), coefficient in x.terms.items()})
