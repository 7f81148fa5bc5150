from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from operator import mul
from typing import Any, Mapping, Sequence

from fanolab.shared.charclass.calculus import chern_to_ch, chi_top, hrr_chi, tensor, whitney_quotient, whitney_sum
from fanolab.shared.charclass.chern import CharacterData, ChernData
from fanolab.shared.common.enums import TautologicalBundle
from fanolab.shared.exact_core.domains import to_integer
from fanolab.shared.exact_core.graded import TruncatedRingSpec
from fanolab.shared.exact_core.rings import IntersectionRing, RingElement
from fanolab.shared.schubert.grassmannian import GrassmannianRing, GrassmannianSpec, tautological_chern
from fanolab.shared.utils.exceptions import DegreeMismatchError, InvalidSpecError
from fanolab.shared.utils.logger import logger
from fanolab.shared.varieties.bundle import BundleElement, ProjectiveBundleRing


@dataclass(frozen=True)
class Variety:
    """
    A smooth projective variety presented by an intersection ring and tangent Chern data.

    A complete intersection is modelled numerically inside its ambient ring: `fundamental` is the product of the
    cutting divisors and every integral is taken against it.
    """

    name: str
    dim: int
    ring: IntersectionRing
    tangent: ChernData
    divisors: Mapping[str, RingElement] = field(default_factory=dict)
    fundamental: RingElement | None = None

    def integrate(self, x: RingElement) -> Any:
        if self.fundamental is not None:
            x = x * self.fundamental.convert(x.ring.domain)
        return x.ring.integrate(x)

    def degree(self, x: RingElement) -> int:
        return to_integer(self.integrate(x))

    def divisor(self, name: str) -> RingElement:
        if name not in self.divisors:
            raise InvalidSpecError(f"{self.name} has no divisor named {name!r}; known: {sorted(self.divisors)}")
        return self.divisors[name]

    def canonical(self) -> RingElement:
        return -self.tangent.c(1)

    def structure_sheaf(self) -> CharacterData:
        return chern_to_ch(ChernData.trivial(self.ring, 1))

    def line_bundle(self, divisor: RingElement) -> CharacterData:
        return chern_to_ch(ChernData.line_bundle(self.ring, divisor))

    def chi(self, sheaf: CharacterData) -> int:
        return hrr_chi(sheaf, self.tangent, self.fundamental)

    def chi_top(self) -> int:
        return chi_top(self.tangent, self.dim, self.fundamental)


def projective_product(dims: Sequence[int], names: Sequence[str] | None = None) -> Variety:
    """P^{n_1} x ... x P^{n_m} with hyperplane classes h1..hm and c(T) = prod (1 + h_i)^{n_i + 1}."""
    ring = TruncatedRingSpec.projective_product(dims, names=names)
    generators = ring.gens()
    total = reduce(mul, ((ring.one() + h) ** (n + 1) for h, n in zip(generators, dims)), ring.one())
    label = " x ".join(f"P{n}" for n in dims)
    return Variety(
        name=label,
        dim=sum(dims),
        ring=ring,
        tangent=ChernData.from_total(ring, sum(dims), total),
        divisors=dict(zip(ring.names, generators)),
    )


def projective_space(n: int) -> Variety:
    return projective_product([n], names=["h"])


def grassmannian(k: int, n: int) -> Variety:
    """Gr(k, n) with tangent bundle Hom(S, Q) = S dual (x) Q."""
    spec = GrassmannianSpec(k, n)
    ring = GrassmannianRing(spec)
    tangent = tensor(
        tautological_chern(spec, TautologicalBundle.dual_subbundle),
        tautological_chern(spec, TautologicalBundle.quotient),
    )
    return Variety(name=str(spec), dim=spec.dim, ring=ring, tangent=tangent, divisors={"sigma1": ring.sigma(1)})


def projective_bundle(base: Variety, bundle: ChernData) -> Variety:
    """
    P(E), the bundle of lines in E, with zeta = c_1(O(1)).

    Args:
        base: an honestly modelled variety
        bundle: Chern data of E on the base ring, rank r >= 1

    Returns:
        a variety of dimension dim(base) + r - 1 whose integration pushes forward to the base; the tangent bundle
        satisfies c(T) = pi^* c(T_base) * sum_i c_i(E) (1 + zeta)^{r - i}

    """
    if bundle.rank < 1:
        raise InvalidSpecError(f"Cannot projectivise a bundle of rank {bundle.rank}")
    if bundle.ring != base.ring:
        raise InvalidSpecError(f"Bundle lives on {bundle.ring!r}, base is {base.ring!r}")
    if base.fundamental is not None:
        raise InvalidSpecError("Projective bundles over numerically modelled complete intersections are not supported")
    ring = ProjectiveBundleRing.of(bundle)
    zeta = ring.zeta()
    one_plus_zeta = ring.one() + zeta
    relative = sum(
        (ring.pullback(bundle.c(i)) * one_plus_zeta ** (bundle.rank - i) for i in range(bundle.rank + 1)),
        ring.zero(),
    )
    total = ring.pullback(base.tangent.total_class()) * relative
    dim = base.dim + bundle.rank - 1
    divisors = {name: ring.pullback(d) for name, d in base.divisors.items()}
    divisors["zeta"] = zeta
    logger.debug(f"Projective bundle of rank {bundle.rank} over {base.name}, dimension {dim}")
    return Variety(
        name=f"P(E) over {base.name}",
        dim=dim,
        ring=ring,
        tangent=ChernData.from_total(ring, dim, total),
        divisors=divisors,
    )


def pushforward(variety: Variety, x: BundleElement) -> RingElement:
    if not isinstance(variety.ring, ProjectiveBundleRing):
        raise InvalidSpecError(f"{variety.name} is not a projective bundle")
    return variety.ring.pushforward(x)


def hirzebruch_surface(a: int) -> Variety:
    """
    F_a = P(O + O(-a)) over P^1.

    Divisors: f (fibre), zeta, the negative section s = zeta - a f with s^2 = -a, and k_rel = -2 zeta - c_1(E),
    the relative canonical class, equal to -2 s - a f.
    """
    if a < 0:
        raise InvalidSpecError(f"Hirzebruch surfaces are indexed by a >= 0, got {a}")
    line = projective_space(1)
    h = line.divisor("h")
    bundle = ChernData.from_classes(line.ring, 2, [h.scale(-a)])
    surface = projective_bundle(line, bundle)
    ring = surface.ring
    fibre, zeta = surface.divisor("h"), surface.divisor("zeta")
    divisors = {
        "f": fibre,
        "zeta": zeta,
        "s": zeta - fibre.scale(a),
        "k_rel": zeta.scale(-2) - ring.pullback(bundle.c(1)),
    }
    return Variety(name=f"F_{a}", dim=2, ring=ring, tangent=surface.tangent, divisors=divisors)


def _divisor_product(ambient: Variety, divisors: Sequence[RingElement]) -> RingElement:
    return reduce(mul, divisors, ambient.ring.one())


def complete_intersection(ambient: Variety, divisors: Sequence[RingElement], name: str | None = None) -> Variety:
    """
    Numerical complete intersection of the given divisors in an honestly modelled ambient variety.

    The tangent data is the formal quotient c(T_ambient) / prod (1 + D_i) and integrals carry prod D_i.
    """
    if ambient.fundamental is not None:
        raise InvalidSpecError("Nested numerical complete intersections are not supported")
    if len(divisors) > ambient.dim:
        raise DegreeMismatchError(f"{len(divisors)} divisors cut {ambient.name} below dimension 0")
    for d in divisors:
        ambient.ring.check_member(d)
        if d.degree != 1:
            raise DegreeMismatchError(f"{d} is not a divisor class")
    normal = ChernData.trivial(ambient.ring, 0)
    for d in divisors:
        normal = whitney_sum(normal, ChernData.line_bundle(ambient.ring, d))
    return Variety(
        name=name or f"complete intersection of {len(divisors)} divisors in {ambient.name}",
        dim=ambient.dim - len(divisors),
        ring=ambient.ring,
        tangent=whitney_quotient(ambient.tangent, normal),
        divisors=dict(ambient.divisors),
        fundamental=_divisor_product(ambient, divisors),
    )


def intersection_number_ci(
    ambient: Variety, ci_divisors: Sequence[RingElement], classes: Sequence[RingElement]
) -> int:
    """
    Intersection number of ambient classes restricted to the complete intersection of ci_divisors.

    Args:
        ambient: an honestly modelled ambient variety
        ci_divisors: the divisors cutting the complete intersection
        classes: homogeneous classes whose degrees fill the remaining dimension

    Returns:
        the integral of prod ci_divisors * prod classes on the ambient variety

    """
    total_degree = sum(c.degree for c in ci_divisors) + sum(c.degree for c in classes)
    if total_degree != ambient.dim:
        raise DegreeMismatchError(
            f"Classes of total degree {total_degree} on {ambient.name} of dimension {ambient.dim}"
        )
    product = _divisor_product(ambient, list(ci_divisors) + list(classes))
    return ambient.degree(product)


def adjunction_canonical(ambient: Variety, ci_divisors: Sequence[RingElement]) -> RingElement:
    """K_ambient + sum D_i, as an ambient class."""
    return sum(ci_divisors, ambient.canonical())