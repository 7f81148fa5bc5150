import threading
from typing import Optional

from cachetools import LRUCache, cached
from sympy import Rational, binomial, simplify, symbols

from fanolab.features.ranklocus.schemas import (
    FanoFamilyMember,
    IsolatedSingularities,
    LefschetzData,
    LunaSlice,
    PlannerReport,
    RankLocusData,
    RankLocusSpec,
    SingularCount,
    SingularLocus,
    rank_locus_dimension,
)
from fanolab.shared.charclass.calculus import dual, sym2
from fanolab.shared.common.decorators import timer_func
from fanolab.shared.common.schemas.common import Citation
from fanolab.shared.common.enums import (
    Classification,
    ConiveauVerdict,
    Smoothness,
    Source,
    TautologicalBundle,
    WindowVerdict,
)
from fanolab.shared.config.config import settings
from fanolab.shared.exact_core.domains import to_integer
from fanolab.shared.schubert.grassmannian import GrassmannianSpec, tautological_chern
from fanolab.shared.utils.exceptions import InvalidSpecError, OutOfRangeError, ScaleExceededError
from fanolab.shared.utils.logger import logger
from fanolab.shared.varieties.bundle import ProjectiveBundleRing


@cached(cache=LRUCache(maxsize=256), lock=threading.Lock())
def _pushforward_degree(r: int, n: int) -> int:
    # P(Sym^2 Q dual) over Gr(n - r, n) resolves the closure of Z_{r,n}; its zeta is the pulled-back hyperplane
    spec = GrassmannianSpec(n - r, n)
    bundle = sym2(dual(tautological_chern(spec, TautologicalBundle.quotient)))
    ring = ProjectiveBundleRing.of(bundle)
    degree = to_integer(ring.integrate(ring.zeta() ** rank_locus_dimension(r, n)))
    logger.debug(f"Pushforward degree of Z_({r},{n}) over {spec}: {degree}")
    return degree


class RankLocusService:
    @staticmethod
    def dim_rank_locus(r: int, n: int) -> int:
        """
        Dimension of the locus Z_{r,n} of quadrics of rank exactly r in n variables.

        Args:
            r: rank, 1 <= r <= n
            n: number of variables

        Returns:
            rn - r^2/2 + r/2 - 1

        """
        if not 1 <= r <= n:
            raise OutOfRangeError(f"Rank loci need 1 <= r <= n, got (r, n) = ({r}, {n})")
        return rank_locus_dimension(r, n)

    @staticmethod
    def degree_closed_form(r: int, n: int) -> int:
        """prod_{i=0}^{n-r-1} C(n+i, n-r-i) / C(2i+1, i), over exact rationals."""
        if not 1 <= r <= n:
            raise OutOfRangeError(f"Rank loci need 1 <= r <= n, got (r, n) = ({r}, {n})")
        value = Rational(1)
        for i in range(n - r):
            value *= Rational(binomial(n + i, n - r - i), binomial(2 * i + 1, i))
        return to_integer(value)

    @classmethod
    @timer_func
    def degree_rank_locus(cls, r: int, n: int) -> int:
        """
        Degree of the closure of Z_{r,n}, pushed forward from its resolution P(Sym^2 Q dual) over Gr(n - r, n).

        Args:
            r: rank, 1 <= r <= n
            n: number of variables, with (n - r) r <= settings.max_grassmannian_dim

        Returns:
            the integral over Gr(n - r, n) of the top Segre class of Sym^2 Q dual

        """
        cls.dim_rank_locus(r, n)
        if r == n:
            return 1
        if (n - r) * r > settings.max_grassmannian_dim:
            raise ScaleExceededError(
                f"Gr({n - r},{n}) has dimension {(n - r) * r} > {settings.max_grassmannian_dim}; "
                f"use degree_closed_form for (r, n) = ({r}, {n})"
            )
        return _pushforward_degree(r, n)

    @classmethod
    def rank_locus(cls, r: int, n: int) -> RankLocusData:
        try:
            degree = cls.degree_rank_locus(r, n)
        except ScaleExceededError as error:
            logger.info(f"{error}")
            degree = None
        return RankLocusData(
            r=r,
            n=n,
            dimension=cls.dim_rank_locus(r, n),
            degree=degree,
            degree_closed_form=cls.degree_closed_form(r, n),
            grassmannian=str(GrassmannianSpec(n - r, n)) if r < n else None,
        )

    @classmethod
    def luna_slice(cls, r: int, n: int) -> LunaSlice:
        """
        Weights of the normal representation of W_{r,n} at a point over Z_{r-2,n}.

        The stabiliser acts with weight +1 and -1 on two copies of A^{n-r+2} and trivially on the rest; the invariant
        quotient of the weighted part is the affine cone C over the Segre embedding of P^{n-r+1} x P^{n-r+1}.
        """
        if r < 4 or r % 2 or r > n:
            raise InvalidSpecError(f"Luna slices are defined for even 4 <= r <= n, got (r, n) = ({r}, {n})")
        m = n - r + 1
        cone_dimension = 2 * m + 1
        return LunaSlice(
            w_plus=n - r + 2,
            w_minus=n - r + 2,
            cone=f"affine cone over the Segre embedding of P^{m} x P^{m}",
            cone_dimension=cone_dimension,
            trivial_multiplicity=cls.dim_rank_locus(r, n) - cone_dimension,
        )

    @classmethod
    def lefschetz_range(cls, r: int, n: int, c: int) -> int:
        """N = min(2n - 1, dim W - c): H^i(W) -> H^i(X) is an isomorphism for i < N on the smooth part."""
        return min(2 * n - 1, cls.dim_rank_locus(r, n) - c)

    @classmethod
    def lefschetz(cls, r: int, n: int, c: int) -> LefschetzData:
        codimension = n - r + 2
        return LefschetzData(
            range_bound=cls.lefschetz_range(r, n, c),
            codimension=codimension,
            isomorphism_below=2 * codimension - 1,
        )

    @classmethod
    def singular_locus(cls, r: int, n: int) -> SingularLocus:
        cls.dim_rank_locus(r, n)
        z_singular = None if r in (1, n) else f"closure of Z_({r - 1},{n})"
        if r >= 4:
            w_singular = f"preimage of the closure of Z_({r - 2},{n})"
            w_codimension = rank_locus_dimension(r, n) - rank_locus_dimension(r - 2, n)
        else:
            w_singular, w_codimension = None, None
        return SingularLocus(
            z_singular_along=z_singular,
            w_singular_along=w_singular,
            w_singular_codimension=w_codimension,
            branch_codimension=n - r + 1,
        )

    @staticmethod
    def singular_count(r: int, n: int) -> SingularCount:
        """
        Dimension of the singular locus of X at the largest c with K_X = -H, namely c = rn/2 - 1.

        The value dim Z_{r-2,n} - rn/2 + 1 is matched against (n - r)(r - 4)/2 + r/2 - 3 as polynomials in r, n.
        """
        r_, n_ = symbols("r n")
        dim_below = (r_ - 2) * n_ - (r_ - 2) * (r_ - 3) / 2 - 1
        count = dim_below - r_ * n_ / 2 + 1
        closed_form = (n_ - r_) * (r_ - 4) / 2 + r_ / 2 - 3
        value = to_integer(closed_form.subs({r_: r, n_: n}))
        return SingularCount(
            value=value,
            closed_form=str(closed_form),
            symbolic_match=simplify(count - closed_form) == 0,
            nonnegative=value >= 0,
        )

    @classmethod
    def _safe_degree(cls, r: int, n: int) -> Optional[int]:
        try:
            return cls.degree_rank_locus(r, n)
        except ScaleExceededError:
            return None

    @staticmethod
    def _smoothness(spec: RankLocusSpec) -> tuple[Smoothness, int]:
        if spec.r == 2:
            return Smoothness.smooth, -1
        singular_dimension = rank_locus_dimension(spec.r - 2, spec.n) - spec.c
        if singular_dimension < 0:
            return Smoothness.smooth, singular_dimension
        if singular_dimension == 0:
            return Smoothness.isolated_singularities, 0
        return Smoothness.singular, singular_dimension

    @staticmethod
    def _classification(k_coefficient: int, smoothness: Smoothness) -> Classification:
        if smoothness == Smoothness.singular:
            return Classification.singular
        if k_coefficient < 0:
            return Classification.fano
        if k_coefficient == 0:
            return Classification.calabi_yau
        return Classification.general_type

    @staticmethod
    def _windows(spec: RankLocusSpec) -> tuple[WindowVerdict, WindowVerdict]:
        if spec.r != 4:
            return WindowVerdict.no_claim, WindowVerdict.no_claim
        torsion = WindowVerdict.satisfied if spec.c <= 4 * spec.n - 11 else WindowVerdict.not_satisfied
        obstruction = WindowVerdict.satisfied if spec.c <= 4 * spec.n - 13 else WindowVerdict.not_satisfied
        return torsion, obstruction

    @staticmethod
    def _coniveau(spec: RankLocusSpec) -> ConiveauVerdict:
        if spec.r != 4 or spec.c != 2 * spec.n - 1 or spec.n < 5:
            return ConiveauVerdict.no_claim
        if spec.n == 5:
            return ConiveauVerdict.no_conclusion
        return ConiveauVerdict.not_strong_coniveau

    @staticmethod
    def _annotations(spec: RankLocusSpec, smoothness: Smoothness, torsion: WindowVerdict) -> list[str]:
        r, n, c = spec.r, spec.n, spec.c
        annotations = []
        if r == 4 and c == 2 * n - 1 and n >= 5:
            annotations.append(f"X is nonsingular of dimension {2 * n - 6} with K_X = -H, hence Fano of index 1")
        if r == 4 and smoothness == Smoothness.smooth and torsion == WindowVerdict.satisfied:
            annotations.append("X has Picard rank 1")
            annotations.append(
                "Tors H^3(X, Z) is the Brauer group of X; its generator is the Brauer-Severi variety of the family "
                "of maximal linear subspaces (recorded, not computed)"
            )
        if (r, n, c) == (4, 4, 6):
            annotations.append(
                "Artin-Mumford double solid: a double cover of P^3 branched along a quartic, with 10 ordinary double "
                "points whose exceptional divisors are P^1 x P^1"
            )
        if (r, n, c) == (4, 4, 4):
            annotations.append("The singular locus is a smooth Enriques surface; H^3 of the blow-up resolution is 0")
        if (r, n, c) == (4, 4, 5):
            annotations.append(
                "The singular locus is a smooth curve of genus 6; H^3 of the blow-up resolution is torsion free"
            )
        if r == n:
            annotations.append(
                f"W is the double cover z^2 = f of P^{rank_locus_dimension(r, n)} branched along the degree {n} "
                f"discriminant, a hypersurface in the weighted projective space P(1, ..., 1, {n // 2})"
            )
        return annotations

    @classmethod
    def plan(cls, spec: RankLocusSpec) -> PlannerReport:
        """
        Derives every invariant of X = W_{r,n} cut by c general hyperplanes.

        Args:
            spec: validated (r, n, c)

        Returns:
            the planner report, with one citation per derived field

        """
        r, n, c = spec.r, spec.n, spec.c
        dim_z = cls.dim_rank_locus(r, n)
        k_coefficient = c - r * n // 2
        smoothness, singular_dimension = cls._smoothness(spec)
        torsion, obstruction = cls._windows(spec)
        deg_z = cls._safe_degree(r, n)
        isolated = None
        if smoothness == Smoothness.isolated_singularities:
            m = n - r + 1
            isolated = IsolatedSingularities(
                count=cls._safe_degree(r - 2, n),
                exceptional_divisor=f"P^{m} x P^{m}",
                local_model=f"affine cone over the Segre embedding of P^{m} x P^{m}",
            )
        h3 = None
        if r == 4 and torsion == WindowVerdict.satisfied and smoothness == Smoothness.smooth:
            h3 = "Z/2"
        citations = {
            "dim_Z": Citation.reference(
                Source.rank_locus_dimension, "the rank locus is irreducible of dimension rn - r^2/2 + r/2 - 1"
            ),
            "dim_X": Citation.derived(
                Source.rank_locus_dimension,
                "W is finite of degree 2 over the closure of Z, and each hyperplane drops dimension by one",
            ),
            "deg_Z": Citation.reference(
                Source.rank_locus_degree,
                "degree of the closure of Z via the resolution P(Sym^2 Q dual) over Gr(n - r, n)",
            ),
            "h_degree": Citation.derived(
                Source.rank_locus_degree, "H-degrees double under the double cover and are kept by linear sections"
            ),
            "k_coefficient": Citation.reference(
                Source.double_cover_canonical, "-K_W = (rn/2) H, and adjunction adds H per hyperplane section"
            ),
            "smoothness": Citation.reference(
                Source.singular_locus,
                "W is singular exactly over the closure of Z_(r-2,n); a general linear section of codimension c "
                "misses it when c exceeds its dimension",
            ),
            "torsion_window": Citation.reference(
                Source.torsion_theorem, "H^3(X, Z) = Z/2 for smooth X with r = 4 and c <= 4n - 11"
            ),
            "obstruction_window": Citation.reference(
                Source.coniveau_theorem, "the mod-2 square of the torsion class survives for c <= 4n - 13"
            ),
            "coniveau": Citation.reference(
                Source.coniveau_theorem, "a degree-3 class with nonzero mod-2 square is not of strong coniveau >= 1"
            ),
            "lefschetz": Citation.reference(
                Source.torsion_theorem,
                "Lefschetz range N = min(2n - 1, dim W - c); the unstable locus of the presentation has codimension "
                "n - r + 2, giving isomorphisms below twice that minus one",
            ),
        }
        if cls._coniveau(spec) == ConiveauVerdict.no_conclusion:
            citations["coniveau"] = Citation.reference(
                Source.vanishing_obstruction,
                "for the fourfold the mod-2 square of the torsion class vanishes, so the obstruction decides nothing",
            )
        if r >= 4:
            citations["luna"] = Citation.derived(
                Source.luna_slice, "M = dim W - dim C, with C the cone of the Luna slice"
            )
        report = PlannerReport(
            spec=spec,
            dim_Z=dim_z,
            dim_W=dim_z,
            dim_X=dim_z - c,
            deg_Z=deg_z,
            h_degree=None if deg_z is None else 2 * deg_z,
            k_coefficient=k_coefficient,
            classification=cls._classification(k_coefficient, smoothness),
            smoothness=smoothness,
            singular_dimension=singular_dimension,
            torsion_window=torsion,
            obstruction_window=obstruction,
            h3=h3,
            coniveau=cls._coniveau(spec),
            luna=cls.luna_slice(r, n) if r >= 4 else None,
            lefschetz=cls.lefschetz(r, n, c),
            singular_locus=cls.singular_locus(r, n),
            isolated_singularities=isolated,
            singular_count=cls.singular_count(r, n) if r >= 4 else None,
            annotations=cls._annotations(spec, smoothness, torsion),
            citations=citations,
        )
        logger.info(f"Planned (r, n, c) = ({r}, {n}, {c}): dim {report.dim_X}, K = {k_coefficient}H, {smoothness}")
        return report

    @staticmethod
    def fano_family(d: int) -> FanoFamilyMember:
        """The d-dimensional member (4, (d + 6)/2, d + 5): Fano of index 1 with H^3 = Z/2, d even and >= 4."""
        if d < 4 or d % 2:
            raise InvalidSpecError(f"Fano family members exist for even d >= 4, got {d}")
        spec = RankLocusSpec(r=4, n=(d + 6) // 2, c=d + 5)
        return FanoFamilyMember(dimension=d, spec=spec, index=1, h3="Z/2")
