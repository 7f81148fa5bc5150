from fanolab.features.appendixlab.schemas import (
    AppendixReport,
    ConicObstructionReport,
    FourfoldHodgeReport,
    RuledSigmaReport,
)
from fanolab.features.ranklocus.service import RankLocusService
from fanolab.shared.charclass.calculus import sym2, whitney_quotient
from fanolab.shared.charclass.chern import ChernData
from fanolab.shared.common.decorators import timer_func
from fanolab.shared.common.enums import CoverDirection, CoverKind, Source, TautologicalBundle
from fanolab.shared.common.schemas.common import Citation
from fanolab.shared.exact_core.domains import to_integer
from fanolab.shared.exact_core.matrices import IntegerMatrix, solve_integer
from fanolab.shared.schubert.grassmannian import GrassmannianSpec, integrate_gr, tautological_chern
from fanolab.shared.utils.exceptions import ConsistencyError
from fanolab.shared.utils.logger import logger
from fanolab.shared.varieties.bundle import ProjectiveBundleRing
from fanolab.shared.varieties.surfaces import CoverNumerics, double_cover_invariants, surface_hodge, surface_invariants
from fanolab.shared.varieties.variety import (
    adjunction_canonical,
    complete_intersection,
    hirzebruch_surface,
    intersection_number_ci,
    projective_product,
)

# Z_{4,5} is a hypersurface in P(Sym^2 V dual) = P^14
QUADRICS_P = 14
HYPERPLANE_SECTIONS = 9
PICARD_RANK = 1


class AppendixLabService:
    @staticmethod
    def appendix_intersections() -> AppendixReport:
        """
        Bidegree intersection numbers on Y, the complete intersection of five (1,1) divisors in P4 x P5.

        Returns:
            degrees of R and S, the quadruple-point number, the multiplicity ratio and the degree of D_H

        """
        ambient = projective_product([4, 5], names=["h4", "h5"])
        h4, h5 = ambient.divisor("h4"), ambient.divisor("h5")
        y = [h4 + h5] * 5
        e4 = h4.scale(5) - h5
        e5 = h5.scale(4) - h4.scale(2)

        deg_r = intersection_number_ci(ambient, y, [h4, h4, h4, e5])
        deg_s = intersection_number_ci(ambient, y, [h4, h4, e4, h5])
        quad_number = intersection_number_ci(ambient, y, [h4, h4, e4, e5])
        deg_xz = intersection_number_ci(ambient, y, [h5, h5, h5, h5])
        # 2 D_H ~ 4 H5 on Y, so D_H has half the degree of 4 H5
        four_h5 = intersection_number_ci(ambient, y, [h5.scale(4), h5, h5, h5])
        if four_h5 % 2 or quad_number % deg_s:
            raise ConsistencyError(f"4 H5 degree {four_h5} or quadruple number {quad_number} fails to divide")
        logger.debug(f"Appendix intersections: R {deg_r}, S {deg_s}, quadruple {quad_number}, X_Z {deg_xz}")
        return AppendixReport(
            deg_R=deg_r,
            deg_S=deg_s,
            quad_number=quad_number,
            multiplicity=quad_number // deg_s,
            deg_XZ=deg_xz,
            D_H_degree=four_h5 // 2,
            citations={
                "deg_R": Citation.reference(
                    Source.bidegree_computation, "degree of R is (1,0)^3 [E5] (1,1)^5 with E5 of bidegree (-2, 4)"
                ),
                "deg_S": Citation.reference(
                    Source.bidegree_computation,
                    "degree of S is (1,0)^2 [E4] (0,1) (1,1)^5 with E4 of bidegree (5, -1)",
                ),
                "multiplicity": Citation.derived(
                    Source.bidegree_computation,
                    "multiplicity of Y along S read off as the ratio (1,0)^2 [E4] [E5] (1,1)^5 / deg S",
                ),
                "D_H_degree": Citation.reference(
                    Source.bidegree_computation, "D_H is cut by a quartic with multiplicity 2, so 2 D_H ~ 4 H5 on Y"
                ),
            },
        )

    @staticmethod
    @timer_func
    def conic_obstruction() -> ConicObstructionReport:
        """
        Decides whether the conic bundle over W_{4,5} can have a rational section.

        P(E) over Gr(3,5) with 0 -> E -> Sym^2 V dual -> Sym^2 U dual -> 0. A section divisor D = aL + bG must
        meet L^13 in the 10 fibres lying over the degree-2 cover of a quintic's points.
        """
        spec = GrassmannianSpec(3, 5)
        sym2_dual = sym2(tautological_chern(spec, TautologicalBundle.dual_subbundle))
        kernel = whitney_quotient(ChernData.trivial(sym2_dual.ring, 15), sym2_dual)
        ring = ProjectiveBundleRing.of(kernel)
        zeta = ring.zeta()
        sigma1 = ring.pullback(sym2_dual.ring.sigma(1))

        zeta14 = to_integer(ring.integrate(zeta**14))
        zeta13_g = to_integer(ring.integrate(zeta**13 * sigma1))
        top_chern = integrate_gr(sym2_dual.c(6))
        if zeta14 != top_chern:
            raise ConsistencyError(f"zeta^14 = {zeta14} differs from c_6(Sym^2 U dual) = {top_chern}")

        fiber_count = 2 * RankLocusService.degree_rank_locus(4, 5)
        solution = solve_integer(IntegerMatrix.from_rows([[zeta13_g, zeta14]]), [fiber_count])
        logger.info(f"Conic obstruction: D.L^13 = {zeta13_g} b + {zeta14} a against {fiber_count} fibres")
        return ConicObstructionReport(
            zeta14=zeta14,
            zeta13_g=zeta13_g,
            top_chern_sym2=top_chern,
            fiber_count=fiber_count,
            section_equation_solvable=solution is not None,
            citations={
                "zeta13_g": Citation.reference(
                    Source.conic_bundle_section, "D . L^13 = -20 b from the Chern classes of Sym^2 U dual"
                ),
                "zeta14": Citation.derived(
                    Source.conic_bundle_section,
                    "the Segre class of E is c(Sym^2 U dual), whose c_6 vanishes on Gr(3,5)",
                ),
                "fiber_count": Citation.reference(
                    Source.conic_bundle_section, "L^13 is represented by 10 fibres of P(E) -> W_{4,5}"
                ),
                "section_equation_solvable": Citation.derived(
                    Source.conic_bundle_section, "10 = 20 b has no integer solution"
                ),
            },
        )

    @staticmethod
    def ruled_sigma(a: int, k: int = 0) -> RuledSigmaReport:
        """
        Parity of a section class against the relative canonical class of F_a.

        Args:
            a: the Hirzebruch index, a >= 0
            k: the section is s + k f

        Returns:
            the intersection (s + k f) . K_rel and its value mod 2

        """
        surface = hirzebruch_surface(a)
        section = surface.divisor("s") + surface.divisor("f").scale(k)
        intersection = surface.degree(section * surface.divisor("k_rel"))
        return RuledSigmaReport(a=a, k=k, intersection=intersection, parity=intersection % 2)

    @staticmethod
    @timer_func
    def hodge_chain() -> FourfoldHodgeReport:
        """
        Hodge numbers of the Fano fourfold X = W_{4,5} cut by nine hyperplanes.

        T is cut by six symmetric (1,1) divisors in P4 x P4 and is an etale double cover of the surface S whose
        derived category sits in that of X.
        """
        ambient = projective_product([4, 4])
        h1, h2 = ambient.divisor("h1"), ambient.divisor("h2")
        cutting = [h1 + h2] * 6
        t = complete_intersection(ambient, cutting, name="T")
        if t.canonical() != adjunction_canonical(ambient, cutting):
            raise ConsistencyError(f"K_T = {t.canonical()} disagrees with adjunction")
        t_invariants = surface_invariants(t)
        chi_top_noether = 12 * t_invariants.chi_o - t_invariants.k_squared
        if chi_top_noether != t_invariants.chi_top:
            raise ConsistencyError(f"Gauss-Bonnet gives {t_invariants.chi_top}, Noether {chi_top_noether}")

        quotient = double_cover_invariants(
            CoverNumerics(
                dim=2, chi_top=t_invariants.chi_top, k_squared=t_invariants.k_squared, chi_o=t_invariants.chi_o
            ),
            CoverKind.etale,
            CoverDirection.to_quotient,
        )
        s_invariants = surface_hodge(quotient.k_squared, quotient.chi_top, q=0)
        if 2 * s_invariants.chi_o != t_invariants.chi_o:
            raise ConsistencyError(f"chi(O_S) = {s_invariants.chi_o} is not half of chi(O_T) = {t_invariants.chi_o}")

        # sum h^{i,i}(X) = sum h^{i,i}(S) + 4, where h^{0,0} = h^{4,4} = 1 and h^{1,1} = h^{3,3} is the Picard rank
        diagonal_s = 1 + s_invariants.h11 + 1
        h22 = diagonal_s + 4 - 2 * (1 + PICARD_RANK)

        quintic = RankLocusService.degree_rank_locus(4, 5)
        z = CoverNumerics(dim=QUADRICS_P - 1, h_degree=quintic, k_coefficient=quintic - (QUADRICS_P + 1))
        w = double_cover_invariants(z, CoverKind.ramified, CoverDirection.to_cover, branch_coefficient=0)
        logger.info(f"Hodge chain: S = {s_invariants}, h13 = {s_invariants.h20}, h22 = {h22}, H^4 = {w.h_degree}")
        return FourfoldHodgeReport(
            t_invariants=t_invariants,
            s_invariants=s_invariants,
            chi_top_t_noether=chi_top_noether,
            h13=s_invariants.h20,
            h12=s_invariants.q,
            h22=h22,
            h_fourth=w.h_degree,
            w_anticanonical=-w.k_coefficient,
            k_x_coefficient=w.k_coefficient + HYPERPLANE_SECTIONS,
            citations={
                "t_invariants": Citation.reference(Source.surface_chain, "K_T = O(1,1)|_T and K_T^2 = 70"),
                "s_invariants": Citation.reference(Source.surface_chain, "S has h10 = 0, h20 = 9, h11 = 65"),
                "h13": Citation.reference(Source.fano_fourfold, "h13(X) = h02(S)"),
                "h12": Citation.reference(Source.fano_fourfold, "h12(X) = h01(S)"),
                "h22": Citation.derived(
                    Source.fano_fourfold, "sum of h^{i,i}(X) exceeds that of S by the four exceptional objects"
                ),
                "h_fourth": Citation.derived(
                    Source.fano_fourfold, "H^4 = 2 deg Z_{4,5} since W_{4,5} is a double cover of a quintic"
                ),
                "k_x_coefficient": Citation.reference(
                    Source.double_cover_canonical, "-K_W = (rn/2) H = 10 H and nine hyperplane sections give -H"
                ),
            },
        )
