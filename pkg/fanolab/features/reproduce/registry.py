"""Registered reproduction checks, in report order."""

import threading
from dataclasses import dataclass
from typing import Any, Callable

from cachetools import LRUCache, cached

from fanolab.features.appendixlab.schemas import AppendixReport, ConicObstructionReport, FourfoldHodgeReport
from fanolab.features.appendixlab.service import AppendixLabService
from fanolab.features.ranklocus.schemas import RankLocusSpec
from fanolab.features.ranklocus.service import RankLocusService
from fanolab.features.topomod.service import TopologyService
from fanolab.features.topomod.steenrod import square_nonvanishing, steenrod_sq
from fanolab.features.topomod.torsion_ring import TorsionRingElement, reduce_mod2
from fanolab.shared.common.enums import ConiveauVerdict, Source
from fanolab.shared.common.schemas.common import Citation


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    tags: tuple[str, ...]
    citation: Citation
    expected: Any
    compute: Callable[[], Any]


@cached(cache=LRUCache(maxsize=1), lock=threading.Lock())
def _appendix() -> AppendixReport:
    return AppendixLabService.appendix_intersections()


@cached(cache=LRUCache(maxsize=1), lock=threading.Lock())
def _conic() -> ConicObstructionReport:
    return AppendixLabService.conic_obstruction()


@cached(cache=LRUCache(maxsize=1), lock=threading.Lock())
def _hodge() -> FourfoldHodgeReport:
    return AppendixLabService.hodge_chain()


def _plan_summary(r: int, n: int, c: int) -> str:
    report = RankLocusService.plan(RankLocusSpec(r=r, n=n, c=c))
    summary = (
        f"dim {report.dim_X}, K = {report.k_coefficient}H, {report.smoothness}, "
        f"torsion {report.torsion_window}, obstruction {report.obstruction_window}"
    )
    if report.isolated_singularities is not None:
        summary += f", {report.isolated_singularities.count} points"
    if report.coniveau != ConiveauVerdict.no_claim:
        summary += f", {report.coniveau}"
    return summary


def _luna_identity() -> bool:
    for n in range(4, 13):
        for r in range(4, n + 1, 2):
            luna = RankLocusService.luna_slice(r, n)
            if not luna.w_plus == luna.w_minus == n - r + 2:
                return False
            # the cone over P^{w-1} x P^{w-1} has dimension 2w - 1
            if luna.cone_dimension != luna.w_plus + luna.w_minus - 1:
                return False
            if luna.cone_dimension + luna.trivial_multiplicity != RankLocusService.dim_rank_locus(r, n):
                return False
    return True


def _closed_forms() -> list[int]:
    """Closed-form degrees of the example loci, with -1 wherever the pushforward disagrees."""
    values = []
    for r, n, _, _ in EXAMPLE_LOCI:
        closed = RankLocusService.degree_closed_form(r, n)
        values.append(closed if closed == RankLocusService.degree_rank_locus(r, n) else -1)
    return values


def _sw(expression: str):
    return TopologyService.parse_sw(expression)


def _dimension_check(r: int, n: int, expected: int) -> Check:
    return Check(
        id=f"dim-Z-{r}-{n}",
        description=f"dim Z_({r},{n})",
        tags=("dimensions",),
        citation=Citation.reference(
            Source.rank_locus_dimension, "the rank locus is irreducible of dimension rn - r^2/2 + r/2 - 1"
        ),
        expected=expected,
        compute=lambda: RankLocusService.dim_rank_locus(r, n),
    )


def _degree_check(r: int, n: int, expected: int) -> Check:
    return Check(
        id=f"deg-Z-{r}-{n}",
        description=f"deg of the closure of Z_({r},{n}) by Segre pushforward",
        tags=("degrees",),
        citation=Citation.reference(
            Source.rank_locus_degree, f"the closure of Z_({r},{n}) in P^{n * (n + 1) // 2 - 1} has degree {expected}"
        ),
        expected=expected,
        compute=lambda: RankLocusService.degree_rank_locus(r, n),
    )


EXAMPLE_LOCI = ((4, 5, 13, 5), (3, 5, 11, 20), (2, 5, 8, 35), (1, 5, 4, 16))

REGISTRY: tuple[Check, ...] = (
    *(_dimension_check(r, n, dim) for r, n, dim, _ in EXAMPLE_LOCI),
    *(_degree_check(r, n, degree) for r, n, _, degree in EXAMPLE_LOCI),
    Check(
        id="deg-closed-form",
        description="pushforward degrees agree with the product formula",
        tags=("degree-oracles",),
        citation=Citation.derived(Source.rank_locus_degree, "prod C(n+i, n-r-i) / C(2i+1, i) over i < n - r"),
        expected=[5, 20, 35, 16],
        compute=_closed_forms,
    ),
    Check(
        id="deg-corank-one",
        description="deg of the closure of Z_(n-1,n) for n = 2..6",
        tags=("degree-oracles",),
        citation=Citation.trivial("the discriminant of quadrics in n variables is a hypersurface of degree n"),
        expected=[2, 3, 4, 5, 6],
        compute=lambda: [RankLocusService.degree_rank_locus(n - 1, n) for n in range(2, 7)],
    ),
    Check(
        id="appendix-deg-R",
        description="deg R = (1,0)^3 [E5] (1,1)^5",
        tags=("appendix",),
        citation=Citation.reference(Source.bidegree_computation, "the degree of R works out to be 18"),
        expected=18,
        compute=lambda: _appendix().deg_R,
    ),
    Check(
        id="appendix-deg-S",
        description="deg S = (1,0)^2 [E4] (0,1) (1,1)^5",
        tags=("appendix",),
        citation=Citation.reference(Source.bidegree_computation, "the degree of the surface S is 15"),
        expected=15,
        compute=lambda: _appendix().deg_S,
    ),
    Check(
        id="appendix-quadruple",
        description="(1,0)^2 [E4] [E5] (1,1)^5",
        tags=("appendix",),
        citation=Citation.reference(Source.bidegree_computation, "(1,0)^2 [E4] [E5] (1,1)^5 = 60 = 4 deg S"),
        expected=60,
        compute=lambda: _appendix().quad_number,
    ),
    Check(
        id="appendix-multiplicity",
        description="multiplicity of Y along S as a ratio",
        tags=("appendix",),
        citation=Citation.derived(Source.bidegree_computation, "ratio of the quadruple number to deg S"),
        expected=4,
        compute=lambda: _appendix().multiplicity,
    ),
    Check(
        id="appendix-D_H",
        description="deg D_H from 2 D_H ~ 4 H5",
        tags=("appendix",),
        citation=Citation.reference(Source.bidegree_computation, "D_H has degree 10 = (4 * 5) / 2"),
        expected=10,
        compute=lambda: _appendix().D_H_degree,
    ),
    Check(
        id="conic-zeta14",
        description="integral of zeta^14 on P(E) over Gr(3,5)",
        tags=("conic",),
        citation=Citation.derived(
            Source.conic_bundle_section, "D . L^13 involves b only, so the a-coefficient vanishes"
        ),
        expected=0,
        compute=lambda: _conic().zeta14,
    ),
    Check(
        id="conic-zeta13-sigma1",
        description="|integral of zeta^13 sigma_1| on P(E)",
        tags=("conic",),
        citation=Citation.reference(Source.conic_bundle_section, "D . L^13 = -20 b"),
        expected=20,
        compute=lambda: abs(_conic().zeta13_g),
    ),
    Check(
        id="conic-fibers",
        description="L^13 as a number of conic fibres",
        tags=("conic",),
        citation=Citation.reference(Source.conic_bundle_section, "L^13 is represented by 10 fibres"),
        expected=10,
        compute=lambda: _conic().fiber_count,
    ),
    Check(
        id="conic-no-section",
        description="10 = zeta13_g b + zeta14 a has an integer solution",
        tags=("conic",),
        citation=Citation.reference(Source.conic_bundle_section, "contradicting the condition that b is an integer"),
        expected=False,
        compute=lambda: _conic().section_equation_solvable,
    ),
    Check(
        id="conic-segre-two-path",
        description="zeta^14 equals c_6(Sym^2 U dual) on Gr(3,5)",
        tags=("conic",),
        citation=Citation.derived(Source.conic_bundle_section, "s(E) = c(Sym^2 U dual)"),
        expected=True,
        compute=lambda: _conic().zeta14 == _conic().top_chern_sym2,
    ),
    Check(
        id="ruled-sigma-F1",
        description="(s . K_rel) mod 2 on F_1",
        tags=("ruled",),
        citation=Citation.reference(
            Source.ruled_surface_parity, "sigma of the section of the blown-up plane is 1 mod 2"
        ),
        expected=1,
        compute=lambda: AppendixLabService.ruled_sigma(1).parity,
    ),
    Check(
        id="ruled-sigma-F0",
        description="(s . K_rel) mod 2 on F_0",
        tags=("ruled",),
        citation=Citation.reference(Source.ruled_surface_parity, "sigma of a section of P^1 x P^1 is 0 mod 2"),
        expected=0,
        compute=lambda: AppendixLabService.ruled_sigma(0).parity,
    ),
    Check(
        id="ruled-sigma-F2",
        description="((s + k f) . K_rel) mod 2 on F_2 for k = -5..5",
        tags=("ruled",),
        citation=Citation.derived(Source.ruled_surface_parity, "direct evaluation of the intersection form"),
        expected=[0] * 11,
        compute=lambda: [AppendixLabService.ruled_sigma(2, k).parity for k in range(-5, 6)],
    ),
    Check(
        id="hodge-K_T-squared",
        description="K_T^2 on six (1,1) divisors in P4 x P4",
        tags=("hodge",),
        citation=Citation.reference(Source.surface_chain, "K_T^2 = 70"),
        expected=70,
        compute=lambda: _hodge().t_invariants.k_squared,
    ),
    Check(
        id="hodge-chi-O_T",
        description="chi(O_T) by Hirzebruch-Riemann-Roch",
        tags=("hodge",),
        citation=Citation.reference(
            Source.surface_chain, "chi(O_S) = (1 + 19) / 2 = 10 and T -> S is etale of degree 2"
        ),
        expected=20,
        compute=lambda: _hodge().t_invariants.chi_o,
    ),
    Check(
        id="hodge-chi-top-T",
        description="chi_top(T) by Gauss-Bonnet, cross-checked by Noether",
        tags=("hodge",),
        citation=Citation.derived(Source.surface_chain, "12 chi(O_T) - K_T^2"),
        expected=170,
        compute=lambda: _hodge().t_invariants.chi_top if _hodge().chi_top_t_noether == 170 else -1,
    ),
    Check(
        id="hodge-S",
        description="S invariants (K^2, chi_top, chi(O), h20, h11)",
        tags=("hodge",),
        citation=Citation.reference(Source.surface_chain, "K_S^2 = 35, chi_top(S) = 85, h20(S) = 9, h11(S) = 65"),
        expected=[35, 85, 10, 9, 65],
        compute=lambda: [
            _hodge().s_invariants.k_squared,
            _hodge().s_invariants.chi_top,
            _hodge().s_invariants.chi_o,
            _hodge().s_invariants.h20,
            _hodge().s_invariants.h11,
        ],
    ),
    Check(
        id="hodge-h13",
        description="h13 of the Fano fourfold",
        tags=("hodge",),
        citation=Citation.reference(Source.fano_fourfold, "h13(X) = 9"),
        expected=9,
        compute=lambda: _hodge().h13,
    ),
    Check(
        id="hodge-h22",
        description="h22 of the Fano fourfold",
        tags=("hodge",),
        citation=Citation.reference(Source.fano_fourfold, "h22(X) = 67"),
        expected=67,
        compute=lambda: _hodge().h22,
    ),
    Check(
        id="hodge-H4",
        description="H^4 on the Fano fourfold",
        tags=("hodge",),
        citation=Citation.reference(Source.fano_fourfold, "Pic(X) = Z H with H^4 = 10"),
        expected=10,
        compute=lambda: _hodge().h_fourth,
    ),
    Check(
        id="planner-4-5-9",
        description="planner on (r, n, c) = (4, 5, 9)",
        tags=("planner",),
        citation=Citation.reference(Source.torsion_theorem, "nonsingular of dimension 2n - 6 with K = -H"),
        expected="dim 4, K = -1H, smooth, torsion satisfied, obstruction not-satisfied, "
        "obstruction vanishes, no conclusion",
        compute=lambda: _plan_summary(4, 5, 9),
    ),
    Check(
        id="planner-4-6-11",
        description="planner on (r, n, c) = (4, 6, 11)",
        tags=("planner",),
        citation=Citation.reference(
            Source.coniveau_theorem, "for n >= 6 the torsion class is not of strong coniveau >= 1"
        ),
        expected="dim 6, K = -1H, smooth, torsion satisfied, obstruction satisfied, not of strong coniveau >= 1",
        compute=lambda: _plan_summary(4, 6, 11),
    ),
    Check(
        id="planner-4-4-6",
        description="planner on (r, n, c) = (4, 4, 6)",
        tags=("planner",),
        citation=Citation.reference(
            Source.singular_examples, "the Artin-Mumford double solid has 10 ordinary double points"
        ),
        expected="dim 3, K = -2H, isolated-singularities, torsion not-satisfied, obstruction not-satisfied, 10 points",
        compute=lambda: _plan_summary(4, 4, 6),
    ),
    Check(
        id="planner-luna",
        description="Luna weights (n-r+2, n-r+2) and dim C + M = dim W for even 4 <= r <= n <= 12",
        tags=("planner",),
        citation=Citation.derived(Source.luna_slice, "the stabiliser weights give a cone over a Segre product"),
        expected=True,
        compute=_luna_identity,
    ),
    Check(
        id="topology-sq1-w2",
        description="Sq^1 w2 = w3",
        tags=("topology",),
        citation=Citation.reference(Source.bso4_cohomology, "Wu's formula"),
        expected=True,
        compute=lambda: steenrod_sq(1, _sw("w2")) == _sw("w3"),
    ),
    Check(
        id="topology-w3-square",
        description="w3^2 != 0 in H^6(BSO(4), Z/2)",
        tags=("topology",),
        citation=Citation.reference(Source.bso4_cohomology, "w3^2 is nonzero"),
        expected=True,
        compute=lambda: square_nonvanishing(_sw("w3")),
    ),
    Check(
        id="topology-nu-squared",
        description="reduction of nu^2",
        tags=("topology",),
        citation=Citation.reference(Source.bso4_cohomology, "nu reduces to w3"),
        expected=True,
        compute=lambda: reduce_mod2(TorsionRingElement.nu() ** 2) == _sw("w3^2"),
    ),
    Check(
        id="topology-bso4-table",
        description="H^0..H^6(BSO(4), Z)",
        tags=("topology",),
        citation=Citation.reference(Source.bso4_cohomology, "Z, 0, 0, Z/2, Z^2, 0, Z/2"),
        expected=["Z", "0", "0", "Z/2", "Z^2", "0", "Z/2"],
        compute=lambda: [str(TopologyService.bso4_group(d)) for d in range(7)],
    ),
    Check(
        id="topology-gysin",
        description="Gysin sequence of BSO(4) -> BGO(4)° in degrees <= 3 is exact",
        tags=("topology",),
        citation=Citation.reference(Source.circle_bundle_gysin, "the circle bundle Gysin sequence"),
        expected=True,
        compute=lambda: TopologyService.gysin_report().exact,
    ),
    Check(
        id="topology-coniveau",
        description="obstruction verdicts for nonzero and zero mod-2 squares",
        tags=("topology",),
        citation=Citation.reference(Source.coniveau_theorem, "a nonzero mod-2 square obstructs strong coniveau >= 1"),
        expected=[str(ConiveauVerdict.not_strong_coniveau), str(ConiveauVerdict.no_conclusion)],
        compute=lambda: [str(TopologyService.coniveau_report(flag).verdict) for flag in (True, False)],
    ),
)

TAGS: tuple[str, ...] = tuple(dict.fromkeys(tag for check in REGISTRY for tag in check.tags))
