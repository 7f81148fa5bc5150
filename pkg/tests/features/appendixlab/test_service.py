import pytest
from pytest_check import check

from fanolab.features.appendixlab.service import AppendixLabService
from fanolab.shared.common.enums import Source
from fanolab.shared.utils.exceptions import InvalidSpecError


def test_bidegree_intersection_numbers():
    report = AppendixLabService.appendix_intersections()
    with check:
        assert report.deg_R == 18
    with check:
        assert report.deg_S == 15
    with check:
        assert report.quad_number == 60
    with check:
        assert report.multiplicity == 4
    with check:
        assert report.deg_XZ == 5
    with check:
        assert report.D_H_degree == 10


def test_conic_bundle_has_no_rational_section():
    report = AppendixLabService.conic_obstruction()
    with check:
        assert report.zeta14 == 0
    with check:
        assert report.top_chern_sym2 == report.zeta14
    with check:
        assert abs(report.zeta13_g) == 20
    with check:
        assert report.fiber_count == 10
    with check:
        assert report.section_equation_solvable is False


@pytest.mark.parametrize("a", [0, 1, 2, 3])
@pytest.mark.parametrize("k", range(-5, 6))
def test_ruled_sigma_parity_depends_only_on_a(a, k):
    report = AppendixLabService.ruled_sigma(a=a, k=k)
    assert report.intersection == a - 2 * k
    assert report.parity == a % 2


def test_ruled_sigma_rejects_negative_index():
    with pytest.raises(InvalidSpecError):
        AppendixLabService.ruled_sigma(a=-1)


def test_fourfold_hodge_chain():
    report = AppendixLabService.hodge_chain()
    t, s = report.t_invariants, report.s_invariants
    with check:
        assert (t.k_squared, t.chi_o, t.chi_top) == (70, 20, 170)
    with check:
        assert report.chi_top_t_noether == 170
    with check:
        assert (s.k_squared, s.chi_top, s.chi_o, s.h20, s.h11) == (35, 85, 10, 9, 65)
    with check:
        assert (report.h13, report.h12, report.h22) == (9, 0, 67)
    with check:
        assert report.h_fourth == 10
    with check:
        assert report.w_anticanonical == 10
    with check:
        assert report.k_x_coefficient == -1


def test_reports_cite_their_sources():
    with check:
        assert {c.locator for c in AppendixLabService.appendix_intersections().citations.values()} == {
            Source.bidegree_computation
        }
    with check:
        assert {c.locator for c in AppendixLabService.conic_obstruction().citations.values()} == {
            Source.conic_bundle_section
        }
    hodge = AppendixLabService.hodge_chain().citations
    with check:
        assert hodge["t_invariants"].locator == Source.surface_chain
    with check:
        assert hodge["h22"].locator == Source.fano_fourfold
