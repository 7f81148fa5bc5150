import pytest
from pytest_check import check

from fanolab.features.ranklocus.schemas import RankLocusSpec
from fanolab.features.ranklocus.service import RankLocusService
from fanolab.shared.common.enums import Classification, ConiveauVerdict, Provenance, Smoothness, Source, WindowVerdict
from fanolab.shared.utils.exceptions import InvalidSpecError, OutOfRangeError, ScaleExceededError

DIMENSIONS = [((4, 5), 13), ((3, 5), 11), ((2, 5), 8), ((1, 5), 4)]
DEGREES = [((4, 5), 5), ((3, 5), 20), ((2, 5), 35), ((1, 5), 16)]


def test_dimensions_of_rank_loci():
    for (r, n), dimension in DIMENSIONS:
        with check:
            assert RankLocusService.dim_rank_locus(r, n) == dimension, f"Z_({r},{n})"


def test_degrees_of_rank_loci():
    for (r, n), degree in DEGREES:
        with check:
            assert RankLocusService.degree_rank_locus(r, n) == degree, f"Z_({r},{n})"
        with check:
            assert RankLocusService.degree_closed_form(r, n) == degree, f"closed form Z_({r},{n})"


@pytest.mark.parametrize("n", range(2, 7))
def test_determinantal_hypersurfaces(n):
    assert RankLocusService.degree_rank_locus(n, n) == 1
    assert RankLocusService.degree_rank_locus(n - 1, n) == n


@pytest.mark.parametrize("n", range(1, 7))
def test_pushforward_matches_the_product_formula(n):
    for r in range(1, n + 1):
        with check:
            assert RankLocusService.degree_rank_locus(r, n) == RankLocusService.degree_closed_form(r, n), (r, n)


def test_degree_scale_guard():
    with pytest.raises(ScaleExceededError):
        RankLocusService.degree_rank_locus(4, 9)
    data = RankLocusService.rank_locus(4, 9)
    assert data.degree is None
    assert data.degree_closed_form > 0
    assert data.grassmannian == "Gr(5,9)"


def test_out_of_range():
    with pytest.raises(OutOfRangeError):
        RankLocusService.dim_rank_locus(6, 5)
    with pytest.raises(OutOfRangeError):
        RankLocusService.degree_closed_form(0, 5)


def test_fourfold_plan():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=5, c=9))
    with check:
        assert report.dim_X == 4
    with check:
        assert report.k_coefficient == -1
    with check:
        assert report.smoothness == Smoothness.smooth
    with check:
        assert report.classification == Classification.fano
    with check:
        assert report.torsion_window == WindowVerdict.satisfied
    with check:
        assert report.obstruction_window == WindowVerdict.not_satisfied
    with check:
        assert report.h3 == "Z/2"
    with check:
        assert report.coniveau == ConiveauVerdict.no_conclusion
    with check:
        assert (report.deg_Z, report.h_degree) == (5, 10)
    with check:
        assert report.lefschetz.range_bound == 4
    with check:
        assert "X has Picard rank 1" in report.annotations


def test_sixfold_plan():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=6, c=11))
    with check:
        assert report.dim_X == 6
    with check:
        assert report.k_coefficient == -1
    with check:
        assert report.smoothness == Smoothness.smooth
    with check:
        assert report.torsion_window == WindowVerdict.satisfied
    with check:
        assert report.obstruction_window == WindowVerdict.satisfied
    with check:
        assert report.coniveau == ConiveauVerdict.not_strong_coniveau
    with check:
        assert report.lefschetz.range_bound == 6


def test_double_solid_plan():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=4, c=6))
    with check:
        assert report.dim_X == 3
    with check:
        assert report.k_coefficient == -2
    with check:
        assert report.smoothness == Smoothness.isolated_singularities
    with check:
        assert report.isolated_singularities.count == 10
    with check:
        assert report.isolated_singularities.exceptional_divisor == "P^1 x P^1"
    with check:
        assert report.torsion_window == WindowVerdict.not_satisfied
    with check:
        assert report.h3 is None


@pytest.mark.parametrize(
    "c, classification",
    [(9, Classification.fano), (10, Classification.calabi_yau), (11, Classification.general_type)],
)
def test_classification_follows_the_canonical_class(c, classification):
    assert RankLocusService.plan(RankLocusSpec(r=4, n=5, c=c)).classification == classification


def test_singular_sections():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=5, c=3))
    assert report.smoothness == Smoothness.singular
    assert report.classification == Classification.singular
    assert report.singular_dimension == 5


def test_conic_sections_are_smooth():
    report = RankLocusService.plan(RankLocusSpec(r=2, n=3, c=0))
    assert report.smoothness == Smoothness.smooth
    assert report.luna is None
    assert report.torsion_window == WindowVerdict.no_claim


@pytest.mark.parametrize("n", range(5, 13))
def test_index_one_family(n):
    spec = RankLocusSpec(r=4, n=n, c=2 * n - 1)
    report = RankLocusService.plan(spec)
    assert report.dim_X == 4 * n - 7 - spec.c == 2 * n - 6
    assert report.k_coefficient == -1


@pytest.mark.parametrize("r, n, c", [(3, 5, 2), (4, 3, 0), (4, 5, 14), (4, 5, -1), (0, 5, 0)])
def test_invalid_specs(r, n, c):
    with pytest.raises(InvalidSpecError):
        RankLocusSpec(r=r, n=n, c=c)


def test_luna_slices():
    luna = RankLocusService.luna_slice(4, 5)
    assert (luna.w_plus, luna.w_minus, luna.cone_dimension, luna.trivial_multiplicity) == (3, 3, 5, 8)
    assert "P^2 x P^2" in luna.cone
    assert "P^3 x P^3" in RankLocusService.luna_slice(4, 6).cone
    for n in range(4, 13):
        for r in range(4, n + 1, 2):
            luna = RankLocusService.luna_slice(r, n)
            with check:
                assert luna.cone_dimension + luna.trivial_multiplicity == RankLocusService.dim_rank_locus(r, n)
            with check:
                assert luna.w_plus == luna.w_minus == n - r + 2
    with pytest.raises(InvalidSpecError):
        RankLocusService.luna_slice(2, 5)


def test_lefschetz():
    assert RankLocusService.lefschetz_range(4, 5, 0) == 9
    data = RankLocusService.lefschetz(4, 6, 11)
    assert (data.range_bound, data.codimension, data.isomorphism_below) == (6, 4, 7)


def test_singular_locus():
    locus = RankLocusService.singular_locus(4, 5)
    assert locus.z_singular_along == "closure of Z_(3,5)"
    assert locus.w_singular_along == "preimage of the closure of Z_(2,5)"
    assert locus.w_singular_codimension == 5
    assert locus.branch_codimension == 2


@pytest.mark.parametrize("r, n, value", [(6, 6, 0), (6, 7, 1), (8, 9, 3), (4, 5, -1)])
def test_singular_count(r, n, value):
    count = RankLocusService.singular_count(r, n)
    assert count.value == value
    assert count.symbolic_match
    assert count.nonnegative == (value >= 0)


def test_fano_family():
    member = RankLocusService.fano_family(6)
    assert (member.spec.r, member.spec.n, member.spec.c) == (4, 6, 11)
    assert (member.index, member.h3) == (1, "Z/2")
    with pytest.raises(InvalidSpecError):
        RankLocusService.fano_family(5)


def test_every_planned_field_is_located():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=6, c=11))
    expected = {
        "dim_Z": Source.rank_locus_dimension,
        "deg_Z": Source.rank_locus_degree,
        "k_coefficient": Source.double_cover_canonical,
        "smoothness": Source.singular_locus,
        "torsion_window": Source.torsion_theorem,
        "coniveau": Source.coniveau_theorem,
        "luna": Source.luna_slice,
    }
    for field, locator in expected.items():
        with check:
            assert report.citations[field].locator == locator, field
    assert all(citation.locator != Source.standard for citation in report.citations.values())
    assert report.citations["luna"].provenance == Provenance.derived


def test_vanishing_obstruction_is_cited_for_the_fourfold():
    report = RankLocusService.plan(RankLocusSpec(r=4, n=5, c=9))
    assert report.coniveau == ConiveauVerdict.no_conclusion
    assert report.citations["coniveau"].locator == Source.vanishing_obstruction
