import pytest
from pydantic import ValidationError

from fanolab.shared.common.enums import CoverDirection, CoverKind
from fanolab.shared.utils.exceptions import ConsistencyError, InvalidSpecError
from fanolab.shared.varieties.surfaces import (
    CoverNumerics,
    SurfaceInvariants,
    double_cover_invariants,
    surface_hodge,
    surface_invariants,
)
from fanolab.shared.varieties.variety import complete_intersection, projective_product, projective_space


def test_quartic_is_a_k3():
    space = projective_space(3)
    k3 = surface_invariants(complete_intersection(space, [space.divisor("h").scale(4)]))
    assert (k3.k_squared, k3.chi_top, k3.chi_o, k3.h20, k3.h11) == (0, 24, 2, 1, 20)


def test_complete_intersection_in_product():
    ambient = projective_product([4, 4])
    h1, h2 = ambient.divisor("h1"), ambient.divisor("h2")
    invariants = surface_invariants(complete_intersection(ambient, [h1 + h2] * 6))
    assert (invariants.k_squared, invariants.chi_o, invariants.chi_top) == (70, 20, 170)


def test_surface_hodge_from_noether():
    invariants = surface_hodge(35, 85, q=0)
    assert (invariants.chi_o, invariants.h20, invariants.h11) == (10, 9, 65)
    with pytest.raises(ConsistencyError):
        surface_hodge(1, 1, q=0)


def test_inconsistent_invariants_are_rejected():
    with pytest.raises(ValidationError):
        SurfaceInvariants(k_squared=0, chi_top=24, chi_o=2, q=0, h20=2, h11=20)


def test_etale_quotient_halves_everything():
    cover = CoverNumerics(dim=2, chi_top=170, k_squared=70, chi_o=20)
    quotient = double_cover_invariants(cover, CoverKind.etale, CoverDirection.to_quotient)
    assert (quotient.chi_top, quotient.k_squared, quotient.chi_o) == (85, 35, 10)
    back = double_cover_invariants(quotient, CoverKind.etale, CoverDirection.to_cover)
    assert back == cover


def test_etale_quotient_of_odd_invariants():
    with pytest.raises(ConsistencyError):
        double_cover_invariants(CoverNumerics(dim=2, chi_top=3), CoverKind.etale)


def test_ramified_cover_doubles_the_degree():
    quintic = CoverNumerics(dim=13, h_degree=5, k_coefficient=-10)
    cover = double_cover_invariants(quintic, CoverKind.ramified, CoverDirection.to_cover)
    assert (cover.h_degree, cover.k_coefficient) == (10, -10)
    branched = double_cover_invariants(quintic, CoverKind.ramified, CoverDirection.to_cover, branch_coefficient=4)
    assert branched.k_coefficient == -8
    with pytest.raises(ConsistencyError):
        double_cover_invariants(quintic, CoverKind.ramified, CoverDirection.to_cover, branch_coefficient=3)
    with pytest.raises(InvalidSpecError):
        double_cover_invariants(quintic, CoverKind.ramified, CoverDirection.to_quotient)


def test_surface_invariants_need_a_surface():
    with pytest.raises(InvalidSpecError):
        surface_invariants(projective_space(3))
