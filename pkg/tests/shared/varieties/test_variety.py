import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles.hirzebruch import intersection_form
from pytest_check import check

from fanolab.shared.charclass.chern import ChernData
from fanolab.shared.common.enums import TautologicalBundle
from fanolab.shared.schubert.grassmannian import GrassmannianSpec, tautological_chern
from fanolab.shared.utils.exceptions import DegreeMismatchError, InvalidSpecError
from fanolab.shared.varieties.variety import (
    adjunction_canonical,
    complete_intersection,
    grassmannian,
    hirzebruch_surface,
    intersection_number_ci,
    projective_bundle,
    projective_product,
    projective_space,
    pushforward,
)


DIVISORS = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@given(st.integers(0, 6), DIVISORS, DIVISORS)
def test_hirzebruch_intersection_form(a, x, y):
    surface = hirzebruch_surface(a)
    s, f = surface.divisor("s"), surface.divisor("f")
    first = s.scale(x[0]) + f.scale(x[1])
    second = s.scale(y[0]) + f.scale(y[1])
    assert surface.degree(first * second) == intersection_form(a, x, y)


@pytest.mark.parametrize("a", [0, 1, 2, 5])
def test_hirzebruch_surfaces_are_rational(a):
    surface = hirzebruch_surface(a)
    canonical = surface.canonical()
    with check:
        assert surface.degree(canonical * canonical) == 8
    with check:
        assert surface.chi_top() == 4
    with check:
        assert surface.chi(surface.structure_sheaf()) == 1
    with check:
        assert surface.degree(surface.divisor("zeta") * surface.divisor("zeta")) == a


def test_first_hirzebruch_surface():
    surface = hirzebruch_surface(1)
    zeta, f = surface.divisor("zeta"), surface.divisor("f")
    assert surface.degree(zeta * zeta) == 1
    assert surface.degree((zeta - f) * (zeta - f)) == -1


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_surfaces_in_projective_space(d):
    space = projective_space(3)
    h = space.divisor("h")
    surface = complete_intersection(space, [h.scale(d)])
    canonical = surface.canonical()
    with check:
        assert surface.degree(canonical * canonical) == d * (d - 4) ** 2
    with check:
        assert surface.chi_top() == d * (d * d - 4 * d + 6)
    with check:
        assert 12 * surface.chi(surface.structure_sheaf()) == d * (d - 4) ** 2 + d * (d * d - 4 * d + 6)
    with check:
        assert canonical == adjunction_canonical(space, [h.scale(d)])


def test_complete_intersection_degree():
    ambient = projective_product([4, 5])
    h1, h2 = ambient.divisor("h1"), ambient.divisor("h2")
    assert intersection_number_ci(ambient, [h1 + h2] * 5, [h2] * 4) == 5
    with pytest.raises(DegreeMismatchError):
        intersection_number_ci(ambient, [h1 + h2] * 5, [h2] * 3)
    with pytest.raises(DegreeMismatchError):
        complete_intersection(ambient, [h1 * h2])


def test_projective_bundle_over_the_line_is_a_surface():
    line = projective_space(1)
    bundle = projective_bundle(line, ChernData.trivial(line.ring, 2))
    zeta = bundle.divisor("zeta")
    assert bundle.dim == 2
    assert bundle.degree(zeta * zeta) == 0
    assert bundle.degree(zeta * bundle.divisor("h")) == 1
    assert bundle.chi_top() == 4
    assert pushforward(bundle, zeta) == line.ring.one()


def test_projective_bundle_over_a_grassmannian():
    base = grassmannian(2, 4)
    quotient = tautological_chern(GrassmannianSpec(2, 4), TautologicalBundle.quotient)
    flags = projective_bundle(base, quotient)
    assert flags.dim == 5
    assert flags.chi_top() == 12


def test_invalid_constructions():
    with pytest.raises(InvalidSpecError):
        hirzebruch_surface(-1)
    line = projective_space(1)
    with pytest.raises(InvalidSpecError):
        projective_bundle(line, ChernData.trivial(line.ring, 0))
    with pytest.raises(InvalidSpecError):
        line.divisor("k")
    with pytest.raises(InvalidSpecError):
        pushforward(line, line.divisor("h"))


@pytest.mark.parametrize("n", range(1, 9))
def test_euler_characteristic_of_projective_space(n):
    assert projective_space(n).chi_top() == n + 1
