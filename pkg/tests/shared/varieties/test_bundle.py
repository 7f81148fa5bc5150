import pytest
from hypothesis import given
from hypothesis import strategies as st

from fanolab.shared.charclass.calculus import dual, segre, sym2
from fanolab.shared.charclass.chern import ChernData
from fanolab.shared.common.enums import TautologicalBundle
from fanolab.shared.exact_core.graded import TruncatedRingSpec
from fanolab.shared.schubert.grassmannian import GrassmannianSpec, tautological_chern
from fanolab.shared.utils.exceptions import InvalidChernDataError
from fanolab.shared.varieties.bundle import ProjectiveBundleRing

P1_P2 = TruncatedRingSpec.projective_product([1, 2])


def homogeneous(degree: int):
    monomials = [(i, degree - i) for i in range(degree + 1) if i <= 1 and degree - i <= 2]
    return st.lists(st.integers(-4, 4), min_size=len(monomials), max_size=len(monomials)).map(
        lambda coefficients: P1_P2.element(dict(zip(monomials, coefficients)))
    )


bundles = st.integers(1, 3).flatmap(
    lambda rank: st.tuples(*(homogeneous(d) for d in range(1, rank + 1))).map(
        lambda classes: ChernData.from_classes(P1_P2, rank, list(classes))
    )
)


def assert_pushforward_is_segre(bundle: ChernData):
    ring = ProjectiveBundleRing.of(bundle)
    zeta, s = ring.zeta(), segre(bundle)
    for j in range(bundle.ring.dim + 1):
        assert ring.pushforward(zeta ** (bundle.rank - 1 + j)) == s[j], f"s_{j}"


@given(bundles)
def test_pushforward_of_zeta_powers_is_the_segre_class(bundle):
    assert_pushforward_is_segre(bundle)


@pytest.mark.parametrize("kind", list(TautologicalBundle))
def test_pushforward_over_gr25(kind):
    assert_pushforward_is_segre(tautological_chern(GrassmannianSpec(2, 5), kind))


def test_pushforward_of_sym2_over_gr25():
    quotient = tautological_chern(GrassmannianSpec(2, 5), TautologicalBundle.quotient)
    assert_pushforward_is_segre(sym2(dual(quotient)))


def test_lower_zeta_powers_push_forward_to_zero():
    bundle = tautological_chern(GrassmannianSpec(2, 5), TautologicalBundle.quotient)
    ring = ProjectiveBundleRing.of(bundle)
    for k in range(bundle.rank - 1):
        assert ring.pushforward(ring.zeta() ** k).is_zero


def test_classes_above_the_rank_are_rejected():
    h1, h2 = P1_P2.gens()
    with pytest.raises(InvalidChernDataError):
        ProjectiveBundleRing.of(ChernData.from_classes(P1_P2, 1, [h1, h1 * h2]))
