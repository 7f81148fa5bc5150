import pytest

from fanolab.features.topomod.groups import FGAbelianGroup, check_exact
from fanolab.features.topomod.service import TopologyService
from fanolab.shared.common.enums import ConiveauVerdict
from fanolab.shared.utils.exceptions import InvalidSpecError, OutOfRangeError

BSO4_TABLE = ["Z", "0", "0", "Z/2", "Z^2", "0", "Z/2"]
Z, ZERO, Z2 = FGAbelianGroup.free(1), FGAbelianGroup.trivial(), FGAbelianGroup.from_orders(0, [2])


@pytest.mark.parametrize("degree, expected", enumerate(BSO4_TABLE))
def test_bso4_groups(degree, expected):
    assert str(TopologyService.bso4_group(degree)) == expected


def test_bso4_beyond_the_table():
    assert str(TopologyService.bso4_group(7)) == "Z/2 + Z/2"
    assert str(TopologyService.bso4_group(8)) == "Z^3"
    with pytest.raises(OutOfRangeError):
        TopologyService.bso4_group(9)


def test_bso4_report_lists_the_basis():
    report = TopologyService.bso4_group_report(4)
    assert sorted(report.basis) == ["e", "p"]


def test_gysin_instance_is_exact():
    report = TopologyService.gysin_report()
    assert report.exact
    assert report.groups[:4] == ["0", "Z", "Z", "0"]
    assert report.labels[-3:] == ["H^3(B)", "H^3(E)", "H^2(B)"]


def test_gysin_maps_follow_position():
    labels, instance = TopologyService.gysin_instance()
    maps = dict(zip(zip(labels, labels[1:]), instance.maps))
    # pullback in degrees 0 and 3, cup with the Euler class out of H^0(B)
    assert maps["H^0(B)", "H^0(E)"].entries == ((1,),)
    assert maps["H^3(B)", "H^3(E)"].entries == ((1,),)
    assert maps["H^0(B)", "H^2(B)"].entries == ((1,),)
    assert maps["H^3(E)", "H^2(B)"].entries == ((0,),)


@pytest.mark.parametrize(
    "quotient",
    [
        (Z, ZERO, Z, ZERO),
        (Z, ZERO, ZERO, Z2),
        (Z, Z, Z, Z2),
    ],
    ids=["H3 vanishes", "H2 vanishes", "H1 free"],
)
def test_gysin_rejects_wrong_quotient_groups(quotient):
    _, instance = TopologyService.gysin_instance(quotient)
    assert not check_exact(instance)


def test_gysin_needs_four_quotient_groups():
    with pytest.raises(InvalidSpecError):
        TopologyService.gysin_instance((Z,))


def test_steenrod_on_w2():
    result = TopologyService.steenrod(1, "w2")
    assert result.result == "w3"
    assert result.square_nonzero
    assert TopologyService.steenrod(3, "w3").result == "w3^2"


@pytest.mark.parametrize(
    "square_nonzero, verdict",
    [(True, ConiveauVerdict.not_strong_coniveau), (False, ConiveauVerdict.no_conclusion)],
)
def test_coniveau_verdicts(square_nonzero, verdict):
    report = TopologyService.coniveau_report(square_nonzero)
    assert report.verdict == verdict
    assert report.sq_axiom_consistent
