import pytest
from pytest_check import check

from fanolab.features.reproduce.registry import REGISTRY, TAGS, Check
from fanolab.features.reproduce.service import ReproduceService, same_value
from fanolab.shared.common.enums import CheckStatus, Provenance, Source
from fanolab.shared.common.schemas.common import Citation
from fanolab.shared.config.config import settings
from fanolab.shared.utils.exceptions import ConsistencyError, InvalidSpecError


def _raise():
    raise ConsistencyError("broken on purpose")


def test_registry_ids_are_unique():
    ids = [c.id for c in REGISTRY]
    assert len(ids) == len(set(ids))
    assert set(TAGS) == {tag for c in REGISTRY for tag in c.tags}


def test_full_run_passes():
    document = ReproduceService.reproduce()
    assert document.check_count >= 25
    for record in document.checks:
        with check:
            assert record.status == CheckStatus.passed, f"{record.id}: {record.computed!r} ({record.error})"
    assert document.status == CheckStatus.passed
    assert document.failed == []
    assert document.tool_version == settings.tool_version
    assert [record.id for record in document.checks] == [c.id for c in REGISTRY]


@pytest.mark.parametrize("tag, count", [("degrees", 4), ("dimensions", 4), ("appendix", 5), ("topology", 6)])
def test_only_selects_by_tag(tag, count):
    document = ReproduceService.reproduce(only=tag)
    assert document.only == tag
    assert document.check_count == count
    assert all(tag in record.tags for record in document.checks)


def test_unknown_tag():
    with pytest.raises(InvalidSpecError):
        ReproduceService.select("everything")


def test_reports_are_deterministic():
    first = ReproduceService.reproduce(only="planner").model_dump_json()
    second = ReproduceService.reproduce(only="planner").model_dump_json()
    assert first == second


def test_failures_are_recorded():
    mismatch = Check("mismatch", "two is not one", ("test",), Citation.trivial("1 != 2"), 1, lambda: 2)
    broken = Check("broken", "raises", ("test",), Citation.trivial("none"), 1, _raise)
    with check:
        assert ReproduceService.run_check(mismatch).status == CheckStatus.failed
    record = ReproduceService.run_check(broken)
    with check:
        assert record.status == CheckStatus.failed
    with check:
        assert record.computed is None
    with check:
        assert record.error == "ConsistencyError: broken on purpose"


def test_failed_check_fails_the_document(mocker):
    mismatch = Check("mismatch", "two is not one", ("test",), Citation.trivial("1 != 2"), 1, lambda: 2)
    mocker.patch.object(ReproduceService, "select", return_value=[REGISTRY[0], mismatch])
    document = ReproduceService.reproduce()
    assert document.status == CheckStatus.failed
    assert document.failed == ["mismatch"]


def test_stated_values_are_located():
    for registered in REGISTRY:
        with check:
            if registered.citation.provenance == Provenance.trivial:
                assert registered.citation.locator == Source.standard, registered.id
            else:
                assert registered.citation.locator != Source.standard, registered.id
    by_id = {registered.id: registered.citation.locator for registered in REGISTRY}
    assert by_id["deg-Z-4-5"] == Source.rank_locus_degree
    assert by_id["hodge-K_T-squared"] == Source.surface_chain
    assert by_id["topology-gysin"] == Source.circle_bundle_gysin


def _registered(compute, expected=1) -> Check:
    return Check("adhoc", "ad hoc", ("test",), Citation.trivial("none"), expected, compute)


def test_errors_outside_the_engine_are_recorded():
    record = ReproduceService.run_check(_registered(lambda: 1 // 0))
    assert record.status == CheckStatus.failed
    assert record.computed is None
    assert record.error.startswith("ZeroDivisionError")


def test_unrepresentable_values_are_recorded():
    record = ReproduceService.run_check(_registered(lambda: (1, 2), expected=[1, 2]))
    assert record.status == CheckStatus.failed
    assert record.computed is None
    assert record.error.startswith("UnrepresentableValue")


def test_run_survives_a_crashing_check(mocker):
    crashing = _registered(lambda: {}["missing"])
    mocker.patch.object(ReproduceService, "select", return_value=[crashing, REGISTRY[0]])
    document = ReproduceService.reproduce()
    assert document.check_count == 2
    assert document.failed == ["adhoc"]
    assert document.checks[1].status == CheckStatus.passed


@pytest.mark.parametrize(
    "computed, expected",
    [(True, 1), (1, True), (False, 0), (0, False), ([1, 0], [True, False]), ("1", 1)],
)
def test_bool_and_int_are_not_interchangeable(computed, expected):
    assert not same_value(computed, expected)
    assert ReproduceService.run_check(_registered(lambda: computed, expected)).status == CheckStatus.failed


@pytest.mark.parametrize("value", [True, 7, "Z/2", [5, 20], ["Z", "0"]])
def test_equal_values_pass(value):
    assert ReproduceService.run_check(_registered(lambda: value, value)).status == CheckStatus.passed
