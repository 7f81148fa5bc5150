import json

import pytest

from fanolab.__main__ import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, h_multiple, main
from fanolab.features.reproduce.registry import Check
from fanolab.features.reproduce.service import ReproduceService
from fanolab.shared.common.schemas.common import Citation


def test_intersect(capsys):
    assert main(["intersect", "h1^3*(-2*h1+4*h2)*(h1+h2)^5", "--ambient", "P4 x P5"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "18"


def test_intersect_json(capsys):
    assert main(["intersect", "(h1+h2)^8", "--ambient", "P4 x P4", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] == 70


def test_parse_errors_are_annotated(capsys):
    assert main(["intersect", "h1 +* h2", "--ambient", "P4 x P4"]) == EXIT_USAGE
    err = capsys.readouterr().err.splitlines()
    assert err[-2:] == ["  h1 +* h2", "      ^"]


def test_plan(capsys):
    assert main(["plan", "4", "5", "9"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "dim 4, K = -H, H^3 = Z/2" in out
    assert "torsion_window: satisfied  [REFERENCE torsion-theorem]" in out


def test_plan_rejects_invalid_specs(capsys):
    assert main(["plan", "3", "5", "1"]) == EXIT_USAGE
    assert "InvalidSpecError" in capsys.readouterr().err


def test_rank_locus(capsys):
    assert main(["rank-locus", "4", "5"]) == EXIT_OK
    assert "dim 13, degree 5" in capsys.readouterr().out


def test_rank_locus_beyond_desk_scale(capsys):
    assert main(["rank-locus", "4", "9", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["degree"] is None


def test_reproduce_paper(capsys):
    assert main(["reproduce-paper", "--only", "degrees", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["status"] == "pass"
    assert document["check_count"] == 4


def test_reproduce_paper_failure(mocker, capsys):
    failing = Check("always-fails", "one is not two", ("test",), Citation.trivial("1 != 2"), 1, lambda: 2)
    mocker.patch.object(ReproduceService, "select", return_value=[failing])
    assert main(["reproduce-paper"]) == EXIT_CHECK_FAILED
    assert "fail: 1 checks, 1 failed" in capsys.readouterr().out


def test_unknown_tag_is_a_usage_error():
    with pytest.raises(SystemExit) as exit_info:
        main(["reproduce-paper", "--only", "everything"])
    assert exit_info.value.code == EXIT_USAGE


@pytest.mark.parametrize("k, text", [(-1, "-H"), (1, "H"), (0, "0"), (-2, "-2H"), (3, "3H")])
def test_h_multiple(k, text):
    assert h_multiple(k) == text
