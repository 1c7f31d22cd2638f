import json
from pathlib import Path

import pytest

from wordprobe.claims import (
    ERROR,
    FAIL,
    PASS,
    ClaimConfig,
    Report,
    claim_ids,
    run_all,
    run_claim,
)
from wordprobe.cli import render_report
from wordprobe.errors import UnknownClaimError

FIXTURES = Path(__file__).parent / "fixtures"
SMALL = ClaimConfig(prefix_length=1 << 16)


@pytest.fixture(scope="module")
def default_report():
    return run_all()


def test_registry_is_complete():
    assert claim_ids() == [f"C{i}" for i in range(1, 13)]


def test_default_run(default_report):
    statuses = {r.id: r.status for r in default_report.results}
    assert statuses == {cid: PASS for cid in claim_ids()}
    assert default_report.summary == {"pass": 12, "fail": 0, "error": 0}


def test_default_report_matches_frozen_fixture(default_report):
    frozen = json.loads((FIXTURES / "report_default.json").read_text())
    assert default_report.to_dict(with_runtime=False) == frozen


def test_c3_palindromes(default_report):
    c3 = default_report.results[2]
    assert c3.details["palindromes"] == ["0", "1", "2", "3"]


def test_c11_reports_observed_orientation(default_report):
    d = default_report.results[10].details
    assert d["factor_00010"] and not d["factor_01000"]
    assert d["printed_orientation_holds"] is False
    assert d["observed"] == {"factor": "00010", "reversal_absent": "01000"}
    assert d["certificate"]["fac5_digests"][0] == d["certificate"]["fac5_digests"][1]


def test_c12_adjudication(default_report):
    d = default_report.results[11].details
    assert d["candidates"]["y"] == {"full_match": False, "first_mismatch": 0}
    assert d["candidates"]["z"] == {"full_match": True, "first_mismatch": None}
    assert d["identity_holds_for"] == "z"


def test_select_c5():
    report = run_all(ids=["c5"])
    assert [r.id for r in report.results] == ["C5"]
    d = report.results[0].details
    assert d["separators_seen"] == ["23", "32"]
    assert d["decompositions_checked"] == 4 * 8
    assert report.results[0].kind == "exact"


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        run_claim("C13")
    with pytest.raises(UnknownClaimError):
        run_all(ids=["C1", "nope"])


def test_small_prefix_still_runs():
    report = run_all(ClaimConfig(prefix_length=1 << 10))
    assert len(report.results) == 12
    assert not any(r.status == ERROR for r in report.results)
    # exact-kind claims do not depend on the prefix
    assert report.results[4].status == PASS


def test_failures_carry_witnesses():
    report = run_all(ClaimConfig(prefix_length=1 << 10))
    failed = [r for r in report.results if r.status == FAIL]
    assert failed, "a 1024-letter prefix is too short for stable recurrence at m = 20"
    for r in failed:
        assert "witness" in r.details


def test_resource_cap_gives_error_status():
    result = run_claim("C3", ClaimConfig(max_length=1000))
    assert result.status == ERROR
    assert result.details["error"] == "resource"


def test_determinism_and_concurrency():
    a = run_all(SMALL).to_dict(with_runtime=False)
    b = run_all(SMALL).to_dict(with_runtime=False)
    c = run_all(SMALL, jobs=4).to_dict(with_runtime=False)
    assert json.dumps(a) == json.dumps(b) == json.dumps(c)


def test_render_empty_json():
    doc = json.loads(render_report(Report(ClaimConfig().to_dict(), []), "json"))
    assert doc["results"] == []
    assert doc["summary"] == {"pass": 0, "fail": 0, "error": 0}
    assert list(doc) == ["version", "config", "results", "summary"]


def test_render_single_text_row():
    text = render_report([run_claim("C9", SMALL)], "text")
    lines = text.splitlines()
    assert lines[0].split()[:4] == ["id", "status", "kind", "runtime_ms"]
    assert lines[1].startswith("C9") and "pass" in lines[1]
    assert lines[-1] == "summary: pass=1 fail=0 error=0"
    assert text.endswith("\n")


def test_summary_matches_tally(default_report):
    doc = json.loads(render_report(default_report, "json"))
    tally = {k: sum(r["status"] == k for r in doc["results"]) for k in ("pass", "fail", "error")}
    assert doc["summary"] == tally
    assert len(doc["results"]) == 12
