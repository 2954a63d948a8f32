"""Verification harness: suite assembly, determinism, failure reporting."""

import pytest

from airpockets import verify
from airpockets.verify import (
    CHECK_KINDS,
    SUITES,
    CheckResult,
    VerificationReport,
    run_suite,
)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("AIRPOCKETS_OEIS_CACHE", str(tmp_path / "oeis"))


def test_paper_series_suite_passes():
    report = run_suite("paper-series")
    assert report.ok
    assert len(report.checks) == len(verify.SERIES_TABLE)
    assert {c.check_kind for c in report.checks} == {"dual_path"}


def test_oracle_suite_passes():
    report = run_suite("oracle", max_n=8)
    assert report.ok
    assert {c.check_kind for c in report.checks} == {"oracle_vs_gf"}
    subjects = [c.subject for c in report.checks]
    assert "minorized m=-2" in subjects
    assert "sym t=2" in subjects


def test_bounded_families_run_two_lengths_further():
    report = run_suite("oracle", max_n=8)
    scopes = {c.subject: c.range for c in report.checks}
    assert scopes["G"] == "n <= 8"
    assert scopes["g0t t=2"] == "n <= 10"
    assert scopes["B"] == "n <= 10"


def test_bijections_suite_passes():
    report = run_suite("bijections", max_n=8)
    assert report.ok
    assert {c.check_kind for c in report.checks} == {"bijection_roundtrip"}
    assert len(report.checks) == 4


def test_oeis_suite_passes_offline():
    report = run_suite("oeis", offline=True)
    assert report.ok
    assert len(report.checks) == 18
    assert {c.check_kind for c in report.checks} == {"gf_vs_oeis"}
    assert report.checks[0].subject == "dap vs A004148"


def test_all_suite_concatenates_in_order():
    report = run_suite("all", max_n=6, offline=True)
    assert report.ok
    kinds = [c.check_kind for c in report.checks]
    suite_order = ("dual_path", "oracle_vs_gf", "bijection_roundtrip",
                   "gf_vs_oeis")
    boundaries = [kinds.index(kind) for kind in suite_order]
    assert boundaries == sorted(boundaries)
    assert set(kinds) == set(CHECK_KINDS)


def test_report_is_deterministic_across_runs():
    first = run_suite("all", max_n=6, offline=True)
    second = run_suite("all", max_n=6, offline=True)
    assert first == second


def test_single_thread_matches_fanout():
    pooled = run_suite("paper-series")
    serial = run_suite("paper-series", threads=1)
    assert pooled == serial


@pytest.mark.parametrize("kwargs", [
    {"suite": "nosuch"},
    {"suite": "oracle", "max_n": 1},
    {"suite": "oracle", "order": 5},
])
def test_run_suite_rejects(kwargs):
    with pytest.raises(ValueError):
        run_suite(**kwargs)


def test_suites_tuple_is_the_contract():
    assert SUITES == ("paper-series", "oracle", "bijections", "oeis", "all")


@pytest.mark.parametrize("kwargs", [
    {"subject": "x", "check_kind": "imagined", "range": "n", "status": "pass"},
    {"subject": "x", "check_kind": "dual_path", "range": "n",
     "status": "maybe"},
    {"subject": "x", "check_kind": "dual_path", "range": "n",
     "status": "pass", "first_mismatch": "boom"},
    {"subject": "x", "check_kind": "dual_path", "range": "n",
     "status": "fail"},
])
def test_check_result_invariants(kwargs):
    with pytest.raises(ValueError):
        CheckResult(**kwargs)


def test_crashing_check_is_reported_not_raised():
    def explode():
        raise RuntimeError("wires crossed")

    result = verify._run_check(("subject", "dual_path", "scope", explode))
    assert result.status == "fail"
    assert "RuntimeError" in result.first_mismatch
    assert "wires crossed" in result.first_mismatch


def test_injected_mismatch_fails_the_suite(monkeypatch):
    broken = (("G", {}, (1, 0, 2, 3, 7, 17, 40, 97, 238, 587, 9999)),)
    monkeypatch.setattr(verify, "SERIES_TABLE", broken)
    report = run_suite("paper-series")
    assert not report.ok
    assert report.checks[0].status == "fail"
    assert "n=10" in report.checks[0].first_mismatch
    assert "1458" in report.checks[0].first_mismatch


def test_report_ok_property():
    passing = CheckResult("a", "dual_path", "n", "pass")
    failing = CheckResult("b", "dual_path", "n", "fail", "n=0: off by one")
    assert VerificationReport("paper-series", (passing,)).ok
    assert not VerificationReport("paper-series", (passing, failing)).ok
