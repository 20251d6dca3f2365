import io
import json
from fractions import Fraction

import pytest

from fibsum import verifier
from fibsum.config import SuiteConfig
from fibsum.verifier import (
    DEFAULT_THRESHOLD, FAIL, FINITE_IDENTITIES, PUBLISHED_EXAMPLES, PASS, SKIPPED, PublishedExample, certify,
    run_suite, verify_example, verify_finite, verify_infinite, write_reports,
)

SMALL = SuiteConfig(families=("A1", "J"), max_m=1, max_n=2, max_q=2, max_p=1, n_probe=24,
                    finite_max=2, finite_max_p=1, max_N=4, sweep_range=200, sweep_trials=20)


def test_report_fields():
    report = verify_infinite("A3", 1, 1, 3, N_probe=48)
    data = json.loads(report.to_json())
    assert list(data) == ["entry_id", "params", "status", "lhs", "rhs", "tail", "ms"]
    assert data["status"] == PASS
    assert data["rhs"] == "143/960"
    assert data["params"] == {"m": 1, "n": 1, "q": 3, "p": None, "N": 48}
    assert data["ms"] is None


def test_infinite_skips_invalid_params():
    report = verify_infinite("A3", 2, 1, 1)
    assert report.status == SKIPPED and report.lhs is None


def test_infinite_rejects_short_probe():
    with pytest.raises(ValueError):
        verify_infinite("A3", 1, 1, 1, N_probe=4)


def test_infinite_fails_with_tight_threshold():
    report = verify_infinite("E1", 1, 1, 1, N_probe=8, threshold=Fraction(1, 10 ** 30))
    assert report.status == FAIL


def test_adaptive_probe_stretches_slow_families():
    report = verify_infinite("E1", 1, 1, 1, N_probe=16, adaptive=True)
    assert report.params["N"] == 32


def test_mean_convergence_certificate():
    cert = certify("A5", 1, 1, 1, 0, 48)
    assert cert.holds(Fraction(1, 10 ** 15))


def test_finite_identity_catalogue():
    assert "A1-finite" in FINITE_IDENTITIES
    assert {"X1", "X2", "X3"} <= set(FINITE_IDENTITIES)
    assert verify_finite("A1-finite", 2, 1, 2, 0, 5).status == PASS
    assert verify_finite("A3-finite", 2, 1, 1, 0, 5).status == SKIPPED
    assert verify_finite("X3", 1, 3, 4, 0, 1).status == PASS
    with pytest.raises(KeyError):
        verify_finite("nope", 1, 1, 1, 0, 1)


def test_example_report_carries_both_values():
    good = verify_example(PUBLISHED_EXAMPLES[1])
    assert good.status == PASS and good.lhs == good.rhs == "143/960"
    wrong = verify_example(PublishedExample("A3", 1, 1, 3, Fraction(1, 7)))
    assert wrong.status == FAIL and wrong.lhs == "143/960" and wrong.rhs == "1/7"


def test_suite_summary_and_order():
    result = run_suite(SMALL, "all")
    ids = [r.entry_id for r in result.reports]
    assert ids[0].startswith("identity-")
    assert result.summary["total"] == len(result.reports)
    counts = result.summary["counts"]
    assert sum(counts.values()) == len(result.reports)
    assert "elapsed_ms" not in result.summary
    assert set(result.summary["by_family"]) >= {"identities", "A", "J"}


def test_suite_threads_do_not_change_reports():
    serial = run_suite(SMALL, "infinite", workers=1)
    threaded = run_suite(SMALL, "infinite", workers=4)
    assert [r.as_dict() for r in serial.reports] == [r.as_dict() for r in threaded.reports]


def test_thread_count_from_environment(monkeypatch):
    monkeypatch.delenv("FIBSUM_THREADS", raising=False)
    assert verifier.thread_count() == 1
    monkeypatch.setenv("FIBSUM_THREADS", "3")
    assert verifier.thread_count() == 3
    monkeypatch.setenv("FIBSUM_THREADS", "0")
    assert verifier.thread_count() >= 1


def test_timing_only_in_summary():
    result = run_suite(SMALL, "examples", timing=True)
    assert isinstance(result.summary["elapsed_ms"], int)
    assert all(r.ms is None for r in result.reports)


def test_write_reports_json_lines():
    out = io.StringIO()
    result = run_suite(SMALL, "identities")
    write_reports(result, out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 14
    assert json.loads(lines[-1])["summary"]["counts"][PASS] == 13


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_suite(SMALL, "everything")


@pytest.mark.parametrize("entry_id, m, n, q, N_probe, threshold, expected", [
    ("A3", 1, 1, 1, 64, Fraction(1, 10 ** 20), "1/1"),
    ("A4", 2, 6, 1, 32, DEFAULT_THRESHOLD, "1/44444622716928"),
    ("J1", 3, 2, 2, 32, DEFAULT_THRESHOLD, "1288981/35850395750400"),
])
def test_infinite_known_values(entry_id, m, n, q, N_probe, threshold, expected):
    report = verify_infinite(entry_id, m, n, q, 0, N_probe, threshold)
    assert report.status == PASS and report.rhs == expected


def test_finite_examples_by_family():
    assert verify_finite("A1-finite", 1, 2, 1, 0, 6).status == PASS
    assert verify_finite("E2-finite", 1, 1, 2, 0, 5).status == PASS
    assert verify_finite("E2-finite", 1, 1, 1, 0, 5).status == SKIPPED


def test_cross_identities_small_range():
    for n in range(1, 7):
        for q in range(1, 7):
            assert verify_finite("X1", 1, n, q, 0, 1).status == PASS
            status = SKIPPED if q % 2 else PASS
            assert verify_finite("X2", 1, n, q, 0, 1).status == status
            assert verify_finite("X3", 1, n, q, 0, 1).status == status
