import json
import time

import pytest

from hopfint import __version__
from hopfint.errors import HopfVerificationError, InvalidInput
from hopfint.suite import (
    FAIL, INCONCLUSIVE, PASS, CheckRecord, PlannedCheck, ReportDocument, SuiteContext,
    SuiteOptions, _execute, run_suite, single_check,
)

LEADING = ["verify", "uniqueness", "grouplike", "gamma_comodule", "sweedler[left]",
           "sweedler[right]", "phi_star", "antipode", "convolution", "doi[k]", "doi[H]"]


@pytest.fixture(scope="module")
def timed_suite():
    """run_suite memoised per algebra, with its wall-clock time."""
    runs = {}

    def run(h):
        if h not in runs:
            started = time.perf_counter()
            report = run_suite(h)
            runs[h] = (report, time.perf_counter() - started)
        return runs[h]
    return run


def test_full_suite_passes(catalog_algebra, timed_suite):
    report, _ = timed_suite(catalog_algebra)
    failing = [r.to_dict() for r in report.records if r.status != PASS]
    assert not failing
    assert report.exit_code == 0
    assert [r.check for r in report.records][:len(LEADING)] == LEADING


@pytest.mark.slow
def test_full_catalog_runs_within_a_minute(catalog_algebras, timed_suite):
    assert len(catalog_algebras) == 14
    assert sum(timed_suite(h)[1] for h in catalog_algebras.values()) < 60


def test_report_document(kc2):
    report = run_suite(kc2, SuiteOptions(seed=5))
    doc = report.to_dict()
    assert doc["kind"] == "report"
    assert doc["header"] == {"hopfint": __version__, "algebra": "k[G2]", "field": "Q",
                             "dim": 2, "seed": 5, "iso_attempts": 32}
    assert doc["summary"]["ok"] is True
    assert doc["summary"]["pass"] == len(report.records)
    json.dumps(doc)


def test_report_over_a_prime_field_serialises(taft3):
    report = single_check(taft3, "gamma")
    assert report.ok
    json.dumps(report.to_dict())


def test_parallel_run_matches_serial(kc2):
    serial = run_suite(kc2)
    parallel = run_suite(kc2, SuiteOptions(jobs=3))
    assert [(r.check, r.status) for r in parallel.records] == \
        [(r.check, r.status) for r in serial.records]


def test_single_group(sweedler):
    report = single_check(sweedler, "snake")
    assert [r.check for r in report.records] == \
        ["verify", "snake[k]", "snake[Γ]", "snake[H]", "snake[H*]"]
    with pytest.raises(InvalidInput):
        single_check(sweedler, "everything")


def test_internal_hom_battery_respects_the_dimension_limit(sweedler):
    small = [r.check for r in single_check(sweedler, "internal_hom").records]
    large = [r.check for r in single_check(sweedler, "internal_hom",
                                           SuiteOptions(battery_dim_limit=4)).records]
    assert "internal_hom[H,H,H]" not in small
    assert "internal_hom[H,H,H]" in large
    assert len(large) == 28


def test_unverified_algebra_is_refused(sweedler, mutated):
    with pytest.raises(HopfVerificationError):
        run_suite(mutated(sweedler, "unit", (0,)))


def test_raising_check_becomes_a_failure(kc2):
    boom = PlannedCheck("boom", "test", lambda ctx: 1 / 0)
    record = _execute(SuiteContext(kc2, SuiteOptions()), boom)
    assert record.status == FAIL
    assert record.witness["error"].startswith("ZeroDivisionError")


def test_exit_codes():
    passing = ReportDocument({}, [CheckRecord("a", PASS)])
    unsure = ReportDocument({}, [CheckRecord("a", PASS), CheckRecord("b", INCONCLUSIVE)])
    assert passing.exit_code == 0
    assert unsure.exit_code == 1
    assert unsure.counts() == {PASS: 1, FAIL: 0, INCONCLUSIVE: 1}
