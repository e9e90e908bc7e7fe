"""Tests for verdicts, the theorem harness, reports and the parallel runner."""

from __future__ import annotations

import json

import pytest

from gorfro.catalog.families import NOT_APPLICABLE, ClassicalSubcanonicity, entry_from_id
from gorfro.diagnostics import (
    EXIT_ERROR,
    EXIT_FAILED,
    EXIT_OK,
    FAIL,
    PASS,
    SKIP,
    Job,
    RunDocument,
    RunOptions,
    betti_only,
    build_report,
    dumps,
    error_record,
    run,
    run_jobs,
    run_pipeline,
    validate_document,
    verify_all,
    verify_theorem1,
)
from gorfro.diagnostics.runner import IDEAL_NOTE
from gorfro.errors import InternalCheckError, ResourceLimitError
from gorfro.exactalg.budget import Budget
from gorfro.diagnostics.pipeline import ExampleResult
from gorfro.exactalg.field import GF, QQ, Field
from gorfro.exactalg.polynomial import variables
from gorfro.telemetry.event_bus import EventBus


class RecordingExporter:
    def __init__(self) -> None:
        self.events: list = []

    def export(self, event: str, payload: dict) -> None:
        self.events.append((event, dict(payload)))


def _pipeline(example: str, field: Field = QQ) -> ExampleResult:
    entry = entry_from_id(example)
    return run_pipeline(entry.generators, entry.nvars, field, example=example)


def test_twisted_cubic_verdict() -> None:
    result = _pipeline("veronese:1,3")
    v = result.verdict
    assert v.cohen_macaulay
    assert (v.pd, v.dim, v.codim, v.type) == (2, 2, 2, 2)
    assert not v.gorenstein
    assert not v.frobenius
    assert not v.frobenius_defined
    kinds = {w.kind for w in v.witnesses}
    assert kinds == {"type", "top_class"}
    assert result.h_vector == (1, 2)
    assert result.a_invariant == -1


def test_hypersurfaces_are_gorenstein_and_frobenius() -> None:
    for example in ("veronese:1,2", "segre:1,1", "plucker2:4"):
        v = _pipeline(example).verdict
        assert v.gorenstein and v.frobenius, example


def test_complete_intersection_verdict() -> None:
    result = _pipeline("ci:2,2")
    assert result.betti.totals() == [1, 2, 1]
    assert result.betti.socle_degree == 4
    assert result.verdict.gorenstein
    assert result.verdict.frobenius
    assert result.betti_symmetric
    assert result.numerator_palindromic


def test_veronese_surface_is_not_gorenstein() -> None:
    result = _pipeline("veronese:2,2")
    assert result.betti.totals() == [1, 6, 8, 3]
    assert result.verdict.cohen_macaulay
    assert not result.verdict.gorenstein
    assert not result.betti_symmetric
    assert {w.kind for w in result.symmetry_witnesses} >= {"betti_asymmetry"}


def test_non_cohen_macaulay_witness() -> None:
    x0, x1, x2, x3 = variables(QQ, 4)
    # two skew lines in P^3
    gens = (x0 * x2, x0 * x3, x1 * x2, x1 * x3)
    result = run_pipeline(gens, 4, QQ)
    assert result.dim == 2
    assert result.verdict.pd == 3
    assert not result.verdict.cohen_macaulay
    assert "not_cohen_macaulay" in {w.kind for w in result.verdict.witnesses}
    assert result.verdict.gorenstein == result.verdict.frobenius


def test_polynomial_ring_is_gorenstein() -> None:
    result = run_pipeline((), 2, QQ)
    assert result.betti.entries == ((0, 0, 1),)
    assert result.verdict.gorenstein
    assert result.verdict.frobenius


def test_pipeline_emits_events() -> None:
    events = []
    entry = entry_from_id("veronese:1,2")
    run_pipeline(entry.generators, entry.nvars, QQ, emit=lambda e, **p: events.append(e))
    assert events[0] == "example.start"
    assert events[1] == "groebner.done"
    assert "koszul.degree" in events
    assert events[-1] == "diagnostics.verdict"


def test_pipeline_respects_budget() -> None:
    entry = entry_from_id("veronese:1,3")
    with pytest.raises(ResourceLimitError):
        run_pipeline(entry.generators, entry.nvars, QQ, budget=Budget.from_limits(max_nonzeros=1))


def test_betti_only_over_prime() -> None:
    entry = entry_from_id("segre:1,2")
    table, numerator = betti_only(entry.generators, entry.nvars, GF(32003))
    assert table.totals() == [1, 3, 2]
    assert numerator.coefficients == (1, 0, -3, 2)


def test_theorems_for_subcanonical_entries() -> None:
    for example in ("veronese:1,2", "segre:1,1", "plucker2:4"):
        checks = verify_all(_pipeline(example), entry_from_id(example))
        assert {name: c.status for name, c in checks.items()} == {
            "avramov_golod": PASS,
            "theorem1": PASS,
            "theorem2": PASS,
        }, example


def test_theorems_for_non_subcanonical_entries() -> None:
    for example in ("veronese:1,3", "segre:1,2"):
        checks = verify_all(_pipeline(example), entry_from_id(example))
        assert checks["theorem1"].status == SKIP
        assert checks["theorem2"].status == PASS
        assert checks["avramov_golod"].status == PASS


def test_theorem2_is_skipped_without_root_data() -> None:
    checks = verify_all(_pipeline("ci:2,2"), entry_from_id("ci:2,2"))
    assert checks["theorem2"].status == SKIP
    assert checks["theorem1"].status == SKIP


def test_theorem1_flags_wrong_canonical_degree() -> None:
    result = _pipeline("segre:1,1")
    check = verify_theorem1(result, ClassicalSubcanonicity(True, True, 3))
    assert check.status == FAIL
    assert "a-invariant -2 != -3" in check.detail


def test_theorem1_flags_non_gorenstein_claim() -> None:
    result = _pipeline("veronese:1,3")
    check = verify_theorem1(result, ClassicalSubcanonicity(True, True, 1))
    assert check.failed
    assert "not Gorenstein" in check.detail


def test_report_is_schema_valid_and_deterministic() -> None:
    result = _pipeline("veronese:1,3")
    entry = entry_from_id("veronese:1,3")
    report = build_report(result, verify_all(result, entry), subcanonical=entry.subcanonical)
    assert report["runtime_ms"] is None
    assert report["betti"] == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]
    assert report["betti_totals"] == [1, 3, 2]
    assert report["hilbert_numerator"] == [1, 0, -3, 2]
    document = RunDocument(reports=[report]).to_json()
    assert document["status"] == "pass"
    text = dumps(document)
    assert json.loads(text) == document
    assert dumps(json.loads(text)) == text


def test_report_with_timings() -> None:
    result = _pipeline("veronese:1,2")
    report = build_report(result, {}, timings=True)
    assert isinstance(report["runtime_ms"], float)


def test_failed_theorem_sets_exit_code() -> None:
    result = _pipeline("segre:1,1")
    checks = verify_all(result, entry_from_id("segre:1,1"))
    checks["theorem1"] = verify_theorem1(result, ClassicalSubcanonicity(True, True, 3))
    document = RunDocument(reports=[build_report(result, checks)])
    assert document.status == "fail"
    assert document.exit_code == EXIT_FAILED
    assert document.failed() == ["segre:1,1[q]:theorem1"]


def test_errors_take_precedence_over_failures() -> None:
    error = ResourceLimitError("ERR_RESOURCE_LIMIT", "Time budget exhausted", pointer="plucker2:5")
    document = RunDocument(errors=[error_record("plucker2:5", "p:32003", error)], field_mismatches=["x[q]"])
    assert document.status == "error"
    assert document.exit_code == EXIT_ERROR
    assert RunDocument().exit_code == EXIT_OK


def test_schema_violation_is_internal_error() -> None:
    with pytest.raises(InternalCheckError) as excinfo:
        validate_document({"status": "maybe", "reports": [], "errors": [], "summary": {}})
    assert excinfo.value.code == "ERR_REPORT_SCHEMA"


def test_run_sorts_reports_and_records_errors() -> None:
    jobs = [
        Job.for_entry(entry_from_id("segre:1,1"), QQ),
        Job.for_entry(entry_from_id("veronese:1,2"), QQ),
        Job.for_entry(entry_from_id("veronese:1,3"), QQ, max_nonzeros=1),
    ]
    document = run(jobs, RunOptions(workers=2)).to_json()
    assert [r["example"] for r in document["reports"]] == ["segre:1,1", "veronese:1,2"]
    assert document["errors"][0]["code"] == "ERR_RESOURCE_LIMIT"
    assert document["status"] == "error"


def test_runner_emits_bound_events() -> None:
    exporter = RecordingExporter()
    options = RunOptions(bus=EventBus(exporters=[exporter]), run_id="run-1")
    run([Job.for_entry(entry_from_id("veronese:1,2"), QQ)], options)
    names = [event for event, _ in exporter.events]
    assert names[0] == "example.start"
    assert names[-1] == "example.finish"
    sequences = [payload["sequence"] for _, payload in exporter.events]
    assert sequences == list(range(len(sequences)))
    assert all(payload["example"] == "veronese:1,2" for _, payload in exporter.events)


@pytest.mark.asyncio
async def test_unlucky_prime_is_detected() -> None:
    x0, x1 = variables(QQ, 2)
    # a complete intersection over Q whose second generator loses a term mod 32003
    gens = (x0 * x1, x0 * x0 + 32003 * x1 * x1)
    jobs = [Job("ideal", QQ, 2, gens), Job("ideal", GF(32003), 2, gens)]
    document = (await run_jobs(jobs)).to_json()
    by_mode = {r["field_mode"]: r for r in document["reports"]}
    assert by_mode["q"]["betti_totals"] == [1, 2, 1]
    assert by_mode["p:32003"]["unlucky_prime"] is True
    assert by_mode["q"]["unlucky_prime"] is None
    assert IDEAL_NOTE in by_mode["q"]["notes"]
    assert document["summary"]["field_mismatches"] == []


@pytest.mark.asyncio
async def test_matching_fields_are_not_unlucky() -> None:
    entry = entry_from_id("veronese:1,3")
    document = (await run_jobs([Job.for_entry(entry, QQ), Job.for_entry(entry, GF(32003))])).to_json()
    by_mode = {r["field_mode"]: r for r in document["reports"]}
    assert by_mode["p:32003"]["unlucky_prime"] is False
    assert by_mode["p:32003"]["betti"] == by_mode["q"]["betti"]
    assert by_mode["q"]["subcanonical"] == {"applies": True, "holds": False, "N": None}


def test_ideal_reports_are_not_subcanonical() -> None:
    x0, x1, x2 = variables(QQ, 3)
    document = run([Job("conic", QQ, 3, (x0 * x2 - x1 * x1,))]).to_json()
    report = document["reports"][0]
    assert report["subcanonical"] == NOT_APPLICABLE.to_json()
    assert report["theorems"]["theorem1"]["status"] == SKIP


def test_line_union_plane_is_not_cohen_macaulay() -> None:
    x0, x1, x2, x3 = variables(QQ, 4)
    result = run_pipeline((x0 * x2, x0 * x3), 4, QQ)
    assert (result.verdict.pd, result.verdict.codim) == (2, 1)
    assert not result.verdict.cohen_macaulay
    assert not result.verdict.gorenstein


@pytest.mark.slow
def test_grassmannian_g25_over_prime() -> None:
    entry = entry_from_id("plucker2:5")
    result = run_pipeline(entry.generators, entry.nvars, GF(32003), example=entry.id)
    assert result.betti.totals() == [1, 5, 5, 1]
    assert result.verdict.gorenstein and result.verdict.frobenius
    assert result.a_invariant == -5
    assert verify_all(result, entry)["theorem1"].status == PASS


@pytest.mark.slow
def test_second_veronese_of_p3_over_prime() -> None:
    entry = entry_from_id("veronese:3,2")
    result = run_pipeline(entry.generators, entry.nvars, GF(32003), example=entry.id)
    assert result.verdict.pd == 6
    assert result.verdict.gorenstein and result.verdict.frobenius
    assert result.a_invariant == -2
    assert {c.status for c in verify_all(result, entry).values()} == {PASS}
