"""Tests for the telemetry event bus and exporters."""

from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from gorfro.telemetry import ConsoleExporter, EventBus, JsonlExporter, NullEventBus
from gorfro.telemetry.exporters.jsonl import envelope


class FailingExporter:
    def export(self, event: str, payload: dict) -> None:
        raise RuntimeError("boom")


def test_event_bus_numbers_events_per_run() -> None:
    buffer = io.StringIO()
    bus = EventBus(exporters=[JsonlExporter(stream=buffer)])
    bus.emit("example.start", run_id="a", example="ci:2,2", n=4)
    bus.emit("example.start", run_id="b", example="ci:2,2", n=4)
    bus.emit("example.finish", run_id="a", example="ci:2,2")
    records = [json.loads(line) for line in buffer.getvalue().splitlines()]
    assert [(r["run_id"], r["sequence"]) for r in records] == [("a", 0), ("b", 0), ("a", 1)]
    assert records[0]["event"] == "example.start"
    assert list(records[0]) == sorted(records[0])


def test_event_bus_requires_run_id() -> None:
    with pytest.raises(ValueError):
        EventBus().emit("example.start", example="x")


def test_failing_exporter_becomes_fallback_record() -> None:
    buffer = io.StringIO()
    bus = EventBus(exporters=[FailingExporter(), JsonlExporter(stream=buffer)])
    bus.emit("koszul.degree", run_id="r", q=2, betti={"1": 3})
    assert len(bus.fallback_records) == 1
    record = bus.fallback_records[0]
    assert record.event == "koszul.degree"
    assert record.error == "boom"
    assert json.loads(buffer.getvalue())["data"]["q"] == 2


def test_bind_merges_context() -> None:
    buffer = io.StringIO()
    bus = EventBus(exporters=[JsonlExporter(stream=buffer)])
    emit = bus.bind(run_id="r", example="segre:1,1", field_mode="q")
    emit("groebner.done", size=1)
    record = json.loads(buffer.getvalue())
    assert record == {
        "data": {"size": 1},
        "event": "groebner.done",
        "example": "segre:1,1",
        "field_mode": "q",
        "run_id": "r",
        "sequence": 0,
    }


def test_null_bus_ignores_events() -> None:
    bus = NullEventBus()
    bus.emit("example.start")
    bus.bind(example="x")("example.finish")
    assert bus.fallback_records == ()


def test_jsonl_exporter_appends_to_file(tmp_path: Path) -> None:
    target = tmp_path / "events" / "run.jsonl"
    exporter = JsonlExporter(target)
    exporter.export("example.start", {"run_id": "r", "sequence": 0})
    exporter.export("example.finish", {"run_id": "r", "sequence": 1})
    lines = target.read_text(encoding="utf-8").splitlines()
    assert [json.loads(line)["event"] for line in lines] == ["example.start", "example.finish"]


def test_envelope_nests_payload_under_data() -> None:
    record = envelope("koszul.degree", {"run_id": "r", "sequence": 5, "q": 3, "betti": {"2": 1}})
    assert record == {"event": "koszul.degree", "run_id": "r", "sequence": 5, "data": {"q": 3, "betti": {"2": 1}}}
    assert "example" not in record


def test_jsonl_exporter_needs_a_target() -> None:
    with pytest.raises(ValueError):
        JsonlExporter()


def test_console_exporter_format() -> None:
    stream = io.StringIO()
    exporter = ConsoleExporter(stream=stream)
    base = {"example": "veronese:1,3", "field_mode": "q"}
    exporter.export("koszul.degree", {**base, "sequence": 3, "q": 2, "betti": {"1": 3}})
    exporter.export("example.error", {**base, "sequence": 4, "code": "ERR_RESOURCE_LIMIT", "message": "out of time"})
    assert stream.getvalue().splitlines() == [
        "[veronese:1,3 q:003]   q=2 betti={'1': 3}",
        "[veronese:1,3 q:004] ERROR ERR_RESOURCE_LIMIT: out of time",
    ]


def test_console_exporter_color() -> None:
    stream = io.StringIO()
    ConsoleExporter(stream=stream, color=True).export("example.finish", {"example": "x", "field_mode": "q"})
    assert stream.getvalue() == "\033[92m[x q:000] done\033[0m\n"
