"""Event bus carrying pipeline progress to telemetry exporters."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Mapping, MutableMapping, Optional, Sequence


class TelemetryExporter:
    """Protocol-like interface for telemetry exporters."""

    def export(self, event: str, payload: Mapping[str, Any]) -> None:  # pragma: no cover - interface
        raise NotImplementedError


@dataclass
class EventRecord:
    event: str
    payload: Mapping[str, Any]
    error: Optional[str] = None


class EventBus:
    """Numbers events per run and fans them out; exporter failures become fallback records."""

    def __init__(self, *, exporters: Optional[Iterable[TelemetryExporter]] = None) -> None:
        self._exporters: List[TelemetryExporter] = list(exporters or [])
        self._sequence: MutableMapping[str, int] = {}
        self._fallback: List[EventRecord] = []
        self._lock = threading.Lock()

    def register(self, exporter: TelemetryExporter) -> None:
        self._exporters.append(exporter)

    @property
    def fallback_records(self) -> Sequence[EventRecord]:
        return tuple(self._fallback)

    def emit(self, event: str, **payload: Any) -> None:
        run_id = payload.get("run_id")
        if not run_id:
            raise ValueError("Event payload missing run_id")
        run_id = str(run_id)
        with self._lock:
            sequence = self._sequence.get(run_id, 0)
            self._sequence[run_id] = sequence + 1
            record = dict(payload)
            record.setdefault("sequence", sequence)
            for exporter in self._exporters:
                try:
                    exporter.export(event, record)
                except Exception as exc:  # pragma: no cover - exporter failures
                    self._fallback.append(EventRecord(event=event, payload=record, error=str(exc)))

    def bind(self, **context: Any) -> Callable[..., None]:
        """Emitter that adds ``context`` (e.g. run_id, example) to every payload."""

        def emit(event: str, **payload: Any) -> None:
            self.emit(event, **{**context, **payload})

        return emit


class NullEventBus(EventBus):
    """Bus without exporters that accepts events lacking a run id."""

    def emit(self, event: str, **payload: Any) -> None:
        return None
