"""JSONL telemetry exporter."""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import IO, Any, Dict, Mapping, Optional

from gorfro.telemetry.event_bus import TelemetryExporter

# keys lifted out of the payload into the top level of every line
ENVELOPE_KEYS = ("run_id", "example", "field_mode", "sequence")


def envelope(event: str, payload: Mapping[str, Any]) -> Dict[str, Any]:
    """``{"event", run_id, example, field_mode, sequence, "data": {...}}`` for one event."""

    record: Dict[str, Any] = {"event": event}
    for key in ENVELOPE_KEYS:
        if key in payload:
            record[key] = payload[key]
    record["data"] = {k: v for k, v in payload.items() if k not in ENVELOPE_KEYS}
    return record


class JsonlExporter(TelemetryExporter):
    """Writes one enveloped event per line to a file (appending) or a stream."""

    def __init__(self, path: Optional[str | Path] = None, *, stream: Optional[IO[str]] = None) -> None:
        if path is None and stream is None:
            raise ValueError("Either path or stream must be provided")
        self._path = Path(path) if path is not None else None
        self._stream = stream
        self._lock = threading.Lock()
        if self._path is not None:
            self._path.parent.mkdir(parents=True, exist_ok=True)

    def export(self, event: str, payload: Mapping[str, Any]) -> None:
        line = json.dumps(envelope(event, payload), ensure_ascii=False, sort_keys=True, default=str)
        with self._lock:
            if self._path is not None:
                with self._path.open("a", encoding="utf-8") as handle:
                    handle.write(line + "\n")
                return
            assert self._stream is not None
            self._stream.write(line + "\n")
            self._stream.flush()
