"""Console progress exporter."""

from __future__ import annotations

import sys
from typing import Any, Mapping, Optional, TextIO

from gorfro.telemetry.event_bus import TelemetryExporter

_RESET = "\033[0m"
_COLORS = {
    "example.start": "\033[96m",
    "example.finish": "\033[92m",
    "example.error": "\033[91m",
    "diagnostics.verdict": "\033[93m",
}
_GRAY = "\033[90m"


class ConsoleExporter(TelemetryExporter):
    """One compact line per event, written to stderr by default."""

    def __init__(self, *, stream: Optional[TextIO] = None, color: bool = False) -> None:
        self.stream = stream or sys.stderr
        self.color = color

    def export(self, event: str, payload: Mapping[str, Any]) -> None:
        line = self._format(event, payload)
        if self.color:
            line = f"{_COLORS.get(event, _GRAY)}{line}{_RESET}"
        self.stream.write(line + "\n")
        self.stream.flush()

    @staticmethod
    def _format(event: str, payload: Mapping[str, Any]) -> str:
        prefix = f"[{payload.get('example', '?')} {payload.get('field_mode', '')}:{payload.get('sequence', 0):03d}]"
        if event == "example.start":
            return f"{prefix} start n={payload.get('n')}"
        if event == "groebner.done":
            return f"{prefix} groebner basis with {payload.get('size')} elements"
        if event == "koszul.degree":
            return f"{prefix}   q={payload.get('q')} betti={payload.get('betti')}"
        if event == "diagnostics.verdict":
            return (
                f"{prefix} gorenstein={payload.get('gorenstein')} "
                f"frobenius={payload.get('frobenius')}"
            )
        if event == "example.finish":
            return f"{prefix} done"
        if event == "example.error":
            return f"{prefix} ERROR {payload.get('code')}: {str(payload.get('message', ''))[:60]}"
        return f"{prefix} {event}"
