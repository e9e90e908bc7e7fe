"""Pipeline telemetry: event bus and exporters."""

from gorfro.telemetry.event_bus import EventBus, EventRecord, NullEventBus, TelemetryExporter
from gorfro.telemetry.exporters.console import ConsoleExporter
from gorfro.telemetry.exporters.jsonl import JsonlExporter

__all__ = [
    "ConsoleExporter",
    "EventBus",
    "EventRecord",
    "JsonlExporter",
    "NullEventBus",
    "TelemetryExporter",
]
