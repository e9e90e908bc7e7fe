"""Telemetry exporters."""

from gorfro.telemetry.exporters.console import ConsoleExporter
from gorfro.telemetry.exporters.jsonl import JsonlExporter

__all__ = ["ConsoleExporter", "JsonlExporter"]
