"""Command-line surface."""

from gorfro.cli.config import RunConfig
from gorfro.cli.main import build_parser, main, run_command
from gorfro.cli.render import render_betti_document, render_document, render_report_text

__all__ = [
    "RunConfig",
    "build_parser",
    "main",
    "render_betti_document",
    "render_document",
    "render_report_text",
    "run_command",
]
