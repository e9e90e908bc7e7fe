"""gorfro command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from gorfro.catalog.catalog import Catalog, CatalogProfile, export_entry
from gorfro.cli.config import RunConfig
from gorfro.cli.render import render_betti_document, render_document
from gorfro.diagnostics.pipeline import betti_only
from gorfro.diagnostics.report import EXIT_ERROR, EXIT_OK, dumps
from gorfro.diagnostics.runner import Job, RunOptions, run
from gorfro.errors import GorfroError, InputError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import QQ, field_name, parse_field
from gorfro.groebner.idealio import load_ideal
from gorfro.rootsys.roots import build_root_system, parse_weight
from gorfro.rootsys.subcanonical import subcanonicity_test
from gorfro.telemetry.event_bus import EventBus
from gorfro.telemetry.exporters.console import ConsoleExporter
from gorfro.telemetry.exporters.jsonl import JsonlExporter

logger = logging.getLogger("gorfro.cli")

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q (rationals) or p:<prime>")
    common.add_argument("--json", action="store_true", help="Emit the JSON document")
    common.add_argument("--q-max", type=int, dest="q_max", help="Hard cap on the internal degree")
    common.add_argument("--max-seconds", type=float, dest="max_seconds", help="Wall-clock budget per example")
    common.add_argument("--max-nonzeros", type=int, dest="max_nonzeros", help="Matrix size budget per example")
    common.add_argument("--timings", action="store_true", help="Record runtime_ms in reports")
    common.add_argument("--events", help="Append telemetry events to this JSONL file")
    common.add_argument("--progress", action="store_true", help="Print progress events to stderr")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Repeat for more logging")
    common.add_argument("--catalog", help="Catalog YAML document to use instead of the packaged one")
    common.add_argument("--no-fine-grading", action="store_true", dest="no_fine_grading")
    common.add_argument("--workers", type=int, default=1, help="Parallel examples / degrees")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="gorfro",
        description="Gorenstein and Frobenius diagnostics for homogeneous ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    catalog = sub.add_parser("catalog", parents=[common], help="List or export catalog entries")
    catalog.add_argument("action", choices=("list", "export"))
    catalog.add_argument("id", nargs="?", help="Entry id for export")

    for name, text in (("check", "Full diagnostics for one ideal"), ("betti", "Betti table only")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        source = cmd.add_mutually_exclusive_group(required=True)
        source.add_argument("--example", help="Catalog id such as veronese:1,3")
        source.add_argument("--ideal", help="Path to an ideal text file")

    subcanonical = sub.add_parser("subcanonical", parents=[common], help="Root-system subcanonicity test")
    subcanonical.add_argument("--type", required=True, dest="root_type", help="e.g. A3 or A1xA2")
    subcanonical.add_argument("--weight", required=True, help="Fundamental-weight coordinates, e.g. 0,1,0")

    verify = sub.add_parser("verify-theorems", parents=[common], help="Check both theorems over the catalog")
    selector = verify.add_mutually_exclusive_group(required=True)
    selector.add_argument("--all", action="store_true", dest="all_entries")
    selector.add_argument("--example")
    return parser


def _configure_logging(verbosity: int, stream: TextIO) -> None:
    root = logging.getLogger("gorfro")
    root.setLevel(_LEVELS.get(verbosity, logging.DEBUG))
    if not any(getattr(h, "_gorfro_cli", False) for h in root.handlers):
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._gorfro_cli = True  # type: ignore[attr-defined]
        root.addHandler(handler)


def _event_bus(config: RunConfig, stderr: TextIO) -> EventBus:
    bus = EventBus()
    if config.events is not None:
        bus.register(JsonlExporter(config.events))
    if config.progress:
        bus.register(ConsoleExporter(stream=stderr, color=stderr.isatty()))
    return bus


def _options(config: RunConfig, stderr: TextIO) -> RunOptions:
    return RunOptions(
        workers=config.workers,
        use_fine_grading=config.fine_grading,
        timings=config.timings,
        bus=_event_bus(config, stderr),
    )


def _profile_jobs(profile: CatalogProfile, config: RunConfig) -> List[Job]:
    modes = [config.field] if config.field is not None else [parse_field(m) for m in profile.field_modes]
    return [
        Job.for_entry(
            profile.entry(),
            field,
            q_max=config.q_max if config.q_max is not None else profile.q_max,
            max_seconds=config.max_seconds if config.max_seconds is not None else profile.max_seconds,
            max_nonzeros=config.max_nonzeros if config.max_nonzeros is not None else profile.max_nonzeros,
        )
        for field in modes
    ]


def _ideal_job(path: str, config: RunConfig) -> Job:
    ideal = load_ideal(path)
    return Job(
        example=path,
        field=config.field_or_default(QQ),
        nvars=ideal.nvars,
        generators=ideal.generators,
        q_max=config.q_max,
        max_seconds=config.max_seconds,
        max_nonzeros=config.max_nonzeros,
    )


def _cmd_catalog(args: argparse.Namespace, config: RunConfig, out: TextIO, err: TextIO) -> int:
    catalog = Catalog.load(config.catalog)
    if args.action == "list":
        for line in catalog.list_lines():
            out.write(line + "\n")
        return EXIT_OK
    if not args.id:
        raise InputError("ERR_CLI_USAGE", "catalog export needs an entry id", pointer="id")
    out.write(export_entry(catalog.entry(args.id)))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, config: RunConfig, out: TextIO, err: TextIO) -> int:
    if args.ideal:
        job = _ideal_job(args.ideal, config)
    else:
        profile = Catalog.load(config.catalog).profile(args.example)
        # one field only; the first listed mode unless --field is given
        job = _profile_jobs(profile, config)[0]
    document = run([job], _options(config, err))
    out.write(render_document(document.to_json(), as_json=config.json))
    return document.exit_code


def _cmd_betti(args: argparse.Namespace, config: RunConfig, out: TextIO, err: TextIO) -> int:
    if args.ideal:
        job = _ideal_job(args.ideal, config)
    else:
        job = _profile_jobs(Catalog.load(config.catalog).profile(args.example), config)[0]
    budget = Budget.from_limits(max_seconds=job.max_seconds, max_nonzeros=job.max_nonzeros, label=job.example)
    table, numerator = betti_only(
        job.generators,
        job.nvars,
        job.field,
        q_max=job.q_max,
        budget=budget,
        use_fine_grading=config.fine_grading,
    )
    out.write(
        render_betti_document(
            job.example, field_name(job.field), table, list(numerator.coefficients), as_json=config.json
        )
    )
    return EXIT_OK


def _cmd_subcanonical(args: argparse.Namespace, config: RunConfig, out: TextIO, err: TextIO) -> int:
    rs = build_root_system(args.root_type)
    verdict = subcanonicity_test(rs, parse_weight(args.weight, rs))
    out.write(dumps(verdict.to_json()) if config.json else verdict.to_text() + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: RunConfig, out: TextIO, err: TextIO) -> int:
    catalog = Catalog.load(config.catalog)
    if args.all_entries:
        profiles = catalog.profiles(("core", "stretch"))
    else:
        profiles = [catalog.profile(args.example)]
    jobs = [job for profile in profiles for job in _profile_jobs(profile, config)]
    logger.info("Verifying %d jobs over %d examples", len(jobs), len(profiles))
    document = run(jobs, _options(config, err))
    out.write(render_document(document.to_json(), as_json=config.json))
    return document.exit_code


_COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig, TextIO, TextIO], int]] = {
    "catalog": _cmd_catalog,
    "check": _cmd_check,
    "betti": _cmd_betti,
    "subcanonical": _cmd_subcanonical,
    "verify-theorems": _cmd_verify,
}


def run_command(
    argv: Optional[Sequence[str]] = None,
    *,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Parse ``argv``, run one subcommand and return its exit code (0 pass, 1 fail, 2 error)."""

    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        if exc.code == 0:
            return EXIT_OK
        parser.print_usage(err)
        return EXIT_ERROR
    try:
        config = RunConfig.from_args(args)
        _configure_logging(config.verbosity, err)
        return _COMMANDS[args.command](args, config, out, err)
    except GorfroError as exc:
        err.write(f"ERROR {exc}\n")
        return EXIT_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(argv)


if __name__ == "__main__":
    raise SystemExit(main())
