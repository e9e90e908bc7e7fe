"""Run configuration assembled from command-line flags."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from gorfro.errors import InputError
from gorfro.exactalg.field import Field, parse_field


@dataclass(frozen=True)
class RunConfig:
    """Flags shared by every subcommand; ``field`` is ``None`` when not given."""

    field: Optional[Field] = None
    json: bool = False
    q_max: Optional[int] = None
    max_seconds: Optional[float] = None
    max_nonzeros: Optional[int] = None
    timings: bool = False
    events: Optional[Path] = None
    progress: bool = False
    verbosity: int = 0
    catalog: Optional[Path] = None
    fine_grading: bool = True
    workers: int = 1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        if args.q_max is not None and args.q_max < 0:
            raise InputError("ERR_CLI_USAGE", "--q-max must be non-negative", pointer="--q-max")
        if args.max_seconds is not None and args.max_seconds <= 0:
            raise InputError("ERR_CLI_USAGE", "--max-seconds must be positive", pointer="--max-seconds")
        if args.workers < 1:
            raise InputError("ERR_CLI_USAGE", "--workers must be at least 1", pointer="--workers")
        return cls(
            field=parse_field(args.field) if args.field else None,
            json=args.json,
            q_max=args.q_max,
            max_seconds=args.max_seconds,
            max_nonzeros=args.max_nonzeros,
            timings=args.timings,
            events=Path(args.events) if args.events else None,
            progress=args.progress,
            verbosity=args.verbose,
            catalog=Path(args.catalog) if args.catalog else None,
            fine_grading=not args.no_fine_grading,
            workers=args.workers,
        )

    def field_or_default(self, default: Field) -> Field:
        return self.field if self.field is not None else default
