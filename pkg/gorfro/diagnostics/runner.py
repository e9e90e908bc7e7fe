"""Runs many (example, field mode) jobs in parallel and merges their reports."""

from __future__ import annotations

import asyncio
import logging
import uuid
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gorfro.catalog.families import NOT_APPLICABLE, CatalogEntry
from gorfro.diagnostics.harness import verify_all
from gorfro.diagnostics.pipeline import ExampleResult, run_pipeline
from gorfro.diagnostics.report import RunDocument, build_report, error_record
from gorfro.errors import GorfroError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import GF, SECOND_PRIME, Field, field_name
from gorfro.exactalg.polynomial import Polynomial
from gorfro.telemetry.event_bus import EventBus, NullEventBus

logger = logging.getLogger("gorfro.diagnostics")

IDEAL_NOTE = "verdicts concern S/I as given; projective normality is not verified"


@dataclass(frozen=True)
class Job:
    """One ideal to analyse in one field."""

    example: str
    field: Field
    nvars: int
    generators: Tuple[Polynomial, ...]
    entry: Optional[CatalogEntry] = None
    q_max: Optional[int] = None
    max_seconds: Optional[float] = None
    max_nonzeros: Optional[int] = None

    @classmethod
    def for_entry(cls, entry: CatalogEntry, field: Field, **limits: Any) -> "Job":
        return cls(entry.id, field, entry.nvars, entry.generators, entry, **limits)


@dataclass
class RunOptions:
    workers: int = 1
    use_fine_grading: bool = True
    timings: bool = False
    bus: EventBus = field(default_factory=NullEventBus)
    run_id: str = field(default_factory=lambda: uuid.uuid4().hex)


@dataclass
class _Outcome:
    job: Job
    result: Optional[ExampleResult] = None
    error: Optional[GorfroError] = None


def _execute(job: Job, options: RunOptions) -> _Outcome:
    emit = options.bus.bind(run_id=options.run_id, example=job.example, field_mode=field_name(job.field))
    budget = Budget.from_limits(max_seconds=job.max_seconds, max_nonzeros=job.max_nonzeros, label=job.example)
    try:
        result = run_pipeline(
            job.generators,
            job.nvars,
            job.field,
            example=job.example,
            q_max=job.q_max,
            budget=budget,
            use_fine_grading=options.use_fine_grading,
            emit=emit,
        )
    except GorfroError as exc:
        logger.warning("%s [%s] failed: %s", job.example, field_name(job.field), exc)
        emit("example.error", code=exc.code, message=exc.message)
        return _Outcome(job, error=exc)
    emit("example.finish", gorenstein=result.verdict.gorenstein, frobenius=result.verdict.frobenius)
    return _Outcome(job, result=result)


async def run_jobs(jobs: Sequence[Job], options: Optional[RunOptions] = None) -> RunDocument:
    """Run every job (at most ``workers`` at a time) and assemble the sorted document."""

    options = options or RunOptions()
    semaphore = asyncio.Semaphore(max(1, options.workers))

    async def run_one(job: Job) -> _Outcome:
        async with semaphore:
            return await asyncio.to_thread(_execute, job, options)

    outcomes = list(await asyncio.gather(*(run_one(job) for job in jobs)))
    unlucky = await _crosscheck_fields(outcomes, options, run_one)
    return _assemble(outcomes, unlucky, options)


def run(jobs: Sequence[Job], options: Optional[RunOptions] = None) -> RunDocument:
    return asyncio.run(run_jobs(jobs, options))


async def _crosscheck_fields(
    outcomes: List[_Outcome],
    options: RunOptions,
    run_one: Any,
) -> Dict[Tuple[str, str], Optional[bool]]:
    """Compare Betti tables across field modes of one example.

    A prime whose table differs from the rational one is re-tried with a
    second prime; agreement there marks the first prime unlucky.
    """

    by_example: Dict[str, Dict[str, _Outcome]] = {}
    for outcome in outcomes:
        if outcome.result is not None:
            by_example.setdefault(outcome.job.example, {})[field_name(outcome.job.field)] = outcome
    unlucky: Dict[Tuple[str, str], Optional[bool]] = {}
    for example, modes in sorted(by_example.items()):
        rational = modes.get("q")
        if rational is None or rational.result is None:
            continue
        for mode, outcome in sorted(modes.items()):
            if mode == "q" or outcome.result is None:
                continue
            if outcome.result.betti == rational.result.betti:
                unlucky[(example, mode)] = False
                continue
            logger.warning("%s: Betti tables over Q and %s differ; retrying with p=%d", example, mode, SECOND_PRIME)
            retry = await run_one(replace(outcome.job, field=GF(SECOND_PRIME)))
            if retry.result is not None and retry.result.betti == rational.result.betti:
                unlucky[(example, mode)] = True
            else:
                unlucky[(example, mode)] = None
    return unlucky


def _assemble(
    outcomes: List[_Outcome],
    unlucky: Dict[Tuple[str, str], Optional[bool]],
    options: RunOptions,
) -> RunDocument:
    document = RunDocument()
    for outcome in outcomes:
        job = outcome.job
        if outcome.error is not None:
            document.errors.append(error_record(job.example, field_name(job.field), outcome.error))
            continue
        result = outcome.result
        assert result is not None
        key = (job.example, field_name(job.field))
        notes = []
        flag = unlucky.get(key)
        if key in unlucky and flag is None:
            document.field_mismatches.append(f"{job.example}[{field_name(job.field)}]")
            notes.append("Betti table differs from the rational one for two primes")
        elif flag:
            notes.append(f"unlucky prime: Betti table over {field_name(job.field)} differs from Q; p={SECOND_PRIME} agrees")
        if job.entry is None:
            notes.append(IDEAL_NOTE)
        subcanonical = job.entry.subcanonical if job.entry is not None else NOT_APPLICABLE
        document.reports.append(
            build_report(
                result,
                verify_all(result, job.entry),
                subcanonical=subcanonical,
                unlucky_prime=flag if key in unlucky else None,
                notes=notes,
                timings=options.timings,
            )
        )
    return document
