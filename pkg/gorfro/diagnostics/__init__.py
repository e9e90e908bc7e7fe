"""Ring-theoretic verdicts, theorem checks, reports and the parallel runner."""

from gorfro.diagnostics.harness import (
    FAIL,
    PASS,
    SKIP,
    TheoremCheck,
    root_verdict,
    verify_all,
    verify_avramov_golod,
    verify_theorem1,
    verify_theorem2,
)
from gorfro.diagnostics.pipeline import ExampleResult, betti_only, run_pipeline
from gorfro.diagnostics.report import (
    EXIT_ERROR,
    EXIT_FAILED,
    EXIT_OK,
    RunDocument,
    build_report,
    dumps,
    error_record,
    validate_document,
)
from gorfro.diagnostics.runner import IDEAL_NOTE, Job, RunOptions, run, run_jobs
from gorfro.diagnostics.verdict import (
    Verdict,
    Witness,
    betti_symmetry,
    decide,
    is_cohen_macaulay,
    is_frobenius,
    is_gorenstein,
    numerator_palindromic,
)

__all__ = [
    "EXIT_ERROR",
    "EXIT_FAILED",
    "EXIT_OK",
    "FAIL",
    "IDEAL_NOTE",
    "PASS",
    "SKIP",
    "ExampleResult",
    "Job",
    "RunDocument",
    "RunOptions",
    "TheoremCheck",
    "Verdict",
    "Witness",
    "betti_symmetry",
    "betti_only",
    "build_report",
    "decide",
    "dumps",
    "error_record",
    "is_cohen_macaulay",
    "is_frobenius",
    "is_gorenstein",
    "numerator_palindromic",
    "root_verdict",
    "run",
    "run_jobs",
    "run_pipeline",
    "validate_document",
    "verify_all",
    "verify_avramov_golod",
    "verify_theorem1",
    "verify_theorem2",
]
