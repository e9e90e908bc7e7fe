"""Report documents: one record per (example, field mode), validated against a JSON schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from jsonschema import Draft202012Validator

from gorfro.catalog.families import NOT_APPLICABLE, ClassicalSubcanonicity
from gorfro.diagnostics.harness import FAIL, TheoremCheck
from gorfro.diagnostics.pipeline import ExampleResult
from gorfro.errors import GorfroError, InternalCheckError

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schemas" / "report.json"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


@lru_cache(maxsize=1)
def _validator() -> Draft202012Validator:
    with SCHEMA_PATH.open("r", encoding="utf-8") as handle:
        return Draft202012Validator(json.load(handle))


def build_report(
    result: ExampleResult,
    theorems: Mapping[str, TheoremCheck],
    *,
    subcanonical: ClassicalSubcanonicity = NOT_APPLICABLE,
    unlucky_prime: Optional[bool] = None,
    notes: Sequence[str] = (),
    timings: bool = False,
) -> Dict[str, Any]:
    v = result.verdict
    bt = result.betti
    return {
        "example": result.example,
        "field_mode": result.field_mode,
        "n": result.nvars,
        "dim": result.dim,
        "codim": v.codim,
        "pd": v.pd,
        "type": v.type,
        "regularity": bt.regularity,
        "socle_degree": bt.socle_degree,
        "a_invariant": result.a_invariant,
        "betti": [list(t) for t in bt.entries],
        "betti_totals": bt.totals(),
        "hilbert_numerator": list(result.numerator.coefficients),
        "h_vector": list(result.h_vector),
        "cohen_macaulay": v.cohen_macaulay,
        "gorenstein": v.gorenstein,
        "frobenius": v.frobenius,
        "betti_symmetric": result.betti_symmetric,
        "numerator_palindromic": result.numerator_palindromic,
        "unlucky_prime": unlucky_prime,
        "subcanonical": subcanonical.to_json(),
        "theorems": {name: check.to_json() for name, check in sorted(theorems.items())},
        "witnesses": [w.to_json() for w in v.witnesses + result.symmetry_witnesses],
        "notes": list(notes),
        "runtime_ms": round(result.runtime_ms, 3) if timings else None,
    }


def error_record(example: str, field_mode: str, error: GorfroError) -> Dict[str, Any]:
    return {
        "example": example,
        "field_mode": field_mode,
        "code": error.code,
        "message": error.message,
        "pointer": error.pointer,
    }


@dataclass
class RunDocument:
    """All reports and errors of one command, kept sorted by (example, field mode)."""

    reports: List[Dict[str, Any]] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)
    field_mismatches: List[str] = field(default_factory=list)

    def failed(self) -> List[str]:
        out = []
        for report in self.reports:
            for name, check in report["theorems"].items():
                if check["status"] == FAIL:
                    out.append(f"{report['example']}[{report['field_mode']}]:{name}")
        return out

    @property
    def status(self) -> str:
        if self.errors:
            return "error"
        if self.failed() or self.field_mismatches:
            return "fail"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_OK, "fail": EXIT_FAILED, "error": EXIT_ERROR}[self.status]

    def to_json(self) -> Dict[str, Any]:
        key = lambda r: (r["example"], r["field_mode"])  # noqa: E731
        document = {
            "status": self.status,
            "reports": sorted(self.reports, key=key),
            "errors": sorted(self.errors, key=key),
            "summary": {
                "reports": len(self.reports),
                "failed": self.failed(),
                "errors": len(self.errors),
                "field_mismatches": sorted(self.field_mismatches),
            },
        }
        validate_document(document)
        return document


def validate_document(document: Mapping[str, Any]) -> None:
    errors = sorted(_validator().iter_errors(document), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        error = errors[0]
        pointer = "/" + "/".join(str(p) for p in error.absolute_path)
        raise InternalCheckError("ERR_REPORT_SCHEMA", error.message, pointer=pointer)


def dumps(document: Mapping[str, Any]) -> str:
    """Byte-stable JSON rendering."""

    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
