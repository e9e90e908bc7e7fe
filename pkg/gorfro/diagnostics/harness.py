"""Theorem checks over computed examples.

Each check returns ``pass``, ``fail`` or ``skip`` with a one-line detail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from gorfro.catalog.families import CatalogEntry, ClassicalSubcanonicity
from gorfro.diagnostics.pipeline import ExampleResult
from gorfro.rootsys.roots import WeightVector, build_root_system
from gorfro.rootsys.subcanonical import SubcanonicityVerdict, subcanonicity_test

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    status: str
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self) -> Dict[str, str]:
        return {"status": self.status, "detail": self.detail}


def verify_avramov_golod(result: ExampleResult) -> TheoremCheck:
    """H(A) is Frobenius exactly when A is Gorenstein."""

    v = result.verdict
    status = PASS if v.gorenstein == v.frobenius else FAIL
    return TheoremCheck(
        "avramov_golod",
        status,
        f"gorenstein={str(v.gorenstein).lower()} frobenius={str(v.frobenius).lower()}",
    )


def verify_theorem1(result: ExampleResult, subcanonical: ClassicalSubcanonicity) -> TheoremCheck:
    """Subcanonical embeddings have Gorenstein coordinate rings with Frobenius H(A).

    Also checks the canonical degree shift: sigma - n = -N.
    """

    if not subcanonical.applies or not subcanonical.holds:
        return TheoremCheck("theorem1", SKIP, "not subcanonical; nothing asserted")
    v = result.verdict
    problems = []
    if not v.gorenstein:
        problems.append("not Gorenstein")
    if not v.frobenius:
        problems.append("H(A) not Frobenius")
    if v.gorenstein and subcanonical.N is not None and result.a_invariant != -subcanonical.N:
        problems.append(f"a-invariant {result.a_invariant} != -{subcanonical.N}")
    if problems:
        return TheoremCheck("theorem1", FAIL, f"N={subcanonical.N}: " + ", ".join(problems))
    return TheoremCheck("theorem1", PASS, f"N={subcanonical.N}, a-invariant {result.a_invariant}")


def root_verdict(entry: CatalogEntry) -> Optional[SubcanonicityVerdict]:
    if entry.root_data is None:
        return None
    rs = build_root_system(entry.root_data.type)
    return subcanonicity_test(rs, WeightVector(entry.root_data.weight))


def verify_theorem2(result: ExampleResult, entry: Optional[CatalogEntry]) -> TheoremCheck:
    """Flag varieties: root-theoretic subcanonicity == classical formula == Gorenstein."""

    if entry is None or entry.root_data is None:
        return TheoremCheck("theorem2", SKIP, "no root data")
    roots = root_verdict(entry)
    assert roots is not None
    classical = entry.subcanonical
    gorenstein = result.verdict.gorenstein
    agree = roots.holds == bool(classical.holds) == gorenstein
    if agree and roots.holds and roots.N != classical.N:
        agree = False
    detail = (
        f"roots={str(roots.holds).lower()}(N={roots.N}, kappa={roots.kappa.to_text()}) "
        f"classical={str(classical.holds).lower()}(N={classical.N}) "
        f"gorenstein={str(gorenstein).lower()}"
    )
    return TheoremCheck("theorem2", PASS if agree else FAIL, detail)


def verify_all(result: ExampleResult, entry: Optional[CatalogEntry]) -> Dict[str, TheoremCheck]:
    subcanonical = entry.subcanonical if entry is not None else ClassicalSubcanonicity(applies=False)
    checks = (
        verify_avramov_golod(result),
        verify_theorem1(result, subcanonical),
        verify_theorem2(result, entry),
    )
    return {check.name: check for check in checks}
