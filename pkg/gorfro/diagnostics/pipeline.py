"""One example, one field mode: Groebner basis through verdicts."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from gorfro.diagnostics.verdict import Verdict, Witness, betti_symmetry, decide, numerator_palindromic
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import Field, field_name
from gorfro.exactalg.polynomial import Polynomial, change_field
from gorfro.groebner.buchberger import GroebnerBasis, buchberger
from gorfro.groebner.order import MonomialOrder
from gorfro.groebner.quotient import HilbertNumerator, QuotientAlgebra, h_vector, hilbert_numerator, krull_dim
from gorfro.koszul.betti import BettiTable, betti_table
from gorfro.koszul.homology import HomologyBasis, homology_basis

logger = logging.getLogger("gorfro.diagnostics")

Emit = Callable[..., None]


def _discard(event: str, **payload: object) -> None:
    return None


@dataclass
class ExampleResult:
    """Everything computed for one ideal in one field mode."""

    example: str
    field_mode: str
    nvars: int
    gb: GroebnerBasis
    numerator: HilbertNumerator
    dim: int
    homology: HomologyBasis
    betti: BettiTable
    verdict: Verdict
    h_vector: Tuple[int, ...]
    betti_symmetric: bool
    numerator_palindromic: bool
    symmetry_witnesses: Tuple[Witness, ...]
    runtime_ms: float

    @property
    def a_invariant(self) -> int:
        """sigma - n: the degree shift of the canonical module when A is Gorenstein."""

        return self.betti.socle_degree - self.nvars


def run_pipeline(
    generators: Sequence[Polynomial],
    nvars: int,
    field: Field,
    *,
    example: str = "ideal",
    q_max: Optional[int] = None,
    budget: Optional[Budget] = None,
    use_fine_grading: bool = True,
    workers: int = 1,
    emit: Optional[Emit] = None,
) -> ExampleResult:
    """Groebner basis, Hilbert numerator, Koszul homology, Betti table and verdicts."""

    emit = emit or _discard
    budget = budget or Budget.unlimited()
    started = time.perf_counter()
    emit("example.start", n=nvars, generators=len(generators))
    gens = [change_field(g, field) for g in generators]
    gb = buchberger(gens, MonomialOrder.grevlex(nvars), nvars=nvars, field=field, budget=budget)
    emit("groebner.done", size=len(gb))
    algebra = QuotientAlgebra(gb)
    numerator = hilbert_numerator(gb, q_max, algebra=algebra, budget=budget)
    dim = krull_dim(numerator, nvars)
    hb = homology_basis(
        gb,
        q_max,
        budget=budget,
        use_fine_grading=use_fine_grading,
        numerator=numerator,
        algebra=algebra,
        workers=workers,
        emit=emit,
    )
    bt = betti_table(hb)
    verdict = decide(hb, bt, dim)
    symmetric, sym_witnesses = betti_symmetry(bt)
    palindromic, pal_witnesses = numerator_palindromic(numerator)
    emit("diagnostics.verdict", gorenstein=verdict.gorenstein, frobenius=verdict.frobenius)
    elapsed = (time.perf_counter() - started) * 1000.0
    logger.info(
        "%s [%s]: pd=%d dim=%d type=%d gorenstein=%s frobenius=%s",
        example,
        field_name(field),
        verdict.pd,
        dim,
        verdict.type,
        verdict.gorenstein,
        verdict.frobenius,
    )
    return ExampleResult(
        example=example,
        field_mode=field_name(field),
        nvars=nvars,
        gb=gb,
        numerator=numerator,
        dim=dim,
        homology=hb,
        betti=bt,
        verdict=verdict,
        h_vector=h_vector(numerator, dim),
        betti_symmetric=symmetric,
        numerator_palindromic=palindromic,
        symmetry_witnesses=tuple(sym_witnesses + pal_witnesses),
        runtime_ms=elapsed,
    )


def betti_only(
    generators: Sequence[Polynomial],
    nvars: int,
    field: Field,
    *,
    q_max: Optional[int] = None,
    budget: Optional[Budget] = None,
    use_fine_grading: bool = True,
) -> Tuple[BettiTable, HilbertNumerator]:
    """Betti table and Hilbert numerator without the product structure."""

    budget = budget or Budget.unlimited()
    gens = [change_field(g, field) for g in generators]
    gb = buchberger(gens, MonomialOrder.grevlex(nvars), nvars=nvars, field=field, budget=budget)
    algebra = QuotientAlgebra(gb)
    numerator = hilbert_numerator(gb, q_max, algebra=algebra, budget=budget)
    hb = homology_basis(
        gb, q_max, budget=budget, use_fine_grading=use_fine_grading, numerator=numerator, algebra=algebra
    )
    return betti_table(hb), numerator
