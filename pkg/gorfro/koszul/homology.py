"""Koszul homology H_{p,q} = Tor^S_p(A, k)_q with explicit cycle representatives."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from gorfro.errors import InternalCheckError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import Field, FieldElement
from gorfro.exactalg.matrix import Echelon, SparseVector, echelonize, image_echelon, rank, sparse_kernel
from gorfro.groebner.buchberger import GroebnerBasis
from gorfro.groebner.grading import FineGrading, WeightKey, fine_grading
from gorfro.groebner.quotient import HilbertNumerator, QuotientAlgebra, hilbert_numerator
from gorfro.koszul.complex import KoszulComplex

logger = logging.getLogger("gorfro.koszul")

Emit = Callable[..., None]


@dataclass
class _BlockHomology:
    """Homology of one weight block: boundary echelon plus reduced representatives."""

    key: WeightKey
    indices: Tuple[int, ...]
    boundaries: Echelon
    representatives: Echelon
    offset: int


@dataclass
class HomologyCell:
    """H_{p,q} together with the ranks it was computed from.

    ``representatives`` are cycles in K_{p,q} (global cell indices); they are
    linearly independent modulo boundaries and span homology.
    """

    p: int
    q: int
    chain_dim: int
    rank_out: int
    rank_in: int
    representatives: Tuple[SparseVector, ...] = ()
    _blocks: Dict[WeightKey, _BlockHomology] = dc_field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.chain_dim - self.rank_out - self.rank_in

    def coordinates(self, cycle: Mapping[int, FieldElement], kc: KoszulComplex) -> Tuple[FieldElement, ...]:
        """Coordinates of the class of ``cycle`` in the representative basis."""

        zero = kc.field.zero
        coords: List[FieldElement] = [zero] * self.dim
        if not self.dim or not cycle:
            return tuple(coords)
        weights = kc.weight_keys(self.p, self.q)
        parts: Dict[WeightKey, Dict[int, FieldElement]] = {}
        for idx, value in cycle.items():
            parts.setdefault(weights[idx], {})[idx] = value
        for key, part in parts.items():
            block = self._blocks.get(key)
            if block is None:
                # blocks with zero homology only contain boundaries
                continue
            local = {i: n for n, i in enumerate(block.indices)}
            residue = block.boundaries.reduce({local[i]: v for i, v in part.items()})
            reps = block.representatives
            for n, pcol in enumerate(reps.pivot_columns):
                factor = residue.get(pcol)
                if not factor:
                    continue
                coords[block.offset + n] = factor
                for k, v in reps.pivots[pcol].items():
                    value = residue.get(k, zero) - factor * v
                    if value:
                        residue[k] = value
                    else:
                        residue.pop(k, None)
            if residue:
                raise InternalCheckError(
                    "ERR_NOT_A_CYCLE",
                    f"Chain in K_{{{self.p},{self.q}}} is not a cycle",
                    pointer=f"cell=({self.p},{self.q})",
                )
        return tuple(coords)


class HomologyBasis:
    """Cells of Tor^S(A, k) computed through degree ``q_max``.

    Cells above ``q_max`` are filled in on demand by :meth:`cell`.
    """

    def __init__(
        self,
        complex_: KoszulComplex,
        numerator: HilbertNumerator,
        *,
        budget: Optional[Budget] = None,
    ) -> None:
        self.complex = complex_
        self.algebra = complex_.algebra
        self.numerator = numerator
        self.budget = budget or Budget.unlimited()
        self.cells: Dict[Tuple[int, int], HomologyCell] = {}
        self.q_max = -1

    @property
    def field(self) -> Field:
        return self.complex.field

    @property
    def nvars(self) -> int:
        return self.complex.n

    def cell(self, p: int, q: int) -> HomologyCell:
        key = (p, q)
        if key not in self.cells:
            if not (0 <= p <= self.nvars) or q < p:
                return HomologyCell(p, q, 0, 0, 0)
            self.cells[key] = compute_cell(self.complex, p, q, self.budget)
        return self.cells[key]

    def dim(self, p: int, q: int) -> int:
        return self.cell(p, q).dim

    def nonzero_cells(self) -> Iterator[HomologyCell]:
        for key in sorted(self.cells):
            cell = self.cells[key]
            if cell.dim:
                yield cell

    def representatives(self, p: int, q: int) -> Tuple[SparseVector, ...]:
        return self.cell(p, q).representatives


def compute_cell(kc: KoszulComplex, p: int, q: int, budget: Budget) -> HomologyCell:
    """Ranks of d_{p,q} and d_{p+1,q} block by block, representatives where homology lives."""

    field = kc.field
    blocks = kc.blocks(p, q)
    chain_dim = kc.cell(p, q).size
    rank_out = rank_in = 0
    homology_blocks: Dict[WeightKey, _BlockHomology] = {}
    representatives: List[SparseVector] = []
    for key, block in blocks.items():
        budget.check()
        size = len(block.indices)
        out_matrix = kc.block_differential(p, q, key, budget) if p >= 1 else None
        in_matrix = kc.block_differential(p + 1, q, key, budget) if p + 1 <= kc.n else None
        r_out = rank(out_matrix, budget=budget) if out_matrix is not None else 0
        r_in = rank(in_matrix, budget=budget) if in_matrix is not None else 0
        rank_out += r_out
        rank_in += r_in
        beta = size - r_out - r_in
        if beta < 0:
            raise InternalCheckError(
                "ERR_DD_NONZERO",
                f"Negative homology dimension in block {key} of K_{{{p},{q}}}",
                pointer=f"cell=({p},{q})",
            )
        if not beta:
            continue
        if out_matrix is not None:
            cycles = sparse_kernel(out_matrix, budget=budget)[1]
        else:
            cycles = [{i: field.one} for i in range(size)]
        if in_matrix is not None:
            boundaries = image_echelon(in_matrix, budget=budget)
        else:
            boundaries = echelonize([], size, field)
        residues = [boundaries.reduce(z) for z in cycles]
        reps = echelonize([r for r in residues if r], size, field, budget=budget)
        if reps.rank != beta:
            raise InternalCheckError(
                "ERR_HOMOLOGY_RANK",
                f"Found {reps.rank} representatives in block {key} of K_{{{p},{q}}}, expected {beta}",
                pointer=f"cell=({p},{q})",
            )
        homology_blocks[key] = _BlockHomology(key, block.indices, boundaries, reps, len(representatives))
        for row in reps.rows():
            representatives.append({block.indices[i]: v for i, v in sorted(row.items())})
    return HomologyCell(
        p=p,
        q=q,
        chain_dim=chain_dim,
        rank_out=rank_out,
        rank_in=rank_in,
        representatives=tuple(representatives),
        _blocks=homology_blocks,
    )


def homology_basis(
    gb: GroebnerBasis,
    q_max: Optional[int] = None,
    *,
    budget: Optional[Budget] = None,
    grading: Optional[FineGrading] = None,
    use_fine_grading: bool = True,
    numerator: Optional[HilbertNumerator] = None,
    algebra: Optional[QuotientAlgebra] = None,
    workers: int = 1,
    emit: Optional[Emit] = None,
) -> HomologyBasis:
    """Compute every H_{p,q} for 0 <= p <= n and q in the stable range.

    Without ``q_max`` the range runs through deg N(t) + 2 (at least 2) and
    keeps growing while either of the two highest rows q - p reached so far
    has a nonzero entry.
    An explicit ``q_max`` is a hard cap.
    """

    budget = budget or Budget.unlimited()
    algebra = algebra or QuotientAlgebra(gb)
    if numerator is None:
        numerator = hilbert_numerator(gb, algebra=algebra, budget=budget)
    if grading is None:
        grading = fine_grading(gb.generators, gb.nvars) if use_fine_grading else FineGrading.standard(gb.nvars)
    kc = KoszulComplex(algebra, grading)
    hb = HomologyBasis(kc, numerator, budget=budget)

    def run_degree(q: int) -> Tuple[int, List[HomologyCell]]:
        return q, [compute_cell(kc, p, q, budget) for p in range(0, min(q, kc.n) + 1)]

    def record(q: int, cells: List[HomologyCell]) -> None:
        for cell in cells:
            hb.cells[(cell.p, cell.q)] = cell
        hb.q_max = max(hb.q_max, q)
        nonzero = {cell.p: cell.dim for cell in cells if cell.dim}
        logger.debug("Koszul degree %d: betti %s", q, nonzero)
        if emit is not None:
            emit("koszul.degree", q=q, betti={str(p): b for p, b in nonzero.items()})

    target = q_max if q_max is not None else max(numerator.degree + 2, 2)
    degrees = list(range(0, target + 1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for q, cells in pool.map(run_degree, degrees):
                record(q, cells)
    else:
        for q in degrees:
            record(*run_degree(q))
    if q_max is None:
        while top_rows_have_homology(hb):
            target += 1
            record(*run_degree(target))
    logger.info(
        "Koszul homology through degree %d: %d nonzero cells",
        hb.q_max,
        sum(1 for _ in hb.nonzero_cells()),
    )
    return hb


def top_rows_have_homology(hb: HomologyBasis) -> bool:
    """True when a computed cell in row ``q_max`` or ``q_max - 1`` (row = q - p) is nonzero."""

    rows = (hb.q_max, hb.q_max - 1)
    return any(cell.dim for (p, q), cell in hb.cells.items() if q - p in rows)
