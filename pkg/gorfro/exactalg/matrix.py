"""Exact sparse matrices over sympy's ``DomainMatrix``: rank, kernel, row reduction.

Matrices are always built in the sparse (dict of rows) format; rational
elimination is left to sympy, which clears denominators before pivoting.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from gorfro.errors import GorfroError, InternalCheckError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import (
    DEFAULT_PRIME,
    GF,
    QQ,
    SECOND_PRIME,
    Field,
    FieldElement,
    FieldError,
    convert,
)

logger = logging.getLogger("gorfro.exactalg")

ExactMatrix = DomainMatrix
SparseVector = Dict[int, FieldElement]
Triplet = Tuple[int, int, object]


def sparse_matrix(rows: int, cols: int, field: Field, entries: Mapping[int, Mapping[int, object]]) -> DomainMatrix:
    """Matrix from ``{row: {col: value}}``; values are converted and zeros dropped."""

    clean: Dict[int, Dict[int, FieldElement]] = {}
    for r, row in entries.items():
        kept = {}
        for c, value in row.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise GorfroError("ERR_MATRIX_INDEX", f"Entry ({r}, {c}) outside a {rows}x{cols} matrix")
            element = field.convert(value)
            if element:
                kept[c] = element
        if kept:
            clean[r] = kept
    return DomainMatrix(clean, (rows, cols), field)


def from_triplets(rows: int, cols: int, field: Field, triplets: Iterable[Triplet]) -> DomainMatrix:
    acc: Dict[int, Dict[int, FieldElement]] = {}
    for r, c, value in triplets:
        row = acc.setdefault(r, {})
        row[c] = row.get(c, field.zero) + field.convert(value)
    return sparse_matrix(rows, cols, field, acc)


def from_dense(field: Field, dense: Sequence[Sequence[object]], cols: Optional[int] = None) -> DomainMatrix:
    ncols = cols if cols is not None else (len(dense[0]) if dense else 0)
    return sparse_matrix(len(dense), ncols, field, {r: dict(enumerate(row)) for r, row in enumerate(dense)})


def from_row_vectors(rows: int, cols: int, field: Field, vectors: Sequence[Mapping[int, object]]) -> DomainMatrix:
    return sparse_matrix(rows, cols, field, dict(enumerate(vectors)))


def from_column_vectors(rows: int, cols: int, field: Field, vectors: Sequence[Mapping[int, object]]) -> DomainMatrix:
    entries: Dict[int, Dict[int, object]] = {}
    for c, vec in enumerate(vectors):
        for r, value in vec.items():
            entries.setdefault(r, {})[c] = value
    return sparse_matrix(rows, cols, field, entries)


def identity(size: int, field: Field) -> DomainMatrix:
    return sparse_matrix(size, size, field, {i: {i: 1} for i in range(size)})


def row_vectors(M: DomainMatrix) -> List[SparseVector]:
    dod = M.to_dod()
    return [dict(dod.get(r, {})) for r in range(M.shape[0])]


def column_vectors(M: DomainMatrix) -> List[SparseVector]:
    vectors: List[SparseVector] = [{} for _ in range(M.shape[1])]
    for r, row in M.to_dod().items():
        for c, value in row.items():
            vectors[c][r] = value
    return vectors


def nonzeros(M: DomainMatrix) -> int:
    return sum(len(row) for row in M.to_dod().values())


def apply(M: DomainMatrix, vector: Mapping[int, FieldElement]) -> SparseVector:
    """Return ``M @ vector`` for a sparse column vector."""

    zero = M.domain.zero
    out: SparseVector = {}
    for r, row in M.to_dod().items():
        total = zero
        for c, value in row.items():
            x = vector.get(c)
            if x:
                total = total + value * x
        if total:
            out[r] = total
    return out


def change_field(M: DomainMatrix, field: Field) -> DomainMatrix:
    source = M.domain
    if field == source:
        return M
    entries = {r: {c: convert(v, source, field) for c, v in row.items()} for r, row in M.to_dod().items()}
    rows, cols = M.shape
    return sparse_matrix(rows, cols, field, entries)


class Echelon:
    """Reduced row echelon form of the span of some sparse vectors.

    ``pivots`` maps each pivot column to its row; a row has coefficient one at
    its pivot and zero at every other pivot column.
    """

    def __init__(self, field: Field, ncols: int, pivots: Dict[int, SparseVector]) -> None:
        self.field = field
        self.ncols = ncols
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_columns(self) -> List[int]:
        return sorted(self.pivots)

    def rows(self) -> List[SparseVector]:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def reduce(self, vector: Mapping[int, FieldElement]) -> SparseVector:
        """Subtract the unique combination of rows that clears every pivot column."""

        zero = self.field.zero
        out = dict(vector)
        for col in [c for c in vector if c in self.pivots]:
            factor = out.get(col)
            if not factor:
                continue
            for k, v in self.pivots[col].items():
                value = out.get(k, zero) - factor * v
                if value:
                    out[k] = value
                else:
                    out.pop(k, None)
        return out

    def contains(self, vector: Mapping[int, FieldElement]) -> bool:
        return not self.reduce(vector)


def echelonize(
    vectors: Iterable[Mapping[int, FieldElement]],
    ncols: int,
    field: Field,
    *,
    budget: Optional[Budget] = None,
) -> Echelon:
    """Reduced echelon basis of the span of ``vectors`` (rows with ``ncols`` columns)."""

    budget = budget or Budget.unlimited()
    nonzero = [vec for vec in vectors if any(vec.values())]
    if not nonzero:
        return Echelon(field, ncols, {})
    matrix = from_row_vectors(len(nonzero), ncols, field, nonzero)
    budget.check(nonzeros(matrix))
    reduced, pivot_columns = matrix.rref()
    budget.check()
    dod = reduced.to_dod()
    return Echelon(field, ncols, {col: dict(dod.get(i, {})) for i, col in enumerate(pivot_columns)})


def image_echelon(M: DomainMatrix, *, budget: Optional[Budget] = None) -> Echelon:
    """Reduced echelon basis of the column space of ``M`` (vectors of length ``rows``)."""

    return echelonize(column_vectors(M), M.shape[0], M.domain, budget=budget)


def rank(M: DomainMatrix, *, budget: Optional[Budget] = None) -> int:
    budget = budget or Budget.unlimited()
    count = nonzeros(M)
    budget.check(count)
    if not count:
        return 0
    result = int(M.rank())
    budget.check()
    return result


def sparse_kernel(M: DomainMatrix, *, budget: Optional[Budget] = None) -> Tuple[int, List[SparseVector]]:
    """Rank and a kernel basis of sparse column vectors, one per free column."""

    budget = budget or Budget.unlimited()
    rows, cols = M.shape
    r = rank(M, budget=budget)
    if not r:
        kernel: List[SparseVector] = [{i: M.domain.one} for i in range(cols)]
    elif r == cols:
        kernel = []
    else:
        kernel = [vec for vec in row_vectors(M.nullspace()) if vec]
        budget.check()
    if r + len(kernel) != cols:
        raise InternalCheckError(
            "ERR_RANK_NULLITY",
            f"rank {r} + nullity {len(kernel)} != {cols} columns",
        )
    return r, kernel


def rank_and_kernel(M: DomainMatrix, *, budget: Optional[Budget] = None) -> Tuple[int, List[Tuple[FieldElement, ...]]]:
    """Rank and an echelonized kernel basis, as dense column vectors."""

    r, kernel = sparse_kernel(M, budget=budget)
    zero = M.domain.zero
    dense = [tuple(vec.get(c, zero) for c in range(M.shape[1])) for vec in kernel]
    return r, dense


def is_invertible(M: DomainMatrix, *, budget: Optional[Budget] = None) -> bool:
    rows, cols = M.shape
    return rows == cols and rank(M, budget=budget) == rows


@dataclass(frozen=True)
class RankCrosscheck:
    """Rank over Q next to the ranks modulo two primes."""

    rank_q: int
    rank_p: int
    rank_p2: int
    primes: Tuple[int, int]

    @property
    def unlucky_prime(self) -> bool:
        return self.rank_p != self.rank_q

    @property
    def agree(self) -> bool:
        return self.rank_q == self.rank_p == self.rank_p2


def rank_crosscheck(
    M: DomainMatrix,
    primes: Tuple[int, int] = (DEFAULT_PRIME, SECOND_PRIME),
    *,
    budget: Optional[Budget] = None,
) -> RankCrosscheck:
    """Compare the authoritative rank over Q with the ranks modulo two primes.

    A prime dividing a denominator counts as unlucky: the rank modulo it is
    reported as ``-1``.
    """

    rational = change_field(M, QQ)
    rank_q = rank(rational, budget=budget)
    mod_ranks = []
    for p in primes:
        try:
            mod_ranks.append(rank(change_field(rational, GF(p)), budget=budget))
        except FieldError:
            mod_ranks.append(-1)
    result = RankCrosscheck(rank_q=rank_q, rank_p=mod_ranks[0], rank_p2=mod_ranks[1], primes=primes)
    if result.unlucky_prime:
        logger.warning("Unlucky prime %d: rank %d over Q but %d modulo p", primes[0], rank_q, result.rank_p)
    return result
