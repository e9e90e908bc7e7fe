"""The Koszul complex A (x) Lambda(e_0..e_{n-1}) with d(e_i) = x_i."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gorfro.errors import InternalCheckError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import Field
from gorfro.exactalg.matrix import ExactMatrix, SparseVector, from_column_vectors, nonzeros, sparse_matrix
from gorfro.exactalg.polynomial import Monomial, times_variable
from gorfro.groebner.buchberger import GroebnerBasis
from gorfro.groebner.grading import FineGrading, WeightKey
from gorfro.groebner.quotient import QuotientAlgebra

Subset = Tuple[int, ...]


@dataclass(frozen=True)
class KoszulCell:
    """Basis of K_{p,q} = Lambda^p (x) A_{q-p}.

    Basis element ``s * len(monomials) + m`` is ``e_{subsets[s]} (x) monomials[m]``.
    """

    p: int
    q: int
    subsets: Tuple[Subset, ...]
    monomials: Tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.subsets) * len(self.monomials)

    def element(self, index: int) -> Tuple[Subset, Monomial]:
        s, m = divmod(index, len(self.monomials))
        return self.subsets[s], self.monomials[m]


@dataclass(frozen=True)
class Block:
    """Indices of one weight block in a cell, in increasing order."""

    key: WeightKey
    indices: Tuple[int, ...]

    @property
    def local(self) -> Dict[int, int]:
        return {g: i for i, g in enumerate(self.indices)}


def wedge_sign(subset: Sequence[int], other: Sequence[int]) -> int:
    """Sign of e_S ^ e_T against e_{S u T} (zero when they overlap)."""

    if set(subset) & set(other):
        return 0
    inversions = sum(1 for s in subset for t in other if s > t)
    return -1 if inversions % 2 else 1


class KoszulComplex:
    """Cells, weight blocks and differentials of the Koszul complex of A.

    Cell, subset and block caches are filled under one reentrant lock.
    """

    def __init__(self, algebra: QuotientAlgebra, grading: Optional[FineGrading] = None) -> None:
        self.algebra = algebra
        self.field: Field = algebra.field
        self.n = algebra.nvars
        self.grading = grading or FineGrading.standard(self.n)
        self._subsets: Dict[int, Tuple[Subset, ...]] = {}
        self._subset_index: Dict[int, Dict[Subset, int]] = {}
        self._cells: Dict[Tuple[int, int], KoszulCell] = {}
        self._blocks: Dict[Tuple[int, int], Dict[WeightKey, Block]] = {}
        self._keys: Dict[Tuple[int, int], List[WeightKey]] = {}
        self._lock = threading.RLock()

    def subsets(self, p: int) -> Tuple[Subset, ...]:
        with self._lock:
            if p not in self._subsets:
                subsets = tuple(combinations(range(self.n), p)) if 0 <= p <= self.n else ()
                self._subset_index[p] = {s: i for i, s in enumerate(subsets)}
                self._subsets[p] = subsets
            return self._subsets[p]

    def subset_index(self, p: int) -> Mapping[Subset, int]:
        with self._lock:
            self.subsets(p)
            return self._subset_index[p]

    def cell(self, p: int, q: int) -> KoszulCell:
        key = (p, q)
        with self._lock:
            if key not in self._cells:
                monos = self.algebra.standard_monomials(q - p) if 0 <= p <= self.n and q >= p else ()
                self._cells[key] = KoszulCell(p, q, self.subsets(p) if monos else (), monos)
            return self._cells[key]

    def index_of(self, p: int, q: int, subset: Subset, mono: Monomial) -> int:
        cell = self.cell(p, q)
        m = self.algebra.index(q - p)[mono]
        return self.subset_index(p)[subset] * len(cell.monomials) + m

    def weight_keys(self, p: int, q: int) -> List[WeightKey]:
        """Weight of every basis element of K_{p,q}, by index."""

        key = (p, q)
        with self._lock:
            if key not in self._keys:
                cell = self.cell(p, q)
                grading = self.grading
                sub_w = [grading.of_subset(s) for s in cell.subsets]
                mono_w = [grading.of_monomial(m) for m in cell.monomials]
                self._keys[key] = [grading.combine(sw, mw) for sw in sub_w for mw in mono_w]
            return self._keys[key]

    def blocks(self, p: int, q: int) -> Dict[WeightKey, Block]:
        key = (p, q)
        with self._lock:
            if key not in self._blocks:
                grouped: Dict[WeightKey, List[int]] = {}
                for idx, weight in enumerate(self.weight_keys(p, q)):
                    grouped.setdefault(weight, []).append(idx)
                self._blocks[key] = {w: Block(w, tuple(ids)) for w, ids in sorted(grouped.items())}
            return self._blocks[key]

    def differential_column(self, p: int, q: int, index: int) -> SparseVector:
        """d(e_S (x) m) = sum_{i in S} (-1)^{pos(i)} e_{S - i} (x) NF(x_i m), in K_{p-1,q}."""

        if p == 0:
            return {}
        zero = self.field.zero
        cell = self.cell(p, q)
        subset, mono = cell.element(index)
        target = self.cell(p - 1, q)
        target_index = self.algebra.index(q - p + 1)
        width = len(target.monomials)
        sub_index = self.subset_index(p - 1)
        column: SparseVector = {}
        for pos, var in enumerate(subset):
            rest = subset[:pos] + subset[pos + 1:]
            base = sub_index[rest] * width
            form = self.algebra.monomial_form(times_variable(mono, var))
            for std, coeff in form.items():
                value = coeff if pos % 2 == 0 else -coeff
                row = base + target_index[std]
                updated = column.get(row, zero) + value
                if updated:
                    column[row] = updated
                else:
                    column.pop(row, None)
        return column

    def differential_matrix(self, p: int, q: int) -> ExactMatrix:
        """Matrix of d: K_{p,q} -> K_{p-1,q} (rows index the codomain)."""

        cols = self.cell(p, q).size
        rows = self.cell(p - 1, q).size if p >= 1 else 0
        columns = [self.differential_column(p, q, j) for j in range(cols)]
        return from_column_vectors(rows, cols, self.field, columns)

    def block_differential(self, p: int, q: int, weight: WeightKey, budget: Optional[Budget] = None) -> ExactMatrix:
        """Restriction of d_{p,q} to one weight block, in local block coordinates."""

        source = self.blocks(p, q).get(weight)
        target = self.blocks(p - 1, q).get(weight) if p >= 1 else None
        cols = len(source.indices) if source else 0
        rows = len(target.indices) if target else 0
        if not source or not target:
            return sparse_matrix(rows, cols, self.field, {})
        local_row = target.local
        columns = []
        for j in source.indices:
            columns.append({local_row[r]: v for r, v in self.differential_column(p, q, j).items()})
        matrix = from_column_vectors(rows, cols, self.field, columns)
        if budget is not None:
            budget.check(nonzeros(matrix))
        return matrix


def differential_matrix(p: int, q: int, gb: GroebnerBasis) -> ExactMatrix:
    """Matrix of the Koszul differential d: K_{p,q} -> K_{p-1,q} of S/I."""

    return KoszulComplex(QuotientAlgebra(gb)).differential_matrix(p, q)


def check_d_squared(kc: KoszulComplex, p: int, q: int) -> None:
    """Raise unless d_{p,q} o d_{p+1,q} vanishes."""

    if p < 1 or p + 1 > kc.n:
        return
    composite = kc.differential_matrix(p, q).matmul(kc.differential_matrix(p + 1, q))
    count = nonzeros(composite)
    if count:
        raise InternalCheckError(
            "ERR_DD_NONZERO",
            f"d o d has {count} nonzero entries on K_{{{p + 1},{q}}}",
            pointer=f"cell=({p + 1},{q})",
        )
