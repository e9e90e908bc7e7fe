"""DG-algebra product on Koszul homology and the Frobenius pairing matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gorfro.errors import GorfroError
from gorfro.exactalg.field import FieldElement
from gorfro.exactalg.matrix import ExactMatrix, SparseVector, from_triplets
from gorfro.koszul.betti import BettiTable, betti_table
from gorfro.koszul.complex import KoszulComplex, wedge_sign
from gorfro.koszul.homology import HomologyBasis


class PairingUndefinedError(GorfroError):
    """Raised when the top homology class is not one-dimensional."""


@dataclass(frozen=True)
class HomologyClass:
    """A class in H_{p,q}, as coordinates in the representative basis."""

    p: int
    q: int
    coordinates: Tuple[FieldElement, ...]

    def is_zero(self) -> bool:
        return not any(self.coordinates)


def basis_class(hb: HomologyBasis, p: int, q: int, index: int) -> HomologyClass:
    field = hb.field
    dim = hb.dim(p, q)
    if not 0 <= index < dim:
        raise GorfroError("ERR_CELL_RANGE", f"H_{{{p},{q}}} has no basis class {index}", pointer=f"cell=({p},{q})")
    return HomologyClass(p, q, tuple(field.one if i == index else field.zero for i in range(dim)))


def unit_class(hb: HomologyBasis) -> HomologyClass:
    return basis_class(hb, 0, 0, 0)


def class_chain(hb: HomologyBasis, cls: HomologyClass) -> SparseVector:
    """Cycle in K_{p,q} representing ``cls``."""

    zero = hb.field.zero
    chain: SparseVector = {}
    for coeff, rep in zip(cls.coordinates, hb.representatives(cls.p, cls.q)):
        if not coeff:
            continue
        for idx, value in rep.items():
            updated = chain.get(idx, zero) + coeff * value
            if updated:
                chain[idx] = updated
            else:
                chain.pop(idx, None)
    return chain


def chain_product(
    kc: KoszulComplex,
    left: Tuple[int, int, Mapping[int, FieldElement]],
    right: Tuple[int, int, Mapping[int, FieldElement]],
) -> SparseVector:
    """(e_S (x) a)(e_T (x) b) = sign(S, T) e_{S u T} (x) NF(ab), extended bilinearly."""

    zero = kc.field.zero
    p1, q1, v1 = left
    p2, q2, v2 = right
    p, q = p1 + p2, q1 + q2
    if p > kc.n:
        return {}
    cell1, cell2 = kc.cell(p1, q1), kc.cell(p2, q2)
    out: SparseVector = {}
    for i, a in v1.items():
        s1, m1 = cell1.element(i)
        for j, b in v2.items():
            s2, m2 = cell2.element(j)
            sign = wedge_sign(s1, s2)
            if not sign:
                continue
            subset = tuple(sorted(s1 + s2))
            factor = a * b if sign > 0 else -(a * b)
            for std, value in kc.algebra.multiply(m1, m2).items():
                idx = kc.index_of(p, q, subset, std)
                updated = out.get(idx, zero) + factor * value
                if updated:
                    out[idx] = updated
                else:
                    out.pop(idx, None)
    return out


def dg_product(z1: HomologyClass, z2: HomologyClass, hb: HomologyBasis) -> HomologyClass:
    """Product of two homology classes, expressed in the basis of H_{p1+p2, q1+q2}."""

    p, q = z1.p + z2.p, z1.q + z2.q
    cell = hb.cell(p, q)
    if not cell.dim:
        return HomologyClass(p, q, ())
    kc = hb.complex
    chain = chain_product(kc, (z1.p, z1.q, class_chain(hb, z1)), (z2.p, z2.q, class_chain(hb, z2)))
    return HomologyClass(p, q, cell.coordinates(chain, kc))


def pairing_labels(hb: HomologyBasis, p: int) -> List[Tuple[int, int]]:
    """(q, index) for every basis class of the cells H_{p,q}, q ascending."""

    return [
        (cell.q, i)
        for cell in sorted(hb.nonzero_cells(), key=lambda c: c.q)
        if cell.p == p
        for i in range(cell.dim)
    ]


def pairing_matrix(p: int, hb: HomologyBasis, table: Optional[BettiTable] = None) -> ExactMatrix:
    """Matrix of (a, b) -> top coordinate of ab for a in H_p and b in H_{c-p}.

    Entries vanish unless the internal degrees add up to the socle degree.
    """

    table = table or betti_table(hb)
    c, sigma = table.projective_dimension, table.socle_degree
    if table.type != 1:
        raise PairingUndefinedError(
            "ERR_PAIRING_UNDEFINED",
            f"Top class H_{{{c},{sigma}}} has dimension {table.type}, expected 1",
            pointer=f"cell=({c},{sigma})",
        )
    if not 0 <= p <= c:
        raise GorfroError("ERR_CELL_RANGE", f"Homological degree {p} outside 0..{c}", pointer=f"p={p}")
    rows = pairing_labels(hb, p)
    cols = pairing_labels(hb, c - p)
    classes: Dict[Tuple[int, int, int], HomologyClass] = {}

    def basis(hp: int, q: int, i: int) -> HomologyClass:
        key = (hp, q, i)
        if key not in classes:
            classes[key] = basis_class(hb, hp, q, i)
        return classes[key]

    triplets = []
    for r, (q, i) in enumerate(rows):
        for col, (q2, j) in enumerate(cols):
            if q + q2 != sigma:
                continue
            product = dg_product(basis(p, q, i), basis(c - p, q2, j), hb)
            if product.coordinates and product.coordinates[0]:
                triplets.append((r, col, product.coordinates[0]))
    return from_triplets(len(rows), len(cols), hb.field, triplets)


def graded_commutator(z1: HomologyClass, z2: HomologyClass, hb: HomologyBasis) -> Sequence[FieldElement]:
    """z1 z2 - (-1)^{p1 p2} z2 z1; identically zero in a graded commutative algebra."""

    forward = dg_product(z1, z2, hb).coordinates
    backward = dg_product(z2, z1, hb).coordinates
    if (z1.p * z2.p) % 2:
        return tuple(a + b for a, b in zip(forward, backward))
    return tuple(a - b for a, b in zip(forward, backward))
