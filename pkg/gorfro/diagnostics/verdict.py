"""Cohen-Macaulay, Gorenstein and Frobenius verdicts with witnesses."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

from gorfro.errors import InternalCheckError
from gorfro.exactalg.matrix import rank
from gorfro.groebner.quotient import HilbertNumerator
from gorfro.koszul.betti import BettiTable
from gorfro.koszul.homology import HomologyBasis
from gorfro.koszul.product import pairing_matrix

logger = logging.getLogger("gorfro.diagnostics")


@dataclass(frozen=True)
class Witness:
    """Concrete evidence for a failed property; ``data`` re-verifies it."""

    kind: str
    detail: str
    data: Mapping[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, "detail": self.detail, "data": dict(self.data)}


@dataclass(frozen=True)
class Verdict:
    cohen_macaulay: bool
    pd: int
    dim: int
    codim: int
    type: int
    gorenstein: bool
    frobenius: bool
    frobenius_defined: bool
    witnesses: Tuple[Witness, ...] = ()


def is_cohen_macaulay(bt: BettiTable, dim_a: int, n: int) -> bool:
    """Auslander-Buchsbaum: CM iff pd = n - dim."""

    if bt.projective_dimension > n:
        raise InternalCheckError(
            "ERR_PD_RANGE",
            f"Projective dimension {bt.projective_dimension} exceeds the {n} variables",
        )
    return bt.projective_dimension == n - dim_a


def is_gorenstein(bt: BettiTable, dim_a: int, n: int) -> Tuple[bool, List[Witness]]:
    witnesses = []
    if not is_cohen_macaulay(bt, dim_a, n):
        witnesses.append(
            Witness(
                "not_cohen_macaulay",
                f"pd {bt.projective_dimension} != codim {n - dim_a}",
                {"pd": bt.projective_dimension, "codim": n - dim_a},
            )
        )
    if bt.type != 1:
        witnesses.append(Witness("type", f"type = {bt.type}", {"type": bt.type}))
    return not witnesses, witnesses


def is_frobenius(hb: HomologyBasis, bt: BettiTable) -> Tuple[bool, List[Witness]]:
    """One-dimensional top class and a nondegenerate pairing in every degree."""

    c, sigma = bt.projective_dimension, bt.socle_degree
    if bt.type != 1:
        return False, [
            Witness(
                "top_class",
                f"dim H_top = {bt.type}",
                {"p": c, "dims": {str(q): b for p, q, b in bt.entries if p == c}},
            )
        ]
    for p in range(c + 1):
        matrix = pairing_matrix(p, hb, bt)
        rows, cols = matrix.shape
        r = rank(matrix)
        if rows != cols or r != rows:
            logger.debug("Degenerate pairing at p=%d: %dx%d of rank %d", p, rows, cols, r)
            return False, [
                Witness(
                    "degenerate_pairing",
                    f"pairing H_{p} x H_{c - p} -> H_({c},{sigma}) is {rows}x{cols} of rank {r}",
                    {"p": p, "rows": rows, "cols": cols, "rank": r},
                )
            ]
    return True, []


def betti_symmetry(bt: BettiTable) -> Tuple[bool, List[Witness]]:
    c, sigma = bt.projective_dimension, bt.socle_degree
    table = bt.as_dict()
    for (p, q), b in sorted(table.items()):
        mirror = table.get((c - p, sigma - q), 0)
        if mirror != b:
            return False, [
                Witness(
                    "betti_asymmetry",
                    f"beta_({p},{q}) = {b} but beta_({c - p},{sigma - q}) = {mirror}",
                    {"cell": [p, q], "mirror": [c - p, sigma - q]},
                )
            ]
    return True, []


def numerator_palindromic(numerator: HilbertNumerator) -> Tuple[bool, List[Witness]]:
    if numerator.is_palindromic():
        return True, []
    return False, [
        Witness(
            "numerator_not_palindromic",
            f"N(t) = {numerator.to_text()}",
            {"coefficients": list(numerator.coefficients)},
        )
    ]


def decide(hb: HomologyBasis, bt: BettiTable, dim_a: int) -> Verdict:
    n = hb.nvars
    cm = is_cohen_macaulay(bt, dim_a, n)
    gorenstein, g_witnesses = is_gorenstein(bt, dim_a, n)
    frobenius, f_witnesses = is_frobenius(hb, bt)
    return Verdict(
        cohen_macaulay=cm,
        pd=bt.projective_dimension,
        dim=dim_a,
        codim=n - dim_a,
        type=bt.type,
        gorenstein=gorenstein,
        frobenius=frobenius,
        frobenius_defined=bt.type == 1,
        witnesses=tuple(g_witnesses + f_witnesses),
    )
