"""Graded Betti tables and the invariants read off them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Tuple

from gorfro.errors import InternalCheckError
from gorfro.koszul.homology import HomologyBasis

BettiTriple = Tuple[int, int, int]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero beta_{p,q}, sorted by (p, q)."""

    entries: Tuple[BettiTriple, ...]
    nvars: int

    def beta(self, p: int, q: int) -> int:
        for ep, eq, b in self.entries:
            if (ep, eq) == (p, q):
                return b
        return 0

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {(p, q): b for p, q, b in self.entries}

    @property
    def projective_dimension(self) -> int:
        return max((p for p, _, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((q - p for p, q, _ in self.entries), default=0)

    @property
    def socle_degree(self) -> int:
        """Largest q with beta_{pd,q} != 0."""

        pd = self.projective_dimension
        return max((q for p, q, _ in self.entries if p == pd), default=0)

    @property
    def type(self) -> int:
        pd = self.projective_dimension
        return sum(b for p, _, b in self.entries if p == pd)

    def totals(self) -> List[int]:
        out = [0] * (self.projective_dimension + 1)
        for p, _, b in self.entries:
            out[p] += b
        return out

    def is_symmetric(self) -> bool:
        """beta_{p,q} = beta_{c-p, sigma-q} for c = pd and sigma = socle degree."""

        c, sigma = self.projective_dimension, self.socle_degree
        table = self.as_dict()
        return all(table.get((c - p, sigma - q), 0) == b for (p, q), b in table.items())

    def to_json(self) -> Dict[str, object]:
        return {
            "betti": [list(t) for t in self.entries],
            "pd": self.projective_dimension,
            "regularity": self.regularity,
            "socle_degree": self.socle_degree,
            "type": self.type,
            "totals": self.totals(),
        }


def betti_table(hb: HomologyBasis) -> BettiTable:
    """Collect beta_{p,q} = dim H_{p,q} and check it against the Hilbert numerator.

    The alternating sums sum_p (-1)^p beta_{p,q} are the coefficients of N(t).
    """

    entries = sorted((cell.p, cell.q, cell.dim) for cell in hb.nonzero_cells())
    table = BettiTable(tuple(entries), hb.nvars)
    euler: Dict[int, int] = {}
    for p, q, b in entries:
        euler[q] = euler.get(q, 0) + (-b if p % 2 else b)
    for q in range(hb.q_max + 1):
        if euler.get(q, 0) != hb.numerator.coefficient(q):
            raise InternalCheckError(
                "ERR_EULER_MISMATCH",
                f"Alternating Betti sum {euler.get(q, 0)} differs from numerator coefficient "
                f"{hb.numerator.coefficient(q)} in degree {q}",
                pointer=f"q={q}",
            )
    return table


def koszul_euler_characteristic(hb: HomologyBasis, q: int) -> int:
    """sum_p (-1)^p dim K_{p,q}, computed from chain dimensions alone."""

    return sum(
        (-1) ** p * comb(hb.nvars, p) * hb.algebra.dimension(q - p)
        for p in range(0, min(q, hb.nvars) + 1)
    )


def render_betti_text(table: BettiTable) -> str:
    """Macaulay-style grid: columns p, rows q - p, '.' for zero."""

    pd = table.projective_dimension
    reg = table.regularity
    grid = table.as_dict()
    header = [str(p) for p in range(pd + 1)]
    totals = [str(t) for t in table.totals()]
    rows = [
        [str(grid.get((p, p + r), 0) or ".") for p in range(pd + 1)]
        for r in range(reg + 1)
    ]
    width = max(len(cell) for line in [header, totals, *rows] for cell in line)
    labels = ["", "total:"] + [f"{r}:" for r in range(reg + 1)]
    label_width = max(len(label) for label in labels)
    lines = []
    for label, cells in zip(labels, [header, totals, *rows]):
        body = " ".join(cell.rjust(width) for cell in cells)
        lines.append(f"{label.rjust(label_width)} {body}")
    return "\n".join(lines) + "\n"
