"""Torus fine gradings under which an ideal is homogeneous."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple

from gorfro.exactalg.field import QQ
from gorfro.exactalg.matrix import from_row_vectors, sparse_kernel
from gorfro.exactalg.polynomial import Monomial, Polynomial

WeightKey = Tuple[int, ...]


@dataclass(frozen=True)
class FineGrading:
    """Integer weight per variable; ``weights[i]`` is the weight of ``x_i``.

    Every generator of the ideal is homogeneous for these weights, so each
    graded piece of the Koszul complex splits into weight blocks.
    """

    weights: Tuple[WeightKey, ...]

    @property
    def rank(self) -> int:
        return len(self.weights[0]) if self.weights else 0

    def of_monomial(self, mono: Monomial) -> WeightKey:
        total = [0] * self.rank
        for idx, exp in enumerate(mono):
            if exp:
                for k, w in enumerate(self.weights[idx]):
                    total[k] += exp * w
        return tuple(total)

    def of_subset(self, subset: Sequence[int]) -> WeightKey:
        total = [0] * self.rank
        for idx in subset:
            for k, w in enumerate(self.weights[idx]):
                total[k] += w
        return tuple(total)

    @staticmethod
    def combine(a: WeightKey, b: WeightKey) -> WeightKey:
        return tuple(x + y for x, y in zip(a, b))

    @classmethod
    def standard(cls, nvars: int) -> "FineGrading":
        return cls(tuple((1,) for _ in range(nvars)))


def fine_grading(generators: Sequence[Polynomial], nvars: int) -> FineGrading:
    """Lattice of weights w with w.(a - b) = 0 for any two terms a, b of one generator.

    Homogeneous generators always admit the all-ones weight, so the result
    refines the standard grading.
    """

    differences: List[dict] = []
    for gen in generators:
        monos = sorted(gen.itermonoms())
        if not monos:
            continue
        base = monos[0]
        for other in monos[1:]:
            diff = {i: a - b for i, (a, b) in enumerate(zip(other, base)) if a != b}
            if diff:
                differences.append(diff)
    matrix = from_row_vectors(len(differences), nvars, QQ, differences)
    _, kernel = sparse_kernel(matrix)
    columns: List[List[int]] = []
    for vec in kernel:
        denom = lcm(*(int(QQ.denom(value)) for value in vec.values()))
        scaled = {i: int(QQ.numer(value)) * (denom // int(QQ.denom(value))) for i, value in vec.items()}
        columns.append([scaled.get(i, 0) for i in range(nvars)])
    weights = tuple(tuple(col[i] for col in columns) for i in range(nvars))
    return FineGrading(weights)
