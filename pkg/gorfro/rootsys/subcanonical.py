"""Parabolic data of a highest-weight orbit and its subcanonicity."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

from gorfro.rootsys.roots import RootSystem, WeightError, WeightVector

logger = logging.getLogger("gorfro.rootsys")


@dataclass(frozen=True)
class SubcanonicityVerdict:
    """Whether kappa_P = N * lambda for a positive integer N."""

    holds: bool
    N: Optional[int]
    kappa: WeightVector
    levi: FrozenSet[int]

    def to_text(self) -> str:
        if self.holds:
            return f"subcanonical: yes, N={self.N}, kappa={self.kappa.to_text()}"
        return f"subcanonical: no, kappa={self.kappa.to_text()}"

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "N": self.N,
            "kappa": list(self.kappa.coordinates),
            "levi": sorted(self.levi),
        }


def _require_dominant(rs: RootSystem, weight: WeightVector) -> None:
    if len(weight) != rs.rank:
        raise WeightError(
            "ERR_WEIGHT_LENGTH",
            f"Weight has {len(weight)} coordinates but {rs.type_name} has rank {rs.rank}",
            pointer=",".join(map(str, weight.coordinates)),
        )
    if not weight.is_dominant():
        raise WeightError(
            "ERR_WEIGHT_NOT_DOMINANT",
            f"Weight {weight.to_text()} has a negative coordinate",
            pointer=",".join(map(str, weight.coordinates)),
        )


def parabolic_levi(rs: RootSystem, weight: WeightVector) -> FrozenSet[int]:
    """Simple roots orthogonal to the weight (0-based indices)."""

    _require_dominant(rs, weight)
    return frozenset(i for i, c in enumerate(weight.coordinates) if c == 0)


def canonical_weight(rs: RootSystem, levi: Iterable[int]) -> WeightVector:
    """Sum of the positive roots outside the Levi subsystem, in fundamental weights."""

    levi_set = set(levi)
    total = [0] * rs.rank
    for root in rs.positive_roots:
        if any(c for i, c in enumerate(root) if i not in levi_set):
            for i, c in enumerate(root):
                total[i] += c
    return rs.to_fundamental(total)


def subcanonicity_test(rs: RootSystem, weight: WeightVector) -> SubcanonicityVerdict:
    """Decide kappa_P = N * lambda with N >= 1 for P the stabilizer of the highest-weight line."""

    levi = parabolic_levi(rs, weight)
    for k, span in enumerate(rs.factor_ranges()):
        if not any(weight[i] for i in span):
            letter, rank = rs.factors[k]
            raise WeightError(
                "ERR_WEIGHT_ILL_POSED",
                f"Weight {weight.to_text()} vanishes on the simple factor {letter}{rank}",
                pointer=f"factor={k}",
            )
    kappa = canonical_weight(rs, levi)
    ratios = {kappa[i] // weight[i] for i in range(rs.rank) if weight[i]}
    N: Optional[int] = None
    if len(ratios) == 1:
        candidate = ratios.pop()
        if candidate >= 1 and kappa == weight.scale(candidate):
            N = candidate
    verdict = SubcanonicityVerdict(holds=N is not None, N=N, kappa=kappa, levi=levi)
    logger.debug("%s with weight %s: %s", rs.type_name, weight.to_text(), verdict.to_text())
    return verdict
