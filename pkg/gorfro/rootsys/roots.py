"""Semisimple root data: positive roots and weights in the fundamental basis."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Set, Tuple, Union

from sympy.polys.matrices import DomainMatrix

from gorfro.errors import InputError
from gorfro.exactalg.field import QQ, FieldElement
from gorfro.rootsys.cartan import CartanMatrix, Factor, block_cartan, format_type, parse_type, validate_factor

Root = Tuple[int, ...]


class WeightError(InputError):
    """Raised for weights of the wrong length, non-dominant or ill-posed weights."""


@dataclass(frozen=True)
class WeightVector:
    """Integer coordinates in the fundamental-weight basis, across all factors."""

    coordinates: Tuple[int, ...]

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coordinates)

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __len__(self) -> int:
        return len(self.coordinates)

    def __getitem__(self, index: int) -> int:
        return self.coordinates[index]

    def scale(self, factor: int) -> "WeightVector":
        return WeightVector(tuple(factor * c for c in self.coordinates))

    def to_text(self) -> str:
        """``4*w2``, ``2*w1 + 2*w2``, ``w1``; indices are 1-based."""

        parts = []
        for idx, c in enumerate(self.coordinates, start=1):
            if not c:
                continue
            mag = abs(c)
            body = f"w{idx}" if mag == 1 else f"{mag}*w{idx}"
            if parts:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
            else:
                parts.append(f"-{body}" if c < 0 else body)
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_text()


def parse_weight(text: str, rs: "RootSystem") -> WeightVector:
    """Comma-separated fundamental-weight coordinates, one per simple root."""

    try:
        coords = tuple(int(part) for part in text.replace(" ", "").split(",") if part != "")
    except ValueError:
        raise WeightError("ERR_WEIGHT_LENGTH", f"Weight '{text}' is not a list of integers", pointer=text) from None
    if len(coords) != rs.rank:
        raise WeightError(
            "ERR_WEIGHT_LENGTH",
            f"Weight has {len(coords)} coordinates but {rs.type_name} has rank {rs.rank}",
            pointer=text,
        )
    return WeightVector(coords)


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of a product of classical simple types.

    Roots are coordinate vectors in the basis of simple roots, ordered by
    height and then lexicographically.
    """

    factors: Tuple[Factor, ...]
    cartan: CartanMatrix
    positive_roots: Tuple[Root, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def type_name(self) -> str:
        return format_type(self.factors)

    def factor_ranges(self) -> List[range]:
        out = []
        offset = 0
        for _, rank in self.factors:
            out.append(range(offset, offset + rank))
            offset += rank
        return out

    def to_fundamental(self, root: Sequence[int]) -> WeightVector:
        """<beta, alpha_i^vee> for each i: the Cartan matrix applied to the root."""

        return WeightVector(
            tuple(sum(a * c for a, c in zip(row, root)) for row in self.cartan)
        )

    @cached_property
    def fundamental_to_roots(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        """Inverse Cartan matrix over Q: column j holds omega_j in simple-root coordinates."""

        inverse = DomainMatrix.from_list([list(row) for row in self.cartan], QQ).inv()
        # rows of A^{-1} indexed by simple roots
        return tuple(tuple(row) for row in inverse.to_list())

    def weight_in_roots(self, weight: WeightVector) -> Tuple[FieldElement, ...]:
        inv = self.fundamental_to_roots
        return tuple(
            sum((inv[i][j] * QQ(weight[j]) for j in range(self.rank)), QQ.zero) for i in range(self.rank)
        )


def _alpha_strings(cartan: CartanMatrix) -> List[Root]:
    """Close the simple roots under alpha-strings, one height level at a time."""

    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: Set[Root] = set(simple)
    level: List[Root] = list(simple)
    while level:
        next_level: Set[Root] = set()
        for beta in level:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                # p = how far the string extends downward from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    candidate = tuple(up)
                    if candidate not in found:
                        next_level.add(candidate)
        found.update(next_level)
        level = sorted(next_level)
    return sorted(found, key=lambda r: (sum(r), r))


def build_root_system(factors: Union[str, Iterable[Factor]]) -> RootSystem:
    """Root data for a product of simple types; accepts ``(letter, rank)`` pairs or a type string."""

    if isinstance(factors, str):
        parsed = parse_type(factors)
    else:
        parsed = [validate_factor(letter, rank) for letter, rank in factors]
    cartan = block_cartan(parsed)
    return RootSystem(tuple(parsed), cartan, tuple(_alpha_strings(cartan)))


def roots_by_factor(rs: RootSystem) -> Dict[int, List[Root]]:
    """Positive roots grouped by the simple factor they live in."""

    grouped: Dict[int, List[Root]] = {}
    for root in rs.positive_roots:
        for k, span in enumerate(rs.factor_ranges()):
            if any(root[i] for i in span):
                grouped.setdefault(k, []).append(root)
                break
    return grouped
