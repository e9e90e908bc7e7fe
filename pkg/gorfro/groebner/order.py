"""Monomial orders, adapted onto sympy's order callables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyRing

from gorfro.errors import InputError
from gorfro.exactalg.field import Field
from gorfro.exactalg.polynomial import Monomial, polynomial_ring

GREVLEX = "grevlex"
LEX = "lex"

_BASE_ORDERS = {GREVLEX: grevlex, LEX: lex}


class _PermutedOrder(SympyOrder):  # type: ignore[misc]
    """A sympy order applied after reordering the variables by precedence."""

    alias = "permuted"

    def __init__(self, base: SympyOrder, precedence: Tuple[int, ...]) -> None:
        self.base = base
        self.precedence = precedence

    def __call__(self, monomial: Monomial) -> Tuple[object, ...]:
        return self.base(tuple(monomial[i] for i in self.precedence))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.base!r}, {self.precedence})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, _PermutedOrder)
            and other.base == self.base
            and other.precedence == self.precedence
        )

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.base, self.precedence))


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic (default) or lexicographic order.

    ``precedence`` lists variable indices from largest to smallest; the
    identity permutation gives ``x0 > x1 > ... > x{n-1}``.
    """

    nvars: int
    kind: str = GREVLEX
    precedence: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _BASE_ORDERS:
            raise InputError("ERR_ORDER_KIND", f"Unknown monomial order '{self.kind}'")
        if not self.precedence:
            object.__setattr__(self, "precedence", tuple(range(self.nvars)))
        if sorted(self.precedence) != list(range(self.nvars)):
            raise InputError("ERR_ORDER_KIND", f"Precedence {self.precedence} is not a permutation")

    @classmethod
    def grevlex(cls, nvars: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(nvars, GREVLEX, tuple(precedence or ()))

    @classmethod
    def lex(cls, nvars: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(nvars, LEX, tuple(precedence or ()))

    @property
    def sympy_order(self) -> SympyOrder:
        base = _BASE_ORDERS[self.kind]
        if self.precedence == tuple(range(self.nvars)):
            return base
        return _PermutedOrder(base, self.precedence)

    def key(self, mono: Monomial) -> Tuple[object, ...]:
        """Sort key; larger keys are larger monomials."""

        return self.sympy_order(tuple(mono))

    def ring(self, field: Field) -> PolyRing:
        return polynomial_ring(self.nvars, field, self.sympy_order)

    def sorted_desc(self, monomials: Sequence[Monomial]) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)
