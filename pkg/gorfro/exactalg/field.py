"""Exact coefficient fields: sympy's rational field and prime fields."""

from __future__ import annotations

from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import QQ, FiniteField
from sympy.polys.domains.domain import Domain

from gorfro.errors import GorfroError, InputError

Field = Domain
FieldElement = Any

DEFAULT_PRIME = 32003
SECOND_PRIME = 65521


class FieldError(GorfroError):
    """Raised on illegal field arithmetic (division by zero, mixed modes)."""


def is_prime(value: int) -> bool:
    return bool(isprime(value))


@lru_cache(maxsize=None)
def GF(p: int = DEFAULT_PRIME) -> Domain:  # noqa: N802
    """Residues modulo ``p``; elements print as symmetric representatives."""

    if not is_prime(p):
        raise InputError("ERR_FIELD_PRIME", f"Modulus {p} is not prime", pointer="--field")
    return FiniteField(p)


def field_name(field: Domain) -> str:
    """Field mode string: ``q`` or ``p:<prime>``."""

    characteristic = int(field.characteristic())
    return f"p:{characteristic}" if characteristic else "q"


def check_same(left: Domain, right: Domain) -> None:
    if left != right:
        raise FieldError(
            "ERR_FIELD_MODE_MISMATCH",
            f"Cannot combine values over {field_name(left)} and {field_name(right)}",
        )


def convert(value: FieldElement, source: Domain, target: Domain) -> FieldElement:
    """Read an element of ``source`` in ``target``.

    Prime residues lift to their symmetric integer representative; a
    rational whose denominator vanishes modulo the target prime is an error.
    """

    if source == target:
        return value
    rational = source.to_sympy(value)
    numerator, denominator = int(rational.p), int(rational.q)
    characteristic = int(target.characteristic())
    if characteristic and denominator % characteristic == 0:
        raise FieldError(
            "ERR_FIELD_DIVISION_BY_ZERO",
            f"Denominator of {rational} vanishes modulo {characteristic}",
        )
    return target.convert(numerator) / target.convert(denominator)


def inverse(field: Domain, value: FieldElement) -> FieldElement:
    if not value:
        raise FieldError("ERR_FIELD_DIVISION_BY_ZERO", f"Division by zero in {field_name(field)}")
    return field.one / value


def scalar_text(field: Domain, value: FieldElement) -> str:
    return str(field.to_sympy(value))


def parse_field(text: str) -> Domain:
    """Parse ``q`` or ``p:<prime>`` (``p`` alone selects the default prime)."""

    spec = text.strip().lower()
    if spec in {"q", "qq", "rational"}:
        return QQ
    if spec == "p":
        return GF(DEFAULT_PRIME)
    if spec.startswith("p:"):
        try:
            modulus = int(spec[2:])
        except ValueError as exc:
            raise InputError("ERR_FIELD_PRIME", f"Invalid modulus in '{text}'", pointer="--field") from exc
        return GF(modulus)
    raise InputError("ERR_FIELD_PRIME", f"Unknown field mode '{text}' (use q or p:<prime>)", pointer="--field")
