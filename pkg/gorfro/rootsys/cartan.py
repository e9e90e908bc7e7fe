"""Cartan matrices of the classical types and ``A1xA2``-style type strings."""

from __future__ import annotations

import re
from typing import List, Sequence, Tuple

from gorfro.errors import InputError

Factor = Tuple[str, int]
CartanMatrix = Tuple[Tuple[int, ...], ...]

SUPPORTED_TYPES = ("A", "B", "C", "D")
_FACTOR_RE = re.compile(r"^([A-Za-z])(\d+)$")


class RootTypeError(InputError):
    """Raised for unsupported or malformed root-system types."""


def validate_factor(letter: str, rank: int) -> Factor:
    letter = letter.upper()
    if letter not in SUPPORTED_TYPES:
        raise RootTypeError("ERR_ROOT_TYPE", f"Unsupported root system type '{letter}'", pointer=f"{letter}{rank}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}[letter]
    if rank < minimum:
        raise RootTypeError(
            "ERR_ROOT_TYPE",
            f"Type {letter} needs rank at least {minimum}, got {rank}",
            pointer=f"{letter}{rank}",
        )
    return letter, rank


def parse_type(text: str) -> List[Factor]:
    """Parse ``A3`` or ``A1xA2`` (also ``×``) into simple factors."""

    parts = [p.strip() for p in re.split(r"[x×*]", text.strip()) if p.strip()]
    if not parts:
        raise RootTypeError("ERR_ROOT_TYPE", "Empty root system type", pointer=text or "/")
    factors = []
    for part in parts:
        match = _FACTOR_RE.match(part)
        if match is None:
            raise RootTypeError("ERR_ROOT_TYPE", f"Cannot parse root system factor '{part}'", pointer=text)
        factors.append(validate_factor(match.group(1), int(match.group(2))))
    return factors


def format_type(factors: Sequence[Factor]) -> str:
    return "x".join(f"{letter}{rank}" for letter, rank in factors)


def simple_cartan(letter: str, rank: int) -> CartanMatrix:
    """Cartan matrix with entries a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering."""

    letter, rank = validate_factor(letter, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    if letter == "D":
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    else:
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if letter == "B":
            # alpha_r is short
            a[rank - 1][rank - 2] = -2
        elif letter == "C":
            # alpha_r is long
            a[rank - 2][rank - 1] = -2
    return tuple(tuple(row) for row in a)


def block_cartan(factors: Sequence[Factor]) -> CartanMatrix:
    size = sum(rank for _, rank in factors)
    a = [[0] * size for _ in range(size)]
    offset = 0
    for letter, rank in factors:
        block = simple_cartan(letter, rank)
        for i in range(rank):
            for j in range(rank):
                a[offset + i][offset + j] = block[i][j]
        offset += rank
    return tuple(tuple(row) for row in a)


def positive_root_count(letter: str, rank: int) -> int:
    """Classical count: A_r r(r+1)/2; B_r, C_r r^2; D_r r(r-1)."""

    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in ("B", "C"):
        return rank * rank
    return rank * (rank - 1)
