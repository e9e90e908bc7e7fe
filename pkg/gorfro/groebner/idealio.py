"""Reading and writing the ideal text format.

::

    ring n=4
    x0*x2 - x1^2
    x0*x3 - x1*x2

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from gorfro.errors import InputError
from gorfro.exactalg.field import QQ, Field
from gorfro.exactalg.polynomial import Monomial, Polynomial, from_terms, to_text

_HEADER = re.compile(r"^\s*ring\s+n\s*=\s*(\d+)\s*$")
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^]))")


class IdealParseError(InputError):
    """Raised when ideal text cannot be parsed."""


@dataclass(frozen=True)
class IdealText:
    nvars: int
    generators: Tuple[Polynomial, ...]
    source: Optional[str] = None


def _tokenize(text: str, line_no: int) -> List[Tuple[str, str]]:
    tokens: List[Tuple[str, str]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match or match.end() == pos:
            raise IdealParseError(
                "ERR_IDEAL_PARSE",
                f"Unexpected character {stripped[pos:].strip()[:1]!r}",
                pointer=f"line:{line_no}",
            )
        kind = match.lastgroup or ""
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _PolynomialParser:
    """Recursive descent over ``[sign] term (sign term)*`` with ``term := factor (* factor)*``."""

    def __init__(self, tokens: List[Tuple[str, str]], nvars: int, field: Field, line_no: int) -> None:
        self._tokens = tokens
        self._pos = 0
        self._nvars = nvars
        self._field = field
        self._line = line_no

    def _error(self, message: str) -> IdealParseError:
        return IdealParseError("ERR_IDEAL_PARSE", message, pointer=f"line:{self._line}")

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self._tokens[self._pos] if self._pos < len(self._tokens) else None

    def _take(self) -> Tuple[str, str]:
        token = self._peek()
        if token is None:
            raise self._error("Unexpected end of polynomial")
        self._pos += 1
        return token

    def parse(self) -> Polynomial:
        terms: Dict[Monomial, int] = {}
        sign = 1
        token = self._peek()
        if token and token == ("op", "-"):
            sign = -1
            self._pos += 1
        elif token and token == ("op", "+"):
            self._pos += 1
        while True:
            coeff, mono = self._term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            token = self._peek()
            if token is None:
                break
            if token not in (("op", "+"), ("op", "-")):
                raise self._error(f"Expected '+' or '-', found {token[1]!r}")
            sign = 1 if token[1] == "+" else -1
            self._pos += 1
        return from_terms(terms, self._field, self._nvars)

    def _term(self) -> Tuple[int, Monomial]:
        coeff = 1
        exps = [0] * self._nvars
        while True:
            kind, value = self._take()
            if kind == "int":
                coeff *= int(value)
            elif kind == "var":
                index = int(value[1:])
                if index >= self._nvars:
                    raise self._error(f"Variable {value} outside ring with n={self._nvars}")
                power = 1
                if self._peek() == ("op", "^"):
                    self._pos += 1
                    kind, value = self._take()
                    if kind != "int":
                        raise self._error("Exponent must be a non-negative integer")
                    power = int(value)
                exps[index] += power
            else:
                raise self._error(f"Unexpected operator {value!r}")
            if self._peek() == ("op", "*"):
                self._pos += 1
                continue
            return coeff, tuple(exps)


def parse_ideal(text: str, field: Field = QQ, *, source: Optional[str] = None) -> IdealText:
    """Parse ideal text; integer coefficients are read into ``field``."""

    nvars: Optional[int] = None
    generators: List[Polynomial] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if nvars is None:
            match = _HEADER.match(line)
            if not match:
                raise IdealParseError(
                    "ERR_IDEAL_PARSE",
                    "First line must be 'ring n=<count>'",
                    pointer=f"line:{line_no}",
                )
            nvars = int(match.group(1))
            if nvars < 1:
                raise IdealParseError(
                    "ERR_IDEAL_PARSE",
                    f"A ring needs at least one variable, got n={nvars}",
                    pointer=f"line:{line_no}",
                )
            continue
        tokens = _tokenize(line, line_no)
        generators.append(_PolynomialParser(tokens, nvars, field, line_no).parse())
    if nvars is None:
        raise IdealParseError("ERR_IDEAL_PARSE", "Missing 'ring n=<count>' header", pointer="line:1")
    return IdealText(nvars=nvars, generators=tuple(generators), source=source)


def load_ideal(path: Union[str, Path], field: Field = QQ) -> IdealText:
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IdealParseError("ERR_IDEAL_PARSE", f"Cannot read ideal file: {exc}", pointer=str(path)) from exc
    return parse_ideal(text, field, source=str(path))


def format_ideal(nvars: int, generators: Sequence[Polynomial]) -> str:
    lines = [f"ring n={nvars}"]
    lines.extend(to_text(g) for g in generators)
    return "\n".join(lines) + "\n"
