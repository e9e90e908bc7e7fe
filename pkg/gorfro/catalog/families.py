"""Defining ideals of the built-in embedding families.

Variable orders: Veronese coordinates follow the reverse-lexicographic order
of their multi-indices, Segre coordinates are row-major, Plücker coordinates
are lexicographic pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from gorfro.errors import InputError
from gorfro.exactalg.field import QQ
from gorfro.exactalg.polynomial import Polynomial, from_terms, monomial_polynomial, substitute, variables

_ID_RE = re.compile(r"^([a-z0-9_]+):(\d+(?:,\d+)*)$")


class CatalogError(InputError):
    """Raised for unknown families, malformed ids and out-of-range parameters."""


@dataclass(frozen=True)
class ClassicalSubcanonicity:
    """Closed-form answer to K_X = O_X(-N); ``applies`` is false when no formula exists."""

    applies: bool
    holds: Optional[bool] = None
    N: Optional[int] = None

    def to_json(self) -> Dict[str, object]:
        return {"applies": self.applies, "holds": self.holds, "N": self.N}

    def to_text(self) -> str:
        if not self.applies:
            return "n/a"
        return f"yes[{self.N}]" if self.holds else "no"


NOT_APPLICABLE = ClassicalSubcanonicity(applies=False)


@dataclass(frozen=True)
class RootData:
    """Semisimple type string and highest weight of a flag entry."""

    type: str
    weight: Tuple[int, ...]

    def to_json(self) -> Dict[str, object]:
        return {"type": self.type, "weight": list(self.weight)}


@dataclass(frozen=True)
class CatalogEntry:
    """One embedded variety: quadric generators over Q plus its classical data.

    ``parameterization[i]`` is the image of ``x_i`` in a polynomial ring of
    parameters; every generator vanishes after substitution.
    """

    id: str
    family: str
    params: Tuple[int, ...]
    nvars: int
    generators: Tuple[Polynomial, ...]
    expected_dim: int
    subcanonical: ClassicalSubcanonicity
    root_data: Optional[RootData] = None
    parameterization: Optional[Tuple[Polynomial, ...]] = None
    variable_names: Optional[Tuple[str, ...]] = None


def _require(condition: bool, family: str, params: Sequence[int], message: str) -> None:
    if not condition:
        raise CatalogError(
            "ERR_CATALOG_PARAMS",
            message,
            pointer=f"{family}:{','.join(map(str, params))}",
        )


def _binomial(nvars: int, a: Tuple[int, int], b: Tuple[int, int]) -> Polynomial:
    left = [0] * nvars
    right = [0] * nvars
    for i in a:
        left[i] += 1
    for i in b:
        right[i] += 1
    return from_terms({tuple(left): 1, tuple(right): -1}, QQ, nvars)


def veronese_multi_indices(m: int, d: int) -> List[Tuple[int, ...]]:
    """Degree-d exponent vectors on m+1 variables in reverse-lexicographic order."""

    out = []
    for combo in combinations_with_replacement(range(m + 1), d):
        exps = [0] * (m + 1)
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, key=lambda u: tuple(reversed(u)))


def veronese_ideal(m: int, d: int) -> CatalogEntry:
    """v_d(P^m): binomials x_u x_v - x_u' x_v' with u + v = u' + v'."""

    _require(m >= 1 and d >= 1, "veronese", (m, d), "Veronese needs m >= 1 and d >= 1")
    multis = veronese_multi_indices(m, d)
    n = len(multis)
    by_sum: Dict[Tuple[int, ...], List[Tuple[int, int]]] = {}
    for a, b in combinations_with_replacement(range(n), 2):
        key = tuple(x + y for x, y in zip(multis[a], multis[b]))
        by_sum.setdefault(key, []).append((a, b))
    generators = []
    for key in sorted(by_sum, key=lambda u: tuple(reversed(u))):
        pairs = by_sum[key]
        for other in pairs[1:]:
            generators.append(_binomial(n, pairs[0], other))
    images = tuple(monomial_polynomial(u, QQ) for u in multis)
    holds = (m + 1) % d == 0
    return CatalogEntry(
        id=f"veronese:{m},{d}",
        family="veronese",
        params=(m, d),
        nvars=n,
        generators=tuple(generators),
        expected_dim=m + 1,
        subcanonical=ClassicalSubcanonicity(True, holds, (m + 1) // d if holds else None),
        root_data=RootData(f"A{m}", (d,) + (0,) * (m - 1)),
        parameterization=images,
    )


def segre_ideal(m1: int, m2: int) -> CatalogEntry:
    """P^m1 x P^m2: 2x2 minors of the generic (m1+1)x(m2+1) matrix."""

    _require(m1 >= 1 and m2 >= 1, "segre", (m1, m2), "Segre needs m1, m2 >= 1")
    rows, cols = m1 + 1, m2 + 1
    n = rows * cols

    def var(i: int, j: int) -> int:
        return i * cols + j

    generators = []
    for i, k in combinations(range(rows), 2):
        for j, l in combinations(range(cols), 2):
            generators.append(_binomial(n, (var(i, j), var(k, l)), (var(i, l), var(k, j))))
    params = variables(QQ, rows + cols)
    images = tuple(params[i] * params[rows + j] for i in range(rows) for j in range(cols))
    holds = m1 == m2
    return CatalogEntry(
        id=f"segre:{m1},{m2}",
        family="segre",
        params=(m1, m2),
        nvars=n,
        generators=tuple(generators),
        expected_dim=m1 + m2 + 1,
        subcanonical=ClassicalSubcanonicity(True, holds, m1 + 1 if holds else None),
        root_data=RootData(f"A{m1}xA{m2}", (1,) + (0,) * (m1 - 1) + (1,) + (0,) * (m2 - 1)),
        parameterization=images,
        variable_names=tuple(f"x{i}{j}" for i in range(rows) for j in range(cols)),
    )


def plucker2_ideal(nn: int) -> CatalogEntry:
    """Gr(2, nn): three-term Plücker relations p_ij p_kl - p_ik p_jl + p_il p_jk."""

    _require(nn >= 4, "plucker2", (nn,), "Plücker Gr(2, n) needs n >= 4")
    pairs = list(combinations(range(nn), 2))
    index = {pair: k for k, pair in enumerate(pairs)}
    n = len(pairs)
    x = variables(QQ, n)
    generators = []
    for i, j, k, l in combinations(range(nn), 4):
        generators.append(
            x[index[i, j]] * x[index[k, l]]
            - x[index[i, k]] * x[index[j, l]]
            + x[index[i, l]] * x[index[j, k]]
        )
    ab = variables(QQ, 2 * nn)
    images = tuple(ab[i] * ab[nn + j] - ab[j] * ab[nn + i] for i, j in pairs)
    return CatalogEntry(
        id=f"plucker2:{nn}",
        family="plucker2",
        params=(nn,),
        nvars=n,
        generators=tuple(generators),
        expected_dim=2 * (nn - 2) + 1,
        subcanonical=ClassicalSubcanonicity(True, True, nn),
        root_data=RootData(f"A{nn - 1}", (0, 1) + (0,) * (nn - 3)),
        parameterization=images,
        variable_names=tuple(f"p{i}{j}" for i, j in pairs),
    )


def complete_intersection(degrees: Sequence[int]) -> CatalogEntry:
    """x_i^{d_i} - x_{i+k}^{d_i} for i < k, in 2k variables.

    The variety is a union of points and lines, not smooth and irreducible,
    so no classical subcanonicity formula applies.
    """

    degrees = tuple(degrees)
    _require(bool(degrees) and all(d >= 1 for d in degrees), "ci", degrees, "Complete intersection needs degrees >= 1")
    k = len(degrees)
    n = 2 * k
    x = variables(QQ, n)
    generators = tuple(x[i] ** d - x[i + k] ** d for i, d in enumerate(degrees))
    return CatalogEntry(
        id="ci:" + ",".join(map(str, degrees)),
        family="ci",
        params=degrees,
        nvars=n,
        generators=generators,
        expected_dim=n - k,
        subcanonical=NOT_APPLICABLE,
    )


FAMILIES = {
    "veronese": (veronese_ideal, 2),
    "segre": (segre_ideal, 2),
    "plucker2": (plucker2_ideal, 1),
    "ci": (lambda *ds: complete_intersection(ds), None),
}


def parse_entry_id(text: str) -> Tuple[str, Tuple[int, ...]]:
    match = _ID_RE.match(text.strip())
    if match is None:
        raise CatalogError("ERR_CATALOG_ID", f"Malformed example id '{text}'", pointer=text)
    family = match.group(1)
    params = tuple(int(p) for p in match.group(2).split(","))
    if family not in FAMILIES:
        raise CatalogError("ERR_CATALOG_FAMILY", f"Unknown family '{family}'", pointer=text)
    arity = FAMILIES[family][1]
    if arity is not None and len(params) != arity:
        raise CatalogError(
            "ERR_CATALOG_PARAMS",
            f"Family '{family}' takes {arity} parameter(s), got {len(params)}",
            pointer=text,
        )
    return family, params


def build_entry(family: str, params: Sequence[int]) -> CatalogEntry:
    if family not in FAMILIES:
        raise CatalogError("ERR_CATALOG_FAMILY", f"Unknown family '{family}'", pointer=family)
    factory = FAMILIES[family][0]
    return factory(*params)  # type: ignore[operator]


def entry_from_id(text: str) -> CatalogEntry:
    family, params = parse_entry_id(text)
    return build_entry(family, params)


def classical_subcanonical(entry: CatalogEntry) -> Tuple[bool, Optional[int]]:
    """(holds, N) from the closed-form canonical class of the family."""

    if not entry.subcanonical.applies:
        raise CatalogError(
            "ERR_CATALOG_NOT_APPLICABLE",
            f"No classical subcanonicity formula for '{entry.id}'",
            pointer=entry.id,
        )
    return bool(entry.subcanonical.holds), entry.subcanonical.N


def substitution_residues(entry: CatalogEntry) -> List[Polynomial]:
    """Generators after plugging in the parameterization (all zero for a sound entry)."""

    if entry.parameterization is None:
        return []
    return [substitute(g, entry.parameterization) for g in entry.generators]


def hilbert_closed_form(entry: CatalogEntry, q: int) -> Optional[int]:
    """dim A_q from the family's closed form, where one is known."""

    if entry.family == "veronese":
        m, d = entry.params
        return comb(m + d * q, m)
    if entry.family == "segre":
        m1, m2 = entry.params
        return comb(m1 + q, m1) * comb(m2 + q, m2)
    return None
