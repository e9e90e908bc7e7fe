"""Pytest configuration for gorfro."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from gorfro.catalog.families import entry_from_id  # noqa: E402
from gorfro.exactalg.field import QQ, Field  # noqa: E402
from gorfro.exactalg.polynomial import change_field  # noqa: E402
from gorfro.groebner.buchberger import GroebnerBasis, buchberger  # noqa: E402
from gorfro.groebner.idealio import parse_ideal  # noqa: E402
from gorfro.koszul.homology import HomologyBasis, homology_basis  # noqa: E402

TWISTED_CUBIC = """\
ring n=4
x0*x2 - x1^2
x0*x3 - x1*x2
x1*x3 - x2^2
"""


@pytest.fixture()
def ideal_gb() -> Callable[[str, Field], GroebnerBasis]:
    def build(text: str, field: Field = QQ) -> GroebnerBasis:
        ideal = parse_ideal(text, field)
        return buchberger(list(ideal.generators), nvars=ideal.nvars, field=field)

    return build


@pytest.fixture()
def entry_homology() -> Callable[..., HomologyBasis]:
    def build(example_id: str, field: Field = QQ) -> HomologyBasis:
        entry = entry_from_id(example_id)
        gens = [change_field(g, field) for g in entry.generators]
        gb = buchberger(gens, nvars=entry.nvars, field=field)
        return homology_basis(gb)

    return build


@pytest.fixture()
def twisted_cubic_gb(ideal_gb: Callable[[str, Field], GroebnerBasis]) -> GroebnerBasis:
    return ideal_gb(TWISTED_CUBIC, QQ)
