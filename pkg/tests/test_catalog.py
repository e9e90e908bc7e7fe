"""Tests for the built-in embeddings and the catalog document."""

from __future__ import annotations

import textwrap
from pathlib import Path

import pytest

from gorfro.catalog import (
    Catalog,
    CatalogError,
    CatalogLoader,
    CatalogValidationError,
    classical_subcanonical,
    complete_intersection,
    entry_from_id,
    export_entry,
    hilbert_closed_form,
    parse_entry_id,
    plucker2_ideal,
    segre_ideal,
    substitution_residues,
    veronese_ideal,
    veronese_multi_indices,
)
from gorfro.catalog.families import RootData
from gorfro.exactalg.field import QQ
from gorfro.exactalg.polynomial import degree
from gorfro.groebner.buchberger import buchberger
from gorfro.groebner.idealio import parse_ideal
from gorfro.groebner.quotient import QuotientAlgebra


@pytest.fixture()
def loader() -> CatalogLoader:
    return CatalogLoader()


def _document(entries: str) -> str:
    return textwrap.dedent(
        """\
        meta:
          version: 1
        defaults:
          field_modes: ["q"]
        entries:
        """
    ) + textwrap.indent(textwrap.dedent(entries), "  ")


def test_veronese_multi_indices_are_revlex() -> None:
    assert veronese_multi_indices(1, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(veronese_multi_indices(2, 2)) == 6


@pytest.mark.parametrize(
    ("example", "nvars", "ngens", "dim"),
    [
        ("veronese:1,2", 3, 1, 2),
        ("veronese:1,3", 4, 3, 2),
        ("veronese:1,4", 5, 6, 2),
        ("veronese:2,2", 6, 6, 3),
        ("segre:1,1", 4, 1, 3),
        ("segre:1,2", 6, 3, 4),
        ("plucker2:4", 6, 1, 5),
        ("plucker2:5", 10, 5, 7),
        ("ci:2,2", 4, 2, 2),
    ],
)
def test_entry_sizes(example: str, nvars: int, ngens: int, dim: int) -> None:
    entry = entry_from_id(example)
    assert entry.nvars == nvars
    assert len(entry.generators) == ngens
    assert entry.expected_dim == dim
    assert all(degree(g) == 2 for g in entry.generators)


@pytest.mark.parametrize("example", ["veronese:1,3", "veronese:2,2", "segre:1,2", "plucker2:5"])
def test_parameterization_kills_generators(example: str) -> None:
    assert not any(substitution_residues(entry_from_id(example)))


@pytest.mark.parametrize("example", ["veronese:1,4", "veronese:2,2", "segre:1,2"])
def test_hilbert_function_matches_closed_form(example: str) -> None:
    entry = entry_from_id(example)
    algebra = QuotientAlgebra(buchberger(list(entry.generators)))
    for q in range(5):
        assert algebra.dimension(q) == hilbert_closed_form(entry, q)


def test_classical_subcanonicity() -> None:
    assert classical_subcanonical(veronese_ideal(1, 2)) == (True, 1)
    assert classical_subcanonical(veronese_ideal(1, 3)) == (False, None)
    assert classical_subcanonical(veronese_ideal(3, 2)) == (True, 2)
    assert classical_subcanonical(segre_ideal(1, 1)) == (True, 2)
    assert classical_subcanonical(segre_ideal(1, 2)) == (False, None)
    assert classical_subcanonical(plucker2_ideal(5)) == (True, 5)


def test_complete_intersection_has_no_classical_answer() -> None:
    entry = complete_intersection([2, 2])
    assert entry.id == "ci:2,2"
    assert entry.subcanonical.to_text() == "n/a"
    with pytest.raises(CatalogError) as excinfo:
        classical_subcanonical(entry)
    assert excinfo.value.code == "ERR_CATALOG_NOT_APPLICABLE"


def test_root_data() -> None:
    assert entry_from_id("plucker2:4").root_data == RootData("A3", (0, 1, 0))
    assert entry_from_id("segre:1,2").root_data == RootData("A1xA2", (1, 1, 0))
    assert entry_from_id("veronese:2,2").root_data == RootData("A2", (2, 0))
    assert entry_from_id("ci:2,2").root_data is None


@pytest.mark.parametrize(
    ("text", "code"),
    [
        ("veronese", "ERR_CATALOG_ID"),
        ("veronese:1,x", "ERR_CATALOG_ID"),
        ("cubic:1,2", "ERR_CATALOG_FAMILY"),
        ("segre:1", "ERR_CATALOG_PARAMS"),
        ("plucker2:3", "ERR_CATALOG_PARAMS"),
    ],
)
def test_bad_entry_ids(text: str, code: str) -> None:
    with pytest.raises(CatalogError) as excinfo:
        entry_from_id(text)
    assert excinfo.value.code == code


def test_parse_entry_id() -> None:
    assert parse_entry_id("ci:2,3,4") == ("ci", (2, 3, 4))


def test_export_entry_reads_back() -> None:
    entry = entry_from_id("veronese:1,3")
    text = export_entry(entry)
    assert text.startswith("# veronese:1,3\nring n=4\n")
    assert parse_ideal(text, QQ).generators == entry.generators


def test_packaged_catalog() -> None:
    catalog = Catalog.load()
    assert len(catalog.ids(("core",))) == 8
    assert catalog.ids(("stretch",)) == ["plucker2:5", "veronese:3,2"]
    stretch = catalog.profile("veronese:3,2")
    assert stretch.field_modes == ("p:32003",)
    assert stretch.max_nonzeros == 50000000
    core = catalog.profile("veronese:1,3")
    assert core.field_modes == ("q", "p:32003")
    assert core.max_seconds == 60


def test_adhoc_profile_uses_defaults() -> None:
    catalog = Catalog.load()
    assert "veronese:1,5" not in catalog
    profile = catalog.profile("veronese:1,5")
    assert profile.tier == "adhoc"
    assert profile.entry().nvars == 6


def test_list_lines() -> None:
    lines = Catalog.load().list_lines()
    assert lines[0].split() == ["veronese:1,2", "3", "1", "2", "yes[1]"]
    assert any(line.split()[0] == "ci:2,2" and line.split()[-1] == "n/a" for line in lines)


def test_loader_accepts_minimal_document(loader: CatalogLoader) -> None:
    document = loader.loads(
        _document(
            """\
            - id: "segre:1,1"
              family: segre
              params: [1, 1]
              tier: core
            """
        )
    )
    assert document["entries"][0]["params"] == [1, 1]


def test_loader_rejects_duplicate_ids(loader: CatalogLoader) -> None:
    text = _document(
        """\
        - id: "segre:1,1"
          family: segre
          params: [1, 1]
          tier: core
        - id: "segre:1,1"
          family: segre
          params: [1, 1]
          tier: extra
        """
    )
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads(text)
    assert excinfo.value.issue.code == "ERR_CATALOG_DUP"
    assert excinfo.value.issue.pointer == "/entries/1/id"
    assert excinfo.value.issue.line == 10


def test_loader_rejects_id_mismatch(loader: CatalogLoader) -> None:
    text = _document(
        """\
        - id: "segre:1,2"
          family: segre
          params: [1, 1]
          tier: core
        """
    )
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads(text)
    assert excinfo.value.issue.code == "ERR_CATALOG_ID_MISMATCH"


def test_loader_rejects_unknown_field(loader: CatalogLoader) -> None:
    text = _document(
        """\
        - id: "segre:1,1"
          family: segre
          params: [1, 1]
          tier: core
          colour: blue
        """
    )
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads(text)
    assert excinfo.value.issue.code == "ERR_CATALOG_SCHEMA"


def test_loader_rejects_bad_field_mode(loader: CatalogLoader) -> None:
    text = _document(
        """\
        - id: "segre:1,1"
          family: segre
          params: [1, 1]
          tier: core
          field_modes: ["gf4"]
        """
    )
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads(text)
    assert excinfo.value.issue.pointer == "/entries/0/field_modes/0"


def test_loader_rejects_wrong_version(loader: CatalogLoader) -> None:
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads("meta:\n  version: 2\nentries: []\n")
    assert excinfo.value.issue.code in {"ERR_CATALOG_VERSION", "ERR_CATALOG_SCHEMA"}


def test_loader_reports_yaml_errors(loader: CatalogLoader) -> None:
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads("meta: [\n")
    assert excinfo.value.issue.code == "ERR_CATALOG_YAML"


def test_loader_rejects_empty_and_scalar_documents(loader: CatalogLoader) -> None:
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads("")
    assert excinfo.value.issue.code == "ERR_CATALOG_EMPTY"
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.loads("just text\n")
    assert excinfo.value.issue.code == "ERR_CATALOG_ROOT"


def test_loader_reports_missing_file(tmp_path: Path, loader: CatalogLoader) -> None:
    with pytest.raises(CatalogValidationError) as excinfo:
        loader.load_file(tmp_path / "missing.yaml")
    assert excinfo.value.issue.code == "ERR_CATALOG_IO"


def test_catalog_from_custom_file(tmp_path: Path) -> None:
    path = tmp_path / "mini.yaml"
    path.write_text(
        _document(
            """\
            - id: "ci:2,2"
              family: ci
              params: [2, 2]
              tier: core
              q_max: 6
            """
        ),
        encoding="utf-8",
    )
    catalog = Catalog.load(path)
    assert catalog.ids() == ["ci:2,2"]
    assert catalog.profile("ci:2,2").q_max == 6
    assert catalog.profile("ci:2,2").field_modes == ("q",)
