"""Built-in embedding families and the catalog document."""

from gorfro.catalog.catalog import TIERS, Catalog, CatalogProfile, export_entry
from gorfro.catalog.families import (
    FAMILIES,
    NOT_APPLICABLE,
    CatalogEntry,
    CatalogError,
    ClassicalSubcanonicity,
    RootData,
    build_entry,
    classical_subcanonical,
    complete_intersection,
    entry_from_id,
    hilbert_closed_form,
    parse_entry_id,
    plucker2_ideal,
    segre_ideal,
    substitution_residues,
    veronese_ideal,
    veronese_multi_indices,
)
from gorfro.catalog.loader import DEFAULT_CATALOG, CatalogLoader, CatalogValidationError, ValidationIssue

__all__ = [
    "DEFAULT_CATALOG",
    "FAMILIES",
    "NOT_APPLICABLE",
    "TIERS",
    "Catalog",
    "CatalogEntry",
    "CatalogError",
    "CatalogLoader",
    "CatalogProfile",
    "CatalogValidationError",
    "ClassicalSubcanonicity",
    "RootData",
    "ValidationIssue",
    "build_entry",
    "classical_subcanonical",
    "complete_intersection",
    "entry_from_id",
    "export_entry",
    "hilbert_closed_form",
    "parse_entry_id",
    "plucker2_ideal",
    "segre_ideal",
    "substitution_residues",
    "veronese_ideal",
    "veronese_multi_indices",
]
