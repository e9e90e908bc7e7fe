"""Catalog of examples with per-entry resource profiles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from gorfro.catalog.families import CatalogEntry, build_entry, parse_entry_id
from gorfro.catalog.loader import CatalogLoader
from gorfro.groebner.idealio import format_ideal

TIERS = ("core", "stretch", "extra")


@dataclass(frozen=True)
class CatalogProfile:
    """How one example is run: field modes, degree cap and resource caps."""

    id: str
    family: str
    params: Tuple[int, ...]
    tier: str
    field_modes: Tuple[str, ...]
    label: str = ""
    q_max: Optional[int] = None
    max_seconds: Optional[float] = None
    max_nonzeros: Optional[int] = None

    @property
    def slow(self) -> bool:
        return self.tier != "core"

    def entry(self) -> CatalogEntry:
        return _cached_entry(self.family, self.params)


@lru_cache(maxsize=None)
def _cached_entry(family: str, params: Tuple[int, ...]) -> CatalogEntry:
    return build_entry(family, params)


_PROFILE_KEYS = ("field_modes", "q_max", "max_seconds", "max_nonzeros")


def _merge(defaults: Mapping[str, Any], entry: Mapping[str, Any]) -> Dict[str, Any]:
    merged = {key: defaults.get(key) for key in _PROFILE_KEYS}
    merged.update({key: entry[key] for key in _PROFILE_KEYS if key in entry})
    return merged


class Catalog:
    """Validated catalog document, indexed by example id."""

    def __init__(self, document: Mapping[str, Any]) -> None:
        defaults = document.get("defaults", {})
        self._defaults = {key: defaults.get(key) for key in _PROFILE_KEYS}
        self._profiles: Dict[str, CatalogProfile] = {}
        for raw in document["entries"]:
            merged = _merge(defaults, raw)
            self._profiles[raw["id"]] = CatalogProfile(
                id=raw["id"],
                family=raw["family"],
                params=tuple(raw["params"]),
                tier=raw["tier"],
                field_modes=tuple(merged["field_modes"] or ("q",)),
                label=raw.get("label", ""),
                q_max=merged["q_max"],
                max_seconds=merged["max_seconds"],
                max_nonzeros=merged["max_nonzeros"],
            )

    @classmethod
    def load(cls, path: Union[str, Path, None] = None, *, loader: Optional[CatalogLoader] = None) -> "Catalog":
        return cls((loader or CatalogLoader()).load_file(path))

    def __contains__(self, example_id: str) -> bool:
        return example_id in self._profiles

    def __len__(self) -> int:
        return len(self._profiles)

    def ids(self, tiers: Sequence[str] = TIERS) -> List[str]:
        """Example ids of the given tiers, in document order."""

        return [pid for pid, profile in self._profiles.items() if profile.tier in tiers]

    def profiles(self, tiers: Sequence[str] = TIERS) -> List[CatalogProfile]:
        return [self._profiles[pid] for pid in self.ids(tiers)]

    def profile(self, example_id: str) -> CatalogProfile:
        """Profile of a listed id; other well-formed family ids get the document defaults."""

        if example_id in self._profiles:
            return self._profiles[example_id]
        family, params = parse_entry_id(example_id)
        return CatalogProfile(
            id=example_id,
            family=family,
            params=params,
            tier="adhoc",
            field_modes=tuple(self._defaults["field_modes"] or ("q",)),
            q_max=self._defaults["q_max"],
            max_seconds=self._defaults["max_seconds"],
            max_nonzeros=self._defaults["max_nonzeros"],
        )

    def entry(self, example_id: str) -> CatalogEntry:
        return self.profile(example_id).entry()

    def list_lines(self) -> List[str]:
        """``id  n  #gens  dim  subcanonical[N]`` for every listed entry."""

        rows = []
        for profile in self.profiles():
            entry = profile.entry()
            rows.append(
                (
                    entry.id,
                    str(entry.nvars),
                    str(len(entry.generators)),
                    str(entry.expected_dim),
                    entry.subcanonical.to_text(),
                )
            )
        widths = [max(len(row[k]) for row in rows) for k in range(5)] if rows else [0] * 5
        return ["  ".join(cell.ljust(widths[k]) for k, cell in enumerate(row)).rstrip() for row in rows]


def export_entry(entry: CatalogEntry) -> str:
    """Entry in the ideal text format, with a comment header naming it."""

    body = format_ideal(entry.nvars, list(entry.generators))
    return f"# {entry.id}\n{body}"

