"""Catalog document loader: YAML with source locations, checked against a JSON schema."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union

import yaml
from jsonschema import Draft202012Validator, ValidationError as JsonSchemaValidationError
from yaml.nodes import MappingNode, Node, ScalarNode, SequenceNode

from gorfro.errors import InputError

PointerPath = Tuple[Union[str, int], ...]
Location = Tuple[int, int]

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "schemas"
DEFAULT_CATALOG = Path(__file__).resolve().parent / "data" / "catalog.yaml"


@dataclass(frozen=True)
class ValidationIssue:
    """First problem found in a catalog document."""

    code: str
    message: str
    pointer: str
    line: Optional[int] = None
    column: Optional[int] = None
    source: Optional[str] = None


class CatalogValidationError(InputError):
    """Raised when a catalog document is not valid YAML or violates the schema."""

    def __init__(self, issue: ValidationIssue) -> None:
        self.issue = issue
        where = f" (line {issue.line}, col {issue.column})" if issue.line is not None else ""
        source = f" in {issue.source}" if issue.source else ""
        super().__init__(issue.code, f"{issue.message}{where}{source}", pointer=issue.pointer)


def _pointer(path: PointerPath) -> str:
    return "/" + "/".join(str(part) for part in path) if path else "/"


def _mark(node: Node) -> Location:
    return node.start_mark.line + 1, node.start_mark.column + 1


_SCALARS: Dict[str, Callable[[str], Any]] = {
    "tag:yaml.org,2002:null": lambda _: None,
    "tag:yaml.org,2002:bool": lambda v: v.lower() in {"true", "yes", "on"},
    "tag:yaml.org,2002:int": int,
    "tag:yaml.org,2002:float": float,
}


class _LocatedDocument:
    """Python value of a YAML document plus the line/column of every JSON pointer."""

    def __init__(self, text: str, source: Optional[str]) -> None:
        self.source = source
        self.locations: Dict[str, Location] = {}
        try:
            root = yaml.compose(text, Loader=yaml.SafeLoader)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            raise CatalogValidationError(
                ValidationIssue(
                    code="ERR_CATALOG_YAML",
                    message=getattr(exc, "problem", None) or "Invalid YAML input",
                    pointer="/",
                    line=mark.line + 1 if mark else None,
                    column=mark.column + 1 if mark else None,
                    source=source,
                )
            ) from exc
        if root is None:
            raise CatalogValidationError(
                ValidationIssue("ERR_CATALOG_EMPTY", "Catalog document is empty", "/", source=source)
            )
        self.value = self._convert(root, ())

    def _issue(self, code: str, message: str, node: Node, path: PointerPath) -> CatalogValidationError:
        line, column = _mark(node)
        return CatalogValidationError(ValidationIssue(code, message, _pointer(path), line, column, self.source))

    def _convert(self, node: Node, path: PointerPath) -> Any:
        self.locations.setdefault(_pointer(path), _mark(node))
        if isinstance(node, ScalarNode):
            convert = _SCALARS.get(node.tag, str)
            try:
                return convert(node.value)
            except ValueError as exc:
                raise self._issue("ERR_CATALOG_SCALAR", f"Invalid literal '{node.value}'", node, path) from exc
        if isinstance(node, SequenceNode):
            return [self._convert(child, path + (idx,)) for idx, child in enumerate(node.value)]
        if isinstance(node, MappingNode):
            mapping: Dict[str, Any] = {}
            for key_node, value_node in node.value:
                if not isinstance(key_node, ScalarNode):
                    raise self._issue("ERR_CATALOG_KEY", "Mapping keys must be scalars", key_node, path)
                key = key_node.value
                if key in mapping:
                    raise self._issue("ERR_CATALOG_DUPLICATE_KEY", f"Duplicate key '{key}'", value_node, path + (key,))
                mapping[key] = self._convert(value_node, path + (key,))
            return mapping
        raise self._issue("ERR_CATALOG_NODE", f"Unsupported YAML node {type(node).__name__}", node, path)

    def locate(self, pointer: str) -> Tuple[Optional[int], Optional[int]]:
        parts = pointer.strip("/").split("/") if pointer != "/" else []
        while parts:
            candidate = "/" + "/".join(parts)
            if candidate in self.locations:
                return self.locations[candidate]
            parts.pop()
        return self.locations.get("/", (None, None))


class CatalogLoader:
    """Loads catalog documents and rejects schema violations and duplicate ids."""

    def __init__(self, schema_path: Optional[Union[str, Path]] = None) -> None:
        self._schema_path = Path(schema_path) if schema_path else SCHEMA_DIR / "catalog.json"
        if not self._schema_path.exists():
            raise FileNotFoundError(f"Schema file not found: {self._schema_path}")
        with self._schema_path.open("r", encoding="utf-8") as handle:
            self._validator = Draft202012Validator(json.load(handle))

    def load_file(self, path: Union[str, Path, None] = None) -> Mapping[str, Any]:
        target = Path(path) if path is not None else DEFAULT_CATALOG
        try:
            text = target.read_text(encoding="utf-8")
        except OSError as exc:
            raise CatalogValidationError(
                ValidationIssue("ERR_CATALOG_IO", f"Cannot read catalog: {exc.strerror}", "/", source=str(target))
            ) from exc
        return self.loads(text, source=str(target))

    def loads(self, text: str, *, source: Optional[str] = None) -> Mapping[str, Any]:
        document = _LocatedDocument(text, source)
        if not isinstance(document.value, dict):
            raise CatalogValidationError(
                ValidationIssue("ERR_CATALOG_ROOT", "Top-level catalog document must be a mapping", "/", source=source)
            )
        self._run_jsonschema(document)
        self._assert_unique_ids(document)
        self._assert_ids_match(document)
        return document.value

    def _fail(self, document: _LocatedDocument, code: str, message: str, pointer: str) -> CatalogValidationError:
        line, column = document.locate(pointer)
        return CatalogValidationError(ValidationIssue(code, message, pointer, line, column, document.source))

    def _run_jsonschema(self, document: _LocatedDocument) -> None:
        errors = sorted(self._validator.iter_errors(document.value), key=_error_sort_key)
        if errors:
            error = errors[0]
            code = "ERR_CATALOG_VERSION" if list(error.absolute_path) == ["meta", "version"] else "ERR_CATALOG_SCHEMA"
            raise self._fail(document, code, error.message, _pointer(tuple(error.absolute_path)))

    def _assert_unique_ids(self, document: _LocatedDocument) -> None:
        seen: Dict[str, int] = {}
        for index, entry in enumerate(document.value["entries"]):
            identifier = entry["id"]
            if identifier in seen:
                raise self._fail(
                    document,
                    "ERR_CATALOG_DUP",
                    f"Duplicate example id '{identifier}' (first at index {seen[identifier]})",
                    f"/entries/{index}/id",
                )
            seen[identifier] = index

    def _assert_ids_match(self, document: _LocatedDocument) -> None:
        for index, entry in enumerate(document.value["entries"]):
            expected = f"{entry['family']}:{','.join(str(p) for p in entry['params'])}"
            if entry["id"] != expected:
                raise self._fail(
                    document,
                    "ERR_CATALOG_ID_MISMATCH",
                    f"Example id '{entry['id']}' does not match family and params ('{expected}')",
                    f"/entries/{index}/id",
                )


def _error_sort_key(error: JsonSchemaValidationError) -> Tuple[int, List[str]]:
    path = [str(part) for part in error.absolute_path]
    return len(path), path


__all__ = ["CatalogLoader", "CatalogValidationError", "ValidationIssue", "DEFAULT_CATALOG"]
