"""Text and JSON rendering of run documents."""

from __future__ import annotations

from typing import Any, List, Mapping

from gorfro.diagnostics.report import dumps
from gorfro.groebner.quotient import HilbertNumerator
from gorfro.koszul.betti import BettiTable, render_betti_text


def _yes(value: Any) -> str:
    return "yes" if value else "no"


def render_report_text(report: Mapping[str, Any]) -> str:
    table = BettiTable(tuple(tuple(t) for t in report["betti"]), report["n"])  # type: ignore[misc]
    numerator = HilbertNumerator(tuple(report.get("hilbert_numerator", [0])), report["n"])
    witnesses = {w["kind"]: w["detail"] for w in report.get("witnesses", [])}
    sub = report["subcanonical"]
    if not sub["applies"]:
        sub_text = "n/a"
    else:
        sub_text = f"yes, N={sub['N']}" if sub["holds"] else "no"
    gorenstein = _yes(report["gorenstein"])
    if not report["gorenstein"]:
        reason = witnesses.get("type") or witnesses.get("not_cohen_macaulay")
        gorenstein += f" ({reason})" if reason else ""
    frobenius = _yes(report["frobenius"])
    if not report["frobenius"]:
        reason = witnesses.get("top_class") or witnesses.get("degenerate_pairing")
        frobenius += f" ({reason})" if reason else ""
    lines = [
        f"example: {report['example']} [{report['field_mode']}]",
        f"n={report['n']} dim={report['dim']} codim={report['codim']} pd={report['pd']} type={report['type']}",
        render_betti_text(table).rstrip("\n"),
        f"hilbert numerator: {numerator.to_text()}",
        f"h-vector: {' '.join(map(str, report.get('h_vector', [])))}",
        f"cohen-macaulay: {_yes(report['cohen_macaulay'])}",
        f"gorenstein: {gorenstein}",
        f"frobenius: {frobenius}",
        f"subcanonical: {sub_text}",
        "theorems: " + " ".join(f"{name}={check['status']}" for name, check in sorted(report["theorems"].items())),
    ]
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    if report.get("runtime_ms") is not None:
        lines.append(f"runtime: {report['runtime_ms']:.1f} ms")
    return "\n".join(lines) + "\n"


def render_document(document: Mapping[str, Any], *, as_json: bool) -> str:
    """JSON as-is, or a FAILED banner followed by one text block per report."""

    if as_json:
        return dumps(document)
    blocks = []
    if document["status"] == "fail":
        failed = document["summary"]["failed"] + document["summary"]["field_mismatches"]
        blocks.append("FAILED: " + ", ".join(failed) + "\n")
    for report in document["reports"]:
        blocks.append(render_report_text(report))
    for error in document["errors"]:
        blocks.append(
            f"ERROR {error['example']} [{error['field_mode']}]: "
            f"[{error['code']}] {error['message']} at {error['pointer']}\n"
        )
    return "\n".join(blocks)


def render_betti_document(example: str, field_mode: str, table: BettiTable, numerator: List[int], *, as_json: bool) -> str:
    if as_json:
        return dumps(
            {
                "example": example,
                "field_mode": field_mode,
                **table.to_json(),
                "hilbert_numerator": numerator,
            }
        )
    return f"example: {example} [{field_mode}]\n" + render_betti_text(table)
