"""
JSON and aligned-text renderers for suite, analysis and catalog output
"""

import json
from typing import Any, Dict, List, Sequence

from .results import SuiteReport, Verdict


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _table(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    cells = [[str(value) for value in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(value)) for w, value in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(value.ljust(w) for value, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_suite(report: SuiteReport, fmt: str = "json") -> str:
    if fmt == "json":
        return report.to_json()

    rows = [
        (cell.group_name, cell.prime, cell.claim_id.value, cell.verdict.value,
         cell.hypothesis_held, cell.conclusion_held)
        for cell in report.cells
    ]
    parts = [_table(("group", "p", "claim", "verdict", "hypothesis", "conclusion"), rows)]

    claim_rows = [
        (claim, *(counts[v.value] for v in Verdict))
        for claim, counts in report.claim_totals().items()
    ]
    parts.append(_table(("claim", *(v.value for v in Verdict)), claim_rows))

    totals = report.totals()
    parts.append("totals: " + ", ".join(f"{v.value}={totals[v.value]}" for v in Verdict))
    for cell in report.failures:
        parts.append(f"FAIL {cell.claim_id.value} {cell.group_name} p={cell.prime}: {to_json(cell.witness)}")
    return "\n\n".join(parts) + "\n"


def render_analysis(analysis: Dict[str, Any], fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(analysis)

    fusion = analysis["fusion"]
    lines = [
        f"group:                {analysis['group']}",
        f"order:                {analysis['order']} (degree {analysis['degree']})",
        f"prime:                {analysis['prime']}",
        f"sylow order:          {analysis['sylow_order']}",
        f"p-nilpotent:          {analysis['p_nilpotent']}",
        f"frobenius criterion:  {analysis['frobenius']['p_nilpotent']}",
        f"controls {analysis['class']}: {analysis['controls_fusion']} "
        f"(a={fusion['condition_a']}, b={fusion['condition_b']}, pairs={fusion['checked_count']})",
        f"upper central series: {' <= '.join(str(n) for n in analysis['upper_central_series'])}",
    ]
    if "witness_a" in fusion:
        lines.append(f"witness (a):          {fusion['witness_a']}")
    if "witness_b" in fusion:
        lines.append(f"witness (b):          {fusion['witness_b']}")
    return "\n".join(lines) + "\n"


def render_catalog(listing: List[Dict[str, Any]], fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(listing)
    rows = [(entry["name"], entry["order"], entry["degree"]) for entry in listing]
    return _table(("name", "order", "degree"), rows) + "\n"
