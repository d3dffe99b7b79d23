"""Rendering suite reports and hunt records as text or JSON."""

from __future__ import annotations

import json
from typing import Any

from .verify.outcome import Status, SuiteReport

COLUMNS = ("theorem", "pass", "fail", "inapplicable", "skipped")


def _table(header: tuple[str, ...], rows: list[tuple[Any, ...]]) -> list[str]:
    cells = [tuple(str(c) for c in r) for r in [header, *rows]]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for j, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return lines


def dumps_structured(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_report(report: SuiteReport, fmt: str = "human", *, timing: bool = False) -> str:
    if fmt == "structured":
        return dumps_structured(report.to_json(timing))
    if fmt != "human":
        raise ValueError(f"unknown report format {fmt!r}")
    by = report.by_theorem()
    rows = [(t, c["pass"], c["fail"], c["inapplicable"], c["skipped"]) for t, c in by.items()]
    agg = report.counts()
    if rows:
        rows.append(("total", agg["pass"], agg["fail"], agg["inapplicable"], agg["skipped"]))
    lines = _table(COLUMNS, rows)
    noteworthy = [o for o in report.outcomes if o.status in (Status.FAIL, Status.SKIPPED)]
    if noteworthy:
        lines.append("")
        for o in noteworthy:
            where = f"{o.group}" + (f" / {o.normal['name']} (order {o.normal['order']})" if o.normal else "")
            detail = o.reason if o.status is Status.SKIPPED else json.dumps(o.witness, sort_keys=True)
            ms = f" [{o.millis:.1f} ms]" if timing and o.millis is not None else ""
            lines.append(f"{o.status.value.upper():8} {o.theorem:5} {where}: {detail}{ms}")
    return "\n".join(lines) + "\n"


def render_hunt(records: list[dict[str, Any]], fmt: str = "human") -> str:
    if fmt == "structured":
        return dumps_structured({"records": records})
    header = ("group", "normal", "|N|", "n", "dl", "h", "h<=n", "dl<=n(n+1)/2", "dl<=3n", "dl<=n")

    def mark(v):
        return "-" if v is None else ("yes" if v else "NO")

    rows = [
        (
            r["group"],
            r["normal"]["name"],
            r["normal"]["order"],
            r["n"],
            r["dl"],
            r["h"],
            mark(r["h_le_n"]),
            mark(r["dl_le_quadratic"]),
            mark(r["dl_le_3n"]),
            mark(r["dl_le_n"]),
        )
        for r in records
    ]
    return "\n".join(_table(header, rows)) + "\n"


__all__ = ["render_hunt", "render_report"]
