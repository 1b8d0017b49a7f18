"""Deterministic rendering of {meta, rows} documents as json, csv or markdown.

Floats are fixed to 12 significant digits in every format so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import io
import json
from typing import Any

FORMATS = ("json", "csv", "markdown")


def fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(fmt_float(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt_float(value)
    if value is None:
        return ""
    return str(value)


def render(doc: dict, fmt: str) -> str:
    """Render {"meta": {...}, "rows": [{...}, ...]} in the requested format."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    meta = doc.get("meta", {})
    rows = doc.get("rows", [])
    if fmt == "json":
        return json.dumps(_round_floats(doc), indent=2, sort_keys=False) + "\n"

    header = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        out = io.StringIO()
        for key, value in meta.items():
            out.write(f"# {key} = {_cell(value)}\n")
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_cell(row.get(k)) for k in header) + "\n")
        return out.getvalue()

    out = io.StringIO()
    for key, value in meta.items():
        out.write(f"- {key}: {_cell(value)}\n")
    if header:
        out.write("\n| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join("---" for _ in header) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(_cell(row.get(k)) for k in header) + " |\n")
    return out.getvalue()
