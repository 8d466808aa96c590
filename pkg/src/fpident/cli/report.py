"""Report documents: JSON with integers as decimal strings, plus a plain text rendering."""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from ..polycore import IntPoly, RatPoly, format_poly

SCHEMA_VERSION = "1"


def encode(value):
    """JSON-ready form; ints become strings, polynomials become {coeffs, text}."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (IntPoly, RatPoly)):
        return {"coeffs": [encode(c) for c in value.coeffs], "text": format_poly(list(value.coeffs))}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=repr) if isinstance(value, (set, frozenset)) else value
        return [encode(v) for v in items]
    if is_dataclass(value):
        return {f.name: encode(getattr(value, f.name)) for f in fields(value)}
    return str(value)


def document(command: list, results: dict, elapsed_ms: int | None = None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": list(command), "results": encode(results)}
    if elapsed_ms is not None:
        doc["timing"] = {"elapsed_ms": str(elapsed_ms)}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def render_text(results: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key in sorted(results):
        val = results[key]
        if isinstance(val, dict) and val and not _is_poly(val):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and all(isinstance(v, dict) and not _is_poly(v)
                                                   for v in val):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(val):
                lines.append(f"{pad}  [{i}]")
                lines.append(render_text(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {_short(val)}")
    return "\n".join(lines)


def _is_poly(val) -> bool:
    return isinstance(val, dict) and set(val) == {"coeffs", "text"}


def _short(val) -> str:
    if _is_poly(val):
        return val["text"]
    if isinstance(val, list):
        return "[" + ", ".join(_short(v) for v in val) + "]"
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    return str(val)
