"""Structured reports: a versioned machine format plus a text renderer.

Every certificate dataclass in the package serializes through `jsonable`;
rationals become exact "p/q" strings and polynomials their canonical text
form, so a report can be re-verified without the original session.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from . import __version__
from .mpoly import MPoly
from .parsing import format_poly
from .univar import UPoly

SCHEMA = "centralcurves.report/1"


def jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, MPoly):
        return format_poly(obj)
    if isinstance(obj, UPoly):
        return [str(c) for c in obj.coeffs]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {"type": type(obj).__name__}
        for f in dataclasses.fields(obj):
            out[f.name] = jsonable(getattr(obj, f.name))
        return out
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj)
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    if hasattr(obj, "vars") and hasattr(obj, "generators"):  # Ideal
        return {
            "type": "Ideal",
            "vars": list(obj.vars),
            "generators": [format_poly(g) for g in obj.generators],
        }
    return repr(obj)


@dataclasses.dataclass
class Report:
    command: str
    status: str  # "ok" | "undecided"
    result: object
    seed: int
    max_steps: int | None
    budget_used: int
    elapsed_seconds: float
    input_path: str | None = None

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "tool_version": __version__,
            "command": self.command,
            "input": self.input_path,
            "seed": self.seed,
            "max_steps": self.max_steps,
            "budget_used": self.budget_used,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
            "status": self.status,
            "result": jsonable(self.result),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def render_text(report):
    """Human-readable rendering of a report."""
    lines = [
        f"command: {report.command}",
        f"status: {report.status}",
    ]
    if report.input_path:
        lines.append(f"input: {report.input_path}")
    lines.extend(_render_value(report.result, indent=0))
    lines.append(
        f"(seed {report.seed}, {report.budget_used} steps, "
        f"{report.elapsed_seconds:.3f}s, v{__version__})"
    )
    return "\n".join(lines)


def _render_value(value, indent):
    pad = "  " * indent
    data = jsonable(value)
    out = []

    def walk(key, node, depth):
        prefix = "  " * depth
        if isinstance(node, dict):
            label = node.get("type", key)
            shown = f"{prefix}{key}: [{label}]" if key else f"{prefix}[{label}]"
            out.append(shown)
            for k, v in node.items():
                if k == "type":
                    continue
                walk(k, v, depth + 1)
        elif isinstance(node, list):
            if all(not isinstance(v, (dict, list)) for v in node):
                out.append(f"{prefix}{key}: {node}")
            else:
                out.append(f"{prefix}{key}:")
                for i, v in enumerate(node):
                    walk(f"[{i}]", v, depth + 1)
        else:
            out.append(f"{prefix}{key}: {node}")

    if isinstance(data, (dict, list)):
        walk("result", data, indent)
    else:
        out.append(f"{pad}result: {data}")
    return out
