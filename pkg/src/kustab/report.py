"""Report serialization shared by the CLI.

Text mode prints reduced rationals without a trailing "/1"; JSON mode keeps
the canonical "p/q" form (including "p/1") so machine consumers never need
to special-case integers.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .exact import QuadNumber
from .variety import ChernVector


def fmt_rat_text(q: Fraction) -> str:
    return str(q)


def fmt_rat_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_quad_text(q: QuadNumber) -> str:
    if q.is_rational:
        return fmt_rat_text(q.a)
    if q.b == 1:
        rad = f"sqrt({fmt_rat_text(q.F)})"
    elif q.b == -1:
        rad = f"-sqrt({fmt_rat_text(q.F)})"
    else:
        rad = f"{fmt_rat_text(q.b)}*sqrt({fmt_rat_text(q.F)})"
    if q.a == 0:
        return rad
    sign = "+" if (q.b > 0) else "-"
    mag = rad if q.b > 0 else (rad[1:] if rad.startswith("-") else rad)
    return f"{fmt_rat_text(q.a)} {sign} {mag}"


def to_jsonable(obj):
    """Recursively convert exact values and dataclasses to JSON-safe data."""
    if isinstance(obj, Fraction):
        return fmt_rat_json(obj)
    if isinstance(obj, QuadNumber):
        return {"a": fmt_rat_json(obj.a), "b": fmt_rat_json(obj.b),
                "radicand": fmt_rat_json(obj.F)}
    if isinstance(obj, ChernVector):
        return [fmt_rat_json(c) for c in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, frozenset):
        return sorted(str(x) for x in obj)
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


def to_text_value(obj) -> str:
    """Human-oriented rendering of a payload value."""
    if isinstance(obj, Fraction):
        return fmt_rat_text(obj)
    if isinstance(obj, QuadNumber):
        return fmt_quad_text(obj)
    if isinstance(obj, ChernVector):
        return obj.text()
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, dict):
        inner = ", ".join(f"{k}={to_text_value(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_text_value(x) for x in obj) + "]"
    if isinstance(obj, frozenset):
        return "{" + ", ".join(sorted(str(x) for x in obj)) + "}"
    if obj is None:
        return "none"
    return str(obj)
