"""JSON surface documents and exact rational rendering.

A surface document looks like::

    {
      "name": "degree 13 with 732 nodes",
      "c1_sq": 1053,
      "c2": [1599, 1],
      "singularities": [{"kind": "A", "n": 1, "count": 732}]
    }

``c1_sq`` and ``c2`` are integers or ``[numerator, denominator]`` pairs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .chern_core import ADESingularity, SingularityProfile, SurfaceRecord

__all__ = ["DocumentError", "format_rational", "parse_document", "parse_rational", "serialize_document"]


class DocumentError(ValueError):
    """Malformed surface document; carries a line/column or a field path."""

    def __init__(self, message: str, *, line: Optional[int] = None, column: Optional[int] = None,
                 path: Optional[str] = None) -> None:
        self.line = line
        self.column = column
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(f"at {path}")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)


def format_rational(x: Fraction) -> str:
    """``p/q`` in lowest terms, or a bare integer when q == 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    try:
        return Fraction(int(num), int(den) if sep else 1)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _rational_field(value: Any, path: str) -> Fraction:
    if _is_int(value):
        return Fraction(value)
    if isinstance(value, list) and len(value) == 2 and all(_is_int(v) for v in value):
        if value[1] == 0:
            raise DocumentError("zero denominator", path=path)
        return Fraction(value[0], value[1])
    raise DocumentError("expected an integer or a [numerator, denominator] pair", path=path)


def _int_field(entry: dict, key: str, path: str) -> int:
    if key not in entry:
        raise DocumentError(f"missing field {key!r}", path=path)
    if not _is_int(entry[key]):
        raise DocumentError("expected an integer", path=f"{path}.{key}")
    return entry[key]


def parse_document(text: str) -> SurfaceRecord:
    """Parse a JSON surface document.

    Structural problems raise :class:`DocumentError`; singularity types that
    parse but violate the ADE index ranges raise ``DomainError``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", path="$")
    for key in ("c1_sq", "c2"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}", path="$")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("expected a string", path="$.name")
    c1_sq = _rational_field(doc["c1_sq"], "$.c1_sq")
    c2 = _rational_field(doc["c2"], "$.c2")

    sings = doc.get("singularities", [])
    if not isinstance(sings, list):
        raise DocumentError("expected a list", path="$.singularities")
    entries = []
    for i, entry in enumerate(sings):
        path = f"$.singularities[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError("expected an object", path=path)
        kind = entry.get("kind")
        if kind not in ("A", "D", "E"):
            raise DocumentError("kind must be one of 'A', 'D', 'E'", path=f"{path}.kind")
        n = _int_field(entry, "n", path)
        count = _int_field(entry, "count", path)
        if count < 0:
            raise DocumentError("count must be non-negative", path=f"{path}.count")
        entries.append((kind, n, count))
    profile = SingularityProfile([(ADESingularity(kind, n), count) for kind, n, count in entries])
    return SurfaceRecord(name, c1_sq, c2, profile)


def _rational_json(x: Fraction) -> Any:
    return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]


def serialize_document(record: SurfaceRecord) -> str:
    doc = {
        "name": record.name,
        "c1_sq": _rational_json(record.c1_sq),
        "c2": _rational_json(record.c2),
        "singularities": [
            {"kind": s.kind, "n": s.n, "count": c} for s, c in record.profile.items()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
