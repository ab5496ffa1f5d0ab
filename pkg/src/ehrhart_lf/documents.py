"""JSON documents: polytope input files and command reports.

Input::

    {"name": "P1", "dim": 3, "vertices": [["0", "0", "0"], ["4", "0", "0"], ...]}

Reports::

    {"schema": "ehrhart-lf/1", "command": {...}, "status": "ok", "payload": {...}}

Rationals are always strings ("-3/4"), never floats.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import EhrhartError, ParseError
from .exactmath import format_rational, parse_rational
from .geometry import Polytope

SCHEMA = "ehrhart-lf/1"


def parse_document(doc) -> Polytope:
    """Build a Polytope from a decoded JSON object or a JSON string."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", "document") from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "document")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("must be a string", "name")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"expected a positive integer, got {dim!r}", "dim")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise ParseError("expected a nonempty list of coordinate lists", "vertices")
    points = []
    for i, v in enumerate(verts):
        if not isinstance(v, list):
            raise ParseError("expected a list of coordinates", f"vertices[{i}]")
        if len(v) != dim:
            raise ParseError(f"expected {dim} coordinates, got {len(v)}", f"vertices[{i}]")
        coords = []
        for j, c in enumerate(v):
            loc = f"vertices[{i}][{j}]"
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ParseError(f"expected a rational string, got {c!r}", loc)
            try:
                coords.append(parse_rational(str(c)))
            except ValueError as exc:
                raise ParseError(str(exc), loc) from None
        points.append(tuple(coords))
    try:
        return Polytope(tuple(points), name=name)
    except EhrhartError as exc:
        raise ParseError(str(exc), "vertices") from None


def load_document(path: str) -> Polytope:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path) from None
    return parse_document(text)


def polytope_to_dict(p: Polytope) -> dict:
    out = {}
    if p.name is not None:
        out["name"] = p.name
    out["dim"] = p.dim
    out["vertices"] = [[format_rational(c) for c in v] for v in p.vertices]
    return out


def emit_document(p: Polytope) -> str:
    return json.dumps(polytope_to_dict(p), indent=2) + "\n"


def report(command: dict, status: str, payload: Optional[dict]) -> dict:
    return {"schema": SCHEMA, "command": command, "status": status, "payload": payload}


def dump_report(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
