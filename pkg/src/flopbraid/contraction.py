"""Contraction data: marked Dynkin diagrams, one per singular point.

Input documents look like::

    {"points": [{"type": "E6", "white": [0, 2], "label": "p1"}]}

White vertices index the contracted curves, in the listed order; every
other vertex is black.  ``multiplicities`` may be attached per point as
metadata, nothing downstream reads it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .rootsys import DiagramError, DynkinDiagram, parse_type


class SpecError(ValueError):
    """Invalid contraction document; ``where`` pins the offending field."""

    def __init__(self, message: str, point: int | None = None, field: str | None = None):
        self.point = point
        self.field = field
        where = []
        if point is not None:
            where.append(f"points[{point}]")
        if field is not None:
            where.append(field)
        prefix = ".".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


@dataclass(frozen=True)
class ContractionPoint:
    diagram: DynkinDiagram
    white: tuple[int, ...]
    label: str | None = None
    multiplicities: tuple[int, ...] | None = None

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.diagram.rank) if v not in self.white)

    @property
    def n_curves(self) -> int:
        return len(self.white)


@dataclass(frozen=True)
class ContractionSpec:
    points: tuple[ContractionPoint, ...]
    labels: tuple[str | None, ...] = field(default=())

    @property
    def n_curves(self) -> int:
        return sum(p.n_curves for p in self.points)


def make_point(type_name: str, white, label=None, multiplicities=None, *, index=None) -> ContractionPoint:
    try:
        diagram = parse_type(type_name)
    except DiagramError as exc:
        raise SpecError(str(exc), index, "type") from None
    if not isinstance(white, (list, tuple)):
        raise SpecError("white must be a list of vertex indices", index, "white")
    if not white:
        raise SpecError("white set is empty", index, "white")
    seen = set()
    for k, v in enumerate(white):
        if not isinstance(v, int) or isinstance(v, bool):
            raise SpecError(f"vertex {v!r} is not an integer", index, f"white[{k}]")
        if not 0 <= v < diagram.rank:
            raise SpecError(f"vertex {v} out of range for {diagram}", index, f"white[{k}]")
        if v in seen:
            raise SpecError(f"duplicate vertex {v}", index, f"white[{k}]")
        seen.add(v)
    if multiplicities is not None:
        if len(multiplicities) != len(white):
            raise SpecError("one multiplicity per white vertex expected", index, "multiplicities")
        multiplicities = tuple(int(m) for m in multiplicities)
    return ContractionPoint(diagram, tuple(white), label, multiplicities)


def parse_spec(document) -> ContractionSpec:
    """Validate a decoded JSON document (or a JSON string)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SpecError(f"not valid JSON ({exc})") from None
    if not isinstance(document, dict) or "points" not in document:
        raise SpecError("expected an object with a 'points' list")
    raw = document["points"]
    if not isinstance(raw, list) or not raw:
        raise SpecError("'points' must be a nonempty list", field="points")
    points = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise SpecError("point must be an object", i)
        for key in ("type", "white"):
            if key not in entry:
                raise SpecError("missing field", i, key)
        points.append(make_point(entry["type"], entry["white"], entry.get("label"),
                                 entry.get("multiplicities"), index=i))
    return ContractionSpec(tuple(points), tuple(p.label for p in points))


def load_spec(path) -> ContractionSpec:
    return parse_spec(Path(path).read_text())


def serialize_spec(spec: ContractionSpec) -> dict:
    out = []
    for p in spec.points:
        entry = {"type": p.diagram.name, "white": list(p.white)}
        if p.label is not None:
            entry["label"] = p.label
        if p.multiplicities is not None:
            entry["multiplicities"] = list(p.multiplicities)
        out.append(entry)
    return {"points": out}


def curve_index_map(spec: ContractionSpec) -> dict[int, tuple[int, int]]:
    """Global curve index (1-based) -> (point index, local curve index, 1-based)."""
    table = {}
    k = 1
    for p_idx, point in enumerate(spec.points):
        for local in range(1, point.n_curves + 1):
            table[k] = (p_idx, local)
            k += 1
    return table
