"""Validated computads: 2-computads, double computads, paths and shapes.

Identifiers are opaque strings. Empty paths carry an explicit anchor object,
so every path has a well-defined start and end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Mapping


class Direction(str, Enum):
    H = "h"
    V = "v"

    @property
    def other(self) -> "Direction":
        return Direction.V if self is Direction.H else Direction.H


SIDES = ("top", "right", "left", "bottom")


@dataclass(frozen=True)
class Shape:
    """Boundary lengths of a 2-cell: top, right, left, bottom."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError(f"negative shape entry in {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_square(self) -> bool:
        return self.as_tuple() == (1, 1, 1, 1)

    @property
    def is_horizontal_bigon(self) -> bool:
        return self.as_tuple() == (1, 0, 0, 1)

    @property
    def is_vertical_bigon(self) -> bool:
        return self.as_tuple() == (0, 1, 1, 0)

    @property
    def monogon_side(self) -> str | None:
        """'N', 'E', 'W' or 'S' for the four monogon shapes, else None."""
        return {
            (1, 0, 0, 0): "N",
            (0, 1, 0, 0): "E",
            (0, 0, 1, 0): "W",
            (0, 0, 0, 1): "S",
        }.get(self.as_tuple())

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class Path:
    """A composable sequence of 1-cells; `anchor` is always the start object."""

    direction: Direction
    cells: tuple[str, ...]
    anchor: str

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        inner = " ".join(self.cells)
        return f"({self.direction.value}{' ' + inner if inner else ''}) @{self.anchor}"


@dataclass(frozen=True)
class Violation:
    kind: str
    cell: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}({self.cell}): {self.detail}"


class ValidationError(Exception):
    """Raised with the complete list of violations found."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = sorted(violations, key=lambda v: (v.cell, v.kind, v.detail))
        super().__init__("; ".join(str(v) for v in self.violations))


class _CellTable:
    """Shared path helpers for anything with 1-cells keyed by direction."""

    objects: tuple[str, ...]

    def table1(self, direction: Direction) -> Mapping[str, tuple[str, str]]:
        raise NotImplementedError

    def src(self, direction: Direction, cell: str) -> str:
        return self.table1(direction)[cell][0]

    def tgt(self, direction: Direction, cell: str) -> str:
        return self.table1(direction)[cell][1]

    def path(self, direction: Direction, cells: Iterable[str], anchor: str | None = None) -> Path:
        """Build a path, checking composability; anchor required only when empty."""
        cells = tuple(cells)
        table = self.table1(direction)
        if not cells:
            if anchor is None or anchor not in self.objects:
                raise ValidationError([Violation("DanglingId", str(anchor), "empty path needs a known anchor")])
            return Path(direction, (), anchor)
        for c in cells:
            if c not in table:
                raise ValidationError([Violation("DanglingId", c, f"unknown {direction.value}-cell")])
        for x, y in zip(cells, cells[1:]):
            if table[x][1] != table[y][0]:
                raise ValidationError([Violation("NonComposablePath", y, f"{x} ends at {table[x][1]}, {y} starts at {table[y][0]}")])
        start = table[cells[0]][0]
        if anchor is not None and anchor != start:
            raise ValidationError([Violation("EndpointMismatch", cells[0], f"anchor {anchor} is not the start {start}")])
        return Path(direction, cells, start)

    def end(self, p: Path) -> str:
        return self.tgt(p.direction, p.cells[-1]) if p.cells else p.anchor

    def concat(self, p: Path, q: Path) -> Path:
        if p.direction != q.direction or self.end(p) != q.anchor:
            raise ValueError(f"cannot concatenate {p} and {q}")
        return Path(p.direction, p.cells + q.cells, p.anchor)


@dataclass(frozen=True)
class TwoComputad(_CellTable):
    objects: tuple[str, ...]
    cells1: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    cells2: Mapping[str, tuple[Path, Path]] = field(default_factory=dict)

    def table1(self, direction: Direction) -> Mapping[str, tuple[str, str]]:
        return self.cells1 if direction is Direction.H else {}

    def source(self, gen: str) -> Path:
        return self.cells2[gen][0]

    def target(self, gen: str) -> Path:
        return self.cells2[gen][1]


@dataclass(frozen=True)
class Boundary:
    top: Path
    right: Path
    left: Path
    bottom: Path

    def shape(self) -> Shape:
        return Shape(len(self.top), len(self.right), len(self.left), len(self.bottom))

    def side(self, name: str) -> Path:
        return getattr(self, name)


@dataclass(frozen=True)
class DoubleComputad(_CellTable):
    objects: tuple[str, ...]
    hcells: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    vcells: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    cells2: Mapping[str, Boundary] = field(default_factory=dict)

    def table1(self, direction: Direction) -> Mapping[str, tuple[str, str]]:
        return self.hcells if direction is Direction.H else self.vcells

    def boundary(self, cell: str) -> Boundary:
        return self.cells2[cell]

    def classify(self) -> str:
        """'double-graph', 'with-bigons', 'with-monogons' or 'general'."""
        shapes = [b.shape() for b in self.cells2.values()]
        bigons = any(s.is_horizontal_bigon or s.is_vertical_bigon for s in shapes)
        monogons = any(s.monogon_side for s in shapes)
        if any(not (s.is_square or s.is_horizontal_bigon or s.is_vertical_bigon or s.monogon_side) for s in shapes):
            return "general"
        if bigons and monogons:
            return "general"
        if bigons:
            return "with-bigons"
        if monogons:
            return "with-monogons"
        return "double-graph"


def boundary_shape(computad: DoubleComputad, cell: str) -> Shape:
    return computad.boundary(cell).shape()


# ---------------------------------------------------------------- validation


def _check_objects(raw_objects: Any, out: list[Violation]) -> tuple[str, ...]:
    objs = tuple(str(o) for o in (raw_objects or ()))
    seen: set[str] = set()
    for o in objs:
        if o in seen:
            out.append(Violation("DuplicateId", o, "object listed twice"))
        seen.add(o)
    return tuple(sorted(seen))


def _check_cells1(raw: Mapping[str, Any], objects: set[str], label: str, out: list[Violation]) -> dict[str, tuple[str, str]]:
    table = {}
    if raw and not isinstance(raw, Mapping):
        out.append(Violation("BadCell", label, f"expected an object of {label} 1-cells"))
        return table
    for cid in sorted(raw or {}):
        entry = raw[cid]
        if not isinstance(entry, Mapping) or "src" not in entry or "tgt" not in entry:
            out.append(Violation("BadCell", str(cid), f"{label} 1-cell needs src and tgt"))
            continue
        s, t = str(entry["src"]), str(entry["tgt"])
        for end in (s, t):
            if end not in objects:
                out.append(Violation("DanglingId", cid, f"{label} endpoint {end} is not an object"))
        table[str(cid)] = (s, t)
    return table


def _check_path(cells: Any, anchor: Any, direction: Direction, table: Mapping[str, tuple[str, str]],
                objects: set[str], owner: str, side: str, out: list[Violation]) -> Path | None:
    cells = tuple(str(c) for c in (cells or ()))
    ok = True
    for c in cells:
        if c not in table:
            out.append(Violation("DanglingId", owner, f"{side} refers to unknown {direction.value}-cell {c}"))
            ok = False
    if not ok:
        return None
    for x, y in zip(cells, cells[1:]):
        if table[x][1] != table[y][0]:
            out.append(Violation("NonComposablePath", owner, f"{side}: {x} then {y} do not compose"))
            ok = False
    if not cells:
        if anchor is None or str(anchor) not in objects:
            out.append(Violation("DanglingId", owner, f"empty {side} needs a known anchor, got {anchor}"))
            return None
        return Path(direction, (), str(anchor))
    start = table[cells[0]][0]
    if anchor is not None and str(anchor) != start:
        out.append(Violation("EndpointMismatch", owner, f"{side} anchor {anchor} is not its start {start}"))
        ok = False
    return Path(direction, cells, start) if ok else None


def validate_two_computad(raw: Mapping[str, Any]) -> TwoComputad:
    """Validate a raw 2-computad document, raising with all violations."""
    out: list[Violation] = []
    objects = _check_objects(raw.get("objects"), out)
    objset = set(objects)
    cells1 = _check_cells1(raw.get("hcells", {}), objset, "1-cell", out)
    cells2: dict[str, tuple[Path, Path]] = {}
    for gid in sorted(raw.get("cells2", {}) or {}):
        entry = raw["cells2"][gid]
        anchors = entry.get("anchors", {})
        s = _check_path(entry.get("source"), anchors.get("source"), Direction.H, cells1, objset, gid, "source", out)
        t = _check_path(entry.get("target"), anchors.get("target"), Direction.H, cells1, objset, gid, "target", out)
        if s is None or t is None:
            continue
        ends = lambda p: (p.anchor, cells1[p.cells[-1]][1] if p.cells else p.anchor)  # noqa: E731
        if ends(s) != ends(t):
            out.append(Violation("EndpointMismatch", gid, f"source runs {ends(s)}, target runs {ends(t)}"))
            continue
        cells2[str(gid)] = (s, t)
    if out:
        raise ValidationError(out)
    return TwoComputad(objects, cells1, cells2)


def validate_double_computad(raw: Mapping[str, Any]) -> DoubleComputad:
    """Validate a raw double computad document, raising with all violations."""
    out: list[Violation] = []
    objects = _check_objects(raw.get("objects"), out)
    objset = set(objects)
    hcells = _check_cells1(raw.get("hcells", {}), objset, "horizontal", out)
    vcells = _check_cells1(raw.get("vcells", {}), objset, "vertical", out)
    for cid in sorted(set(hcells) & set(vcells)):
        out.append(Violation("DuplicateId", cid, "used for both a horizontal and a vertical 1-cell"))
    cells2: dict[str, Boundary] = {}
    for gid in sorted(raw.get("cells2", {}) or {}):
        entry = raw["cells2"][gid]
        anchors = entry.get("anchors", {})
        paths = {}
        for side in SIDES:
            direction = Direction.H if side in ("top", "bottom") else Direction.V
            table = hcells if direction is Direction.H else vcells
            paths[side] = _check_path(entry.get(side), anchors.get(side), direction, table, objset, gid, side, out)
        if any(p is None for p in paths.values()):
            continue
        b = Boundary(**paths)
        end = lambda p: (hcells if p.direction is Direction.H else vcells)[p.cells[-1]][1] if p.cells else p.anchor  # noqa: E731
        corners = [
            ("top start / left start", b.top.anchor, b.left.anchor),
            ("top end / right start", end(b.top), b.right.anchor),
            ("left end / bottom start", end(b.left), b.bottom.anchor),
            ("right end / bottom end", end(b.right), end(b.bottom)),
        ]
        bad = [f"{name}: {x} vs {y}" for name, x, y in corners if x != y]
        if bad:
            out.append(Violation("CornerMismatch", gid, "; ".join(bad)))
            continue
        cells2[str(gid)] = b
    if out:
        raise ValidationError(out)
    return DoubleComputad(objects, hcells, vcells, cells2)


# ------------------------------------------------------------------ JSON I/O


def _path_doc(p: Path, side: str, anchors: dict[str, str]) -> list[str]:
    if not p.cells:
        anchors[side] = p.anchor
    return list(p.cells)


def two_computad_to_dict(c: TwoComputad) -> dict[str, Any]:
    cells2 = {}
    for gid, (s, t) in c.cells2.items():
        anchors: dict[str, str] = {}
        doc = {"source": _path_doc(s, "source", anchors), "target": _path_doc(t, "target", anchors)}
        if anchors:
            doc["anchors"] = anchors
        cells2[gid] = doc
    return {
        "kind": "2-computad",
        "objects": list(c.objects),
        "hcells": {k: {"src": s, "tgt": t} for k, (s, t) in c.cells1.items()},
        "vcells": {},
        "cells2": cells2,
    }


def double_computad_to_dict(c: DoubleComputad) -> dict[str, Any]:
    cells2 = {}
    for gid, b in c.cells2.items():
        anchors: dict[str, str] = {}
        doc: dict[str, Any] = {side: _path_doc(b.side(side), side, anchors) for side in SIDES}
        if anchors:
            doc["anchors"] = anchors
        cells2[gid] = doc
    return {
        "kind": "double-computad",
        "objects": list(c.objects),
        "hcells": {k: {"src": s, "tgt": t} for k, (s, t) in c.hcells.items()},
        "vcells": {k: {"src": s, "tgt": t} for k, (s, t) in c.vcells.items()},
        "cells2": cells2,
    }


def dumps(c: TwoComputad | DoubleComputad) -> str:
    doc = two_computad_to_dict(c) if isinstance(c, TwoComputad) else double_computad_to_dict(c)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> TwoComputad | DoubleComputad:
    doc = json.loads(text)
    if doc.get("kind") == "2-computad":
        return validate_two_computad(doc)
    if doc.get("kind") in ("double-computad", "double-graph"):
        return validate_double_computad(doc)
    raise ValidationError([Violation("UnknownKind", str(doc.get("kind")), "expected 2-computad or double-computad")])


# ------------------------------------------------------------------- flatten


def path_id(p: Path) -> str:
    """Readable identifier for a path used as a 1-cell, e.g. 'h[f,g]' or 'v[]@A'."""
    body = f"{p.direction.value}[{','.join(p.cells)}]"
    return body if p.cells else f"{body}@{p.anchor}"


@dataclass(frozen=True)
class Flattened:
    graph: DoubleComputad
    paths: Mapping[str, Path]


def dflat(c: DoubleComputad) -> Flattened:
    """Reinterpret every 2-cell as a square whose edges are its boundary paths."""
    hcells: dict[str, tuple[str, str]] = {}
    vcells: dict[str, tuple[str, str]] = {}
    paths: dict[str, Path] = {}
    cells2 = {}
    for gid, b in c.cells2.items():
        ids = {}
        for side in SIDES:
            p = b.side(side)
            pid = path_id(p)
            paths[pid] = p
            (hcells if p.direction is Direction.H else vcells)[pid] = (p.anchor, c.end(p))
            ids[side] = pid
        cells2[gid] = ids
    g = DoubleComputad(c.objects, hcells, vcells, {})
    squares = {
        gid: Boundary(
            top=g.path(Direction.H, [ids["top"]]),
            right=g.path(Direction.V, [ids["right"]]),
            left=g.path(Direction.V, [ids["left"]]),
            bottom=g.path(Direction.H, [ids["bottom"]]),
        )
        for gid, ids in cells2.items()
    }
    return Flattened(DoubleComputad(c.objects, hcells, vcells, squares), paths)


# ------------------------------------------------------------------ symmetry


def _reverse(c: DoubleComputad, p: Path) -> Path:
    return Path(p.direction, tuple(reversed(p.cells)), c.end(p))


def symmetry(c: DoubleComputad, op: str) -> DoubleComputad:
    """Apply hop (mirror left-right), vop (mirror top-bottom) or transpose."""
    flip = lambda t: {k: (e, s) for k, (s, e) in t.items()}  # noqa: E731
    cells2 = {}
    if op == "hop":
        for gid, b in c.cells2.items():
            cells2[gid] = Boundary(_reverse(c, b.top), b.left, b.right, _reverse(c, b.bottom))
        return DoubleComputad(c.objects, flip(c.hcells), dict(c.vcells), cells2)
    if op == "vop":
        for gid, b in c.cells2.items():
            cells2[gid] = Boundary(b.bottom, _reverse(c, b.right), _reverse(c, b.left), b.top)
        return DoubleComputad(c.objects, dict(c.hcells), flip(c.vcells), cells2)
    if op == "transpose":
        swap = lambda p: Path(p.direction.other, p.cells, p.anchor)  # noqa: E731
        for gid, b in c.cells2.items():
            cells2[gid] = Boundary(swap(b.left), swap(b.bottom), swap(b.top), swap(b.right))
        return DoubleComputad(c.objects, dict(c.vcells), dict(c.hcells), cells2)
    raise ValueError(f"unknown symmetry {op!r}")
