"""Finite models: carriers, boundaries and partial operation tables.

A model of any presentation is stored the same way.  Cells live in
named sorts, every 2-cell carries a boundary tuple whose layout depends
on the sort, and each operation is a finite table from argument tuples
to result ids.  Which sorts and operations are present is decided by
the model's ``kind``.

Boundary layouts:

    h, v         (source, target) objects
    sq           (top, right, left, bottom) 1-cells
    hb           (source, target) horizontal 1-cells  (f => g)
    vb           (source, target) vertical 1-cells    (u => v)
    mN mE mS mW  (cell,) the single bounding 1-cell, always a loop
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping

from ..computad import (
    Boundary,
    Direction,
    Path,
    ValidationError,
    Violation,
    double_computad_to_dict,
    validate_double_computad,
    DoubleComputad,
)

KINDS = ("tidier", "double-bicat", "monogon")
CELL_SORTS = ("sq", "hb", "vb", "mN", "mE", "mS", "mW")
MONOGON_SORTS = ("mN", "mE", "mS", "mW")
SORTS_OF_KIND = {
    "tidier": ("obj", "h", "v", "sq"),
    "double-bicat": ("obj", "h", "v", "hb", "vb", "sq"),
    "monogon": ("obj", "h", "v", "sq", "mN", "mE", "mS", "mW"),
}


class ModelError(Exception):
    """A model document or construction is structurally unusable."""


class Undefined(Exception):
    """An operation was applied outside its table."""

    def __init__(self, op: str, args: tuple[str, ...]):
        super().__init__(f"{op}{args} is undefined")
        self.op = op
        self.args = args


@dataclass(eq=False)
class FiniteModel:
    kind: str
    objects: tuple[str, ...]
    hcells: dict[str, tuple[str, str]]
    vcells: dict[str, tuple[str, str]]
    cells: dict[str, tuple[str, tuple[str, ...]]]
    tables: dict[str, dict[tuple[str, ...], str]] = field(default_factory=dict)

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _sort_of(self) -> dict[str, str]:
        out = {a: "obj" for a in self.objects}
        out.update({f: "h" for f in self.hcells})
        out.update({u: "v" for u in self.vcells})
        out.update({c: s for c, (s, _) in self.cells.items()})
        return out

    def sort(self, x: str) -> str | None:
        return self._sort_of.get(x)

    @cached_property
    def _by_sort(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {s: [] for s in ("obj", "h", "v") + CELL_SORTS}
        out["obj"] = sorted(self.objects)
        out["h"] = sorted(self.hcells)
        out["v"] = sorted(self.vcells)
        for c, (s, _) in self.cells.items():
            out[s].append(c)
        return {s: tuple(sorted(xs)) for s, xs in out.items()}

    def of(self, sort: str) -> tuple[str, ...]:
        return self._by_sort.get(sort, ())

    def src(self, x: str) -> str:
        return (self.hcells.get(x) or self.vcells[x])[0]

    def tgt(self, x: str) -> str:
        return (self.hcells.get(x) or self.vcells[x])[1]

    def bound(self, c: str) -> tuple[str, ...]:
        return self.cells[c][1]

    @cached_property
    def _by_bound(self) -> dict[tuple[str, tuple[str, ...]], tuple[str, ...]]:
        out: dict[tuple[str, tuple[str, ...]], list[str]] = {}
        for c in sorted(self.cells):
            s, b = self.cells[c]
            out.setdefault((s, b), []).append(c)
        return {k: tuple(v) for k, v in out.items()}

    def with_bound(self, sort: str, b: tuple[str, ...]) -> tuple[str, ...]:
        return self._by_bound.get((sort, tuple(b)), ())

    @cached_property
    def _sq_side(self) -> dict[tuple[int, str], tuple[str, ...]]:
        out: dict[tuple[int, str], list[str]] = {}
        for z in self.of("sq"):
            for i, x in enumerate(self.bound(z)):
                out.setdefault((i, x), []).append(z)
        return {k: tuple(v) for k, v in out.items()}

    def sq_with(self, side: str, cell: str) -> tuple[str, ...]:
        """Squares whose ``side`` ('top', 'right', 'left', 'bottom') is ``cell``."""
        return self._sq_side.get((SIDE_INDEX[side], cell), ())

    @cached_property
    def _bigon_end(self) -> dict[tuple[str, int, str], tuple[str, ...]]:
        out: dict[tuple[str, int, str], list[str]] = {}
        for s in ("hb", "vb"):
            for c in self.of(s):
                for i, x in enumerate(self.bound(c)):
                    out.setdefault((s, i, x), []).append(c)
        return {k: tuple(v) for k, v in out.items()}

    def bigons_from(self, sort: str, cell: str) -> tuple[str, ...]:
        return self._bigon_end.get((sort, 0, cell), ())

    def bigons_to(self, sort: str, cell: str) -> tuple[str, ...]:
        return self._bigon_end.get((sort, 1, cell), ())

    def monogons(self, sort: str, cell: str) -> tuple[str, ...]:
        return self.with_bound(sort, (cell,))

    @cached_property
    def _out1(self) -> dict[tuple[str, str], tuple[str, ...]]:
        out: dict[tuple[str, str], list[str]] = {}
        for d, table in (("h", self.hcells), ("v", self.vcells)):
            for c in sorted(table):
                out.setdefault((d, table[c][0]), []).append(c)
        return {k: tuple(v) for k, v in out.items()}

    def cells_from(self, direction: str, obj: str) -> tuple[str, ...]:
        return self._out1.get((direction, obj), ())

    def loops(self, direction: str, obj: str) -> tuple[str, ...]:
        return tuple(c for c in self.cells_from(direction, obj) if self.tgt(c) == obj)

    # -- operations ------------------------------------------------------

    def ap(self, op: str, *args: str) -> str:
        try:
            return self.tables[op][args]
        except KeyError:
            raise Undefined(op, args) from None

    def defined(self, op: str, *args: str) -> bool:
        return args in self.tables.get(op, {})

    @property
    def e(self) -> "Ev":
        return Ev(self)

    def size(self) -> dict[str, int]:
        return {s: len(self.of(s)) for s in SORTS_OF_KIND[self.kind]}

    def edited(self, op: str, args: tuple[str, ...], result: str) -> "FiniteModel":
        """Copy with one table entry overwritten (for mutation tests)."""
        tables = {k: dict(v) for k, v in self.tables.items()}
        tables.setdefault(op, {})[tuple(args)] = result
        return replace(self, tables=tables)


SIDE_INDEX = {"top": 0, "right": 1, "left": 2, "bottom": 3}


class Ev:
    """Attribute-style operation application: ``m.e.sq_hcomp(a, b)``."""

    __slots__ = ("_m",)

    def __init__(self, m: FiniteModel):
        self._m = m

    def __getattr__(self, op: str):
        m = self._m

        def apply(*args: str) -> str:
            return m.ap(op, *args)

        return apply


# ---------------------------------------------------------------- builders


@dataclass
class ModelBuilder:
    """Mutable accumulator used by fixtures and converters."""

    kind: str
    objects: list[str] = field(default_factory=list)
    hcells: dict[str, tuple[str, str]] = field(default_factory=dict)
    vcells: dict[str, tuple[str, str]] = field(default_factory=dict)
    cells: dict[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)
    tables: dict[str, dict[tuple[str, ...], str]] = field(default_factory=dict)

    def obj(self, a: str) -> str:
        if a not in self.objects:
            self.objects.append(a)
        return a

    def h(self, f: str, s: str, t: str) -> str:
        self.hcells[f] = (s, t)
        return f

    def v(self, u: str, s: str, t: str) -> str:
        self.vcells[u] = (s, t)
        return u

    def cell(self, c: str, sort: str, b: Iterable[str]) -> str:
        self.cells[c] = (sort, tuple(b))
        return c

    def set(self, op: str, args: Iterable[str], result: str) -> None:
        self.tables.setdefault(op, {})[tuple(args)] = result

    def build(self) -> FiniteModel:
        return FiniteModel(self.kind, tuple(self.objects), dict(self.hcells), dict(self.vcells),
                           dict(self.cells), {k: dict(v) for k, v in self.tables.items()})


def structural_problems(m: FiniteModel) -> list[Violation]:
    """Problems that make law checking meaningless (bad ids, bad boundaries)."""
    out: list[Violation] = []
    if m.kind not in KINDS:
        out.append(Violation("UnknownKind", m.kind, f"expected one of {', '.join(KINDS)}"))
        return out
    seen: dict[str, str] = {}
    for label, ids in (("object", m.objects), ("horizontal 1-cell", m.hcells),
                       ("vertical 1-cell", m.vcells), ("2-cell", m.cells)):
        for x in ids:
            if x in seen:
                out.append(Violation("DuplicateId", x, f"used as {seen[x]} and {label}"))
            seen[x] = label
    objs = set(m.objects)
    for d, table in (("h", m.hcells), ("v", m.vcells)):
        for c, (s, t) in table.items():
            for end in (s, t):
                if end not in objs:
                    out.append(Violation("DanglingId", c, f"unknown object {end}"))
    allowed = set(SORTS_OF_KIND[m.kind])
    for c, (sort, b) in m.cells.items():
        if sort not in allowed:
            out.append(Violation("WrongSort", c, f"sort {sort} not allowed in a {m.kind} model"))
            continue
        problem = _cell_problem(m, sort, b)
        if problem:
            out.append(Violation("BadBoundary", c, problem))
    return out


def _cell_problem(m: FiniteModel, sort: str, b: tuple[str, ...]) -> str | None:
    def ends(x: str, table: Mapping[str, tuple[str, str]]) -> tuple[str, str] | None:
        return table.get(x)

    if sort == "sq":
        if len(b) != 4:
            return "a square needs four sides"
        top, right, left, bottom = (ends(b[0], m.hcells), ends(b[1], m.vcells),
                                    ends(b[2], m.vcells), ends(b[3], m.hcells))
        if None in (top, right, left, bottom):
            return "unknown side cell"
        if top[0] != left[0] or top[1] != right[0] or left[1] != bottom[0] or right[1] != bottom[1]:
            return "corners do not match"
        return None
    if sort in ("hb", "vb"):
        table = m.hcells if sort == "hb" else m.vcells
        if len(b) != 2 or ends(b[0], table) is None or ends(b[1], table) is None:
            return "a bigon needs two known parallel 1-cells"
        return None if table[b[0]] == table[b[1]] else "bigon sides are not parallel"
    table = m.hcells if sort in ("mN", "mS") else m.vcells
    if len(b) != 1 or b[0] not in table:
        return "a monogon needs one known 1-cell"
    s, t = table[b[0]]
    return None if s == t else "a monogon's 1-cell must be a loop"


# ---------------------------------------------------------------- JSON I/O
#
# Model files are double computad documents whose 2-cells are read by shape:
# squares (1,1,1,1), horizontal bigons (1,0,0,1), vertical bigons (0,1,1,0)
# and the four monogon shapes.  Operations go in a ``tables`` object, each a
# list of rows ``[arg, ..., result]``.


def _cell_doc_boundary(m: FiniteModel, c: str) -> Boundary:
    sort, b = m.cells[c]
    H, V = Direction.H, Direction.V

    def p(d: Direction, cells: tuple[str, ...], anchor: str) -> Path:
        return Path(d, tuple(cells), anchor)

    if sort == "sq":
        top, right, left, bottom = b
        return Boundary(p(H, (top,), m.hcells[top][0]), p(V, (right,), m.vcells[right][0]),
                        p(V, (left,), m.vcells[left][0]), p(H, (bottom,), m.hcells[bottom][0]))
    if sort == "hb":
        f, g = b
        s, t = m.hcells[f]
        return Boundary(p(H, (f,), s), p(V, (), t), p(V, (), s), p(H, (g,), s))
    if sort == "vb":
        u, v = b
        s, t = m.vcells[u]
        return Boundary(p(H, (), s), p(V, (v,), s), p(V, (u,), s), p(H, (), t))
    (x,) = b
    a = (m.hcells.get(x) or m.vcells[x])[0]
    sides = {"top": p(H, (), a), "right": p(V, (), a), "left": p(V, (), a), "bottom": p(H, (), a)}
    side = {"mN": "top", "mS": "bottom", "mE": "right", "mW": "left"}[sort]
    sides[side] = p(sides[side].direction, (x,), a)
    return Boundary(**sides)


def model_to_dict(m: FiniteModel) -> dict[str, Any]:
    dc = DoubleComputad(tuple(m.objects), dict(m.hcells), dict(m.vcells),
                        {c: _cell_doc_boundary(m, c) for c in m.cells})
    doc = double_computad_to_dict(dc)
    doc["kind"] = "model"
    doc["presentation"] = m.kind
    doc["tables"] = {op: [list(args) + [r] for args, r in sorted(rows.items())]
                     for op, rows in sorted(m.tables.items())}
    return doc


def dumps_model(m: FiniteModel) -> str:
    return json.dumps(model_to_dict(m), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


_SHAPE_SORT = {(1, 1, 1, 1): "sq", (1, 0, 0, 1): "hb", (0, 1, 1, 0): "vb",
               (1, 0, 0, 0): "mN", (0, 1, 0, 0): "mE", (0, 0, 1, 0): "mW", (0, 0, 0, 1): "mS"}


def model_from_dict(doc: Mapping[str, Any]) -> FiniteModel:
    if doc.get("kind") != "model":
        raise ValidationError([Violation("UnknownKind", str(doc.get("kind")), "expected a model document")])
    kind = doc.get("presentation")
    if kind not in KINDS:
        raise ValidationError([Violation("UnknownPresentation", str(kind), f"expected one of {', '.join(KINDS)}")])
    raw = {k: doc.get(k) for k in ("objects", "hcells", "vcells", "cells2")}
    dc = validate_double_computad(raw)
    cells: dict[str, tuple[str, tuple[str, ...]]] = {}
    problems: list[Violation] = []
    for c, b in dc.cells2.items():
        shape = b.shape().as_tuple()
        sort = _SHAPE_SORT.get(shape)
        if sort is None:
            problems.append(Violation("UnsupportedShape", c, f"shape {shape} is not a model 2-cell"))
            continue
        if sort == "sq":
            cells[c] = (sort, (b.top.cells[0], b.right.cells[0], b.left.cells[0], b.bottom.cells[0]))
        elif sort == "hb":
            cells[c] = (sort, (b.top.cells[0], b.bottom.cells[0]))
        elif sort == "vb":
            cells[c] = (sort, (b.left.cells[0], b.right.cells[0]))
        else:
            side = {"mN": b.top, "mS": b.bottom, "mE": b.right, "mW": b.left}[sort]
            cells[c] = (sort, (side.cells[0],))
    tables: dict[str, dict[tuple[str, ...], str]] = {}
    raw_tables = doc.get("tables", {}) or {}
    if not isinstance(raw_tables, Mapping):
        problems.append(Violation("BadTables", "tables", "expected an object of operation rows"))
        raw_tables = {}
    for op, rows in raw_tables.items():
        table: dict[tuple[str, ...], str] = {}
        for i, row in enumerate(rows or []):
            if not isinstance(row, list) or len(row) < 2 or not all(isinstance(x, str) for x in row):
                problems.append(Violation("BadRow", f"{op}[{i}]", "expected [arg, ..., result] strings"))
                continue
            args = tuple(row[:-1])
            if args in table and table[args] != row[-1]:
                problems.append(Violation("ConflictingRow", f"{op}[{i}]", f"{args} already maps to {table[args]}"))
            table[args] = row[-1]
        tables[op] = table
    m = FiniteModel(kind, tuple(dc.objects), dict(dc.hcells), dict(dc.vcells), cells, tables)
    problems.extend(structural_problems(m))
    if problems:
        raise ValidationError(problems)
    return m


def loads_model(text: str) -> FiniteModel:
    return model_from_dict(json.loads(text))


def iter_rows(m: FiniteModel) -> Iterator[tuple[str, tuple[str, ...], str]]:
    for op in sorted(m.tables):
        for args in sorted(m.tables[op]):
            yield op, args, m.tables[op][args]
