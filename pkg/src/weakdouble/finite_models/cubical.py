"""Cubical bicategories given by grid-composition oracles, checked within declared bounds.

A grid is a tuple of rows of squares.  Each side of a grid is a path of
1-cells, bracketed by a tree whose leaves are the path positions 0..n-1
(in order) and which may contain units:

    tree := int | UNIT | (tree, tree)

The oracle returns the composite square, whose sides must be the
bracketed composites of the grid's sides.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import islice, product
from typing import Hashable, Iterator, Sequence

from .base import FiniteModel
from .monoid import Monoid, NonCommutativeMonoid
from .report import Report

UNIT = "u"
Tree = object  # int | UNIT | tuple[Tree, Tree]
Grid = tuple[tuple[Hashable, ...], ...]
Trees = tuple[Tree, Tree, Tree, Tree]  # top, right, left, bottom


class OracleOutOfRange(Exception):
    """A composite outside the oracle's declared bounds was required."""


# ------------------------------------------------------------------ trees


def leaves(t: Tree) -> list[int]:
    if t == UNIT:
        return []
    if isinstance(t, int):
        return [t]
    return leaves(t[0]) + leaves(t[1])


def depth(t: Tree) -> int:
    return 1 + max(depth(t[0]), depth(t[1])) if isinstance(t, tuple) else 0


def format_tree(t: Tree) -> str:
    if t == UNIT:
        return "1"
    if isinstance(t, int):
        return str(t)
    return f"({format_tree(t[0])} . {format_tree(t[1])})"


def unit_free_trees(lo: int, hi: int) -> list[Tree]:
    """All bracketings of positions lo..hi-1."""
    if hi - lo == 1:
        return [lo]
    return [(a, b) for k in range(lo + 1, hi) for a in unit_free_trees(lo, k) for b in unit_free_trees(k, hi)]


def left_nested(n: int) -> Tree:
    t: Tree = 0
    for i in range(1, n):
        t = (t, i)
    return t


def shift(t: Tree, start: int, by: int) -> Tree:
    if t == UNIT:
        return t
    if isinstance(t, int):
        return t + by if t >= start else t
    return (shift(t[0], start, by), shift(t[1], start, by))


def split_at(t: Tree) -> int | None:
    """The cut position of the root node, when the root splits two non-empty parts."""
    if not isinstance(t, tuple):
        return None
    a, b = leaves(t[0]), leaves(t[1])
    return len(a) if a and b else None


def insert_unit(t: Tree, pos: int, n: int) -> tuple[Tree, Tree] | None:
    """A unit placed at position pos (0..n) of the path, and the same tree with
    a new leaf pos there instead (later leaves renumbered)."""
    target, before = (pos, True) if pos < n else (n - 1, False)

    def go(x: Tree, fill: Tree, renumber: bool) -> Tree:
        if isinstance(x, tuple):
            return (go(x[0], fill, renumber), go(x[1], fill, renumber))
        if x == target:
            y = x + 1 if renumber and before else x
            return (fill, y) if before else (y, fill)
        if renumber and isinstance(x, int) and x > target:
            return x + 1
        return x

    if target not in leaves(t):
        return None
    return go(t, UNIT, False), go(t, pos, True)


# ----------------------------------------------------------------- oracles


class CubicalOracle(ABC):
    """A double graph with unlawful 1-cell composition and a grid-composition rule."""

    name = "oracle"
    max_rows = 6
    max_cols = 6
    max_depth = 6

    @abstractmethod
    def h_ends(self, f: str) -> tuple[str, str]: ...

    @abstractmethod
    def v_ends(self, u: str) -> tuple[str, str]: ...

    @abstractmethod
    def hcomp1(self, f: str, g: str) -> str: ...

    @abstractmethod
    def vcomp1(self, u: str, v: str) -> str: ...

    @abstractmethod
    def hid1(self, a: str) -> str: ...

    @abstractmethod
    def vid1(self, a: str) -> str: ...

    @abstractmethod
    def boundary(self, z: Hashable) -> tuple[str, str, str, str]: ...

    @abstractmethod
    def squares(self, b: tuple[str, str, str, str]) -> list[Hashable]: ...

    @abstractmethod
    def fillers(self, top: str | None, left: str | None) -> list[Hashable]:
        """Squares from the generation pool with the given top and left (None: any)."""

    @abstractmethod
    def identity_h(self, u: str) -> Hashable:
        """The square (1; u, u; 1)."""

    @abstractmethod
    def identity_v(self, f: str) -> Hashable:
        """The square (f; 1, 1; f)."""

    @abstractmethod
    def _composite(self, grid: Grid, trees: Trees) -> Hashable: ...

    def fmt(self, z: Hashable) -> str:
        return str(z)

    def boundaries(self) -> Iterator[tuple[str, str, str, str]]:
        """Boundaries of the generation pool, for tidiness checks."""
        seen = set()
        for z in self.fillers(None, None):
            b = self.boundary(z)
            if b not in seen:
                seen.add(b)
                yield b

    # -- evaluation of bracketed sides

    def sides(self, grid: Grid) -> tuple[list[str], list[str], list[str], list[str]]:
        b = [[self.boundary(z) for z in row] for row in grid]
        return ([c[0] for c in b[0]], [row[-1][1] for row in b], [row[0][2] for row in b], [c[3] for c in b[-1]])

    def evaluate(self, t: Tree, path: Sequence[str], direction: str) -> str:
        ends = self.h_ends if direction == "h" else self.v_ends
        comp = self.hcomp1 if direction == "h" else self.vcomp1
        unit = self.hid1 if direction == "h" else self.vid1
        objs = [ends(path[0])[0]] + [ends(x)[1] for x in path]
        count = 0

        def go(x: Tree) -> str:
            nonlocal count
            if x == UNIT:
                return unit(objs[count])
            if isinstance(x, int):
                count += 1
                return path[x]
            a = go(x[0])
            return comp(a, go(x[1]))

        return go(t)

    def expected_boundary(self, grid: Grid, trees: Trees) -> tuple[str, str, str, str]:
        top, right, left, bottom = self.sides(grid)
        return (self.evaluate(trees[0], top, "h"), self.evaluate(trees[1], right, "v"),
                self.evaluate(trees[2], left, "v"), self.evaluate(trees[3], bottom, "h"))

    def grid_composite(self, grid: Grid, trees: Trees) -> Hashable:
        rows, cols = len(grid), len(grid[0]) if grid else 0
        if not rows or not cols or any(len(r) != cols for r in grid):
            raise ValueError("grids are non-empty rectangles")
        if rows > self.max_rows or cols > self.max_cols or max(map(depth, trees)) > self.max_depth:
            raise OracleOutOfRange(f"{rows}x{cols} grid at bracket depth {max(map(depth, trees))} "
                                   f"exceeds the declared bounds {self.max_rows}x{self.max_cols}, depth {self.max_depth}")
        for i, j in product(range(rows), range(cols)):
            b = self.boundary(grid[i][j])
            if j + 1 < cols and b[1] != self.boundary(grid[i][j + 1])[2]:
                raise ValueError(f"squares ({i},{j}) and ({i},{j + 1}) do not share a side")
            if i + 1 < rows and b[3] != self.boundary(grid[i + 1][j])[0]:
                raise ValueError(f"squares ({i},{j}) and ({i + 1},{j}) do not share a side")
        for t, n in zip(trees, (cols, rows, rows, cols)):
            if leaves(t) != list(range(n)):
                raise ValueError(f"bracketing {format_tree(t)} does not cover a path of length {n}")
        return self._composite(grid, trees)


@dataclass(frozen=True)
class LabelledSquare:
    label: str
    boundary: tuple[str, str, str, str]

    def __str__(self) -> str:
        return f"{self.label}:({'; '.join(self.boundary)})"


class MonoidOracle(CubicalOracle):
    """C_M: one object; 1-cells are formal bracketings of the identity; squares
    carry an element of M, except that the boundary made of four bare
    identities carries only the unit.  Grid composites add up labels."""

    POOL = ("1", "(1 . 1)")

    def __init__(self, monoid: Monoid):
        if not monoid.is_commutative():
            raise NonCommutativeMonoid("the cubical construction sums labels and needs a commutative monoid")
        self.monoid = monoid
        self.name = f"C_M cubical, |M| = {len(monoid)}"

    def h_ends(self, f: str) -> tuple[str, str]:
        return ("*", "*")

    v_ends = h_ends

    def hcomp1(self, f: str, g: str) -> str:
        return f"({f} . {g})"

    vcomp1 = hcomp1

    def hid1(self, a: str) -> str:
        return "1"

    vid1 = hid1

    def boundary(self, z: LabelledSquare) -> tuple[str, str, str, str]:
        return z.boundary

    def squares(self, b: tuple[str, str, str, str]) -> list[LabelledSquare]:
        if all(x == "1" for x in b):
            return [LabelledSquare(self.monoid.unit, b)]
        return [LabelledSquare(x, b) for x in self.monoid.elements]

    def fillers(self, top: str | None, left: str | None) -> list[LabelledSquare]:
        out = []
        for t, r, l, b in product(self.POOL, repeat=4):
            if top in (None, t) and left in (None, l):
                out += self.squares((t, r, l, b))
        return out

    def identity_h(self, u: str) -> LabelledSquare:
        return LabelledSquare(self.monoid.unit, ("1", u, u, "1"))

    def identity_v(self, f: str) -> LabelledSquare:
        return LabelledSquare(self.monoid.unit, (f, "1", "1", f))

    def _composite(self, grid: Grid, trees: Trees) -> LabelledSquare:
        total = self.monoid.unit
        for row in grid:
            for z in row:
                total = self.monoid.times(total, z.label)
        return LabelledSquare(total, self.expected_boundary(grid, trees))


class TidierOracle(CubicalOracle):
    """Grid composites of a strict tidier model: rows by sq_hcomp, then sq_vcomp."""

    def __init__(self, m: FiniteModel):
        self.m = m
        self.name = "tidier model oracle"

    def h_ends(self, f: str) -> tuple[str, str]:
        return self.m.hcells[f]

    def v_ends(self, u: str) -> tuple[str, str]:
        return self.m.vcells[u]

    def hcomp1(self, f: str, g: str) -> str:
        return self.m.e.hcomp1(f, g)

    def vcomp1(self, u: str, v: str) -> str:
        return self.m.e.vcomp1(u, v)

    def hid1(self, a: str) -> str:
        return self.m.e.hid1(a)

    def vid1(self, a: str) -> str:
        return self.m.e.vid1(a)

    def boundary(self, z: str) -> tuple[str, str, str, str]:
        return self.m.bound(z)

    def squares(self, b: tuple[str, str, str, str]) -> list[str]:
        return list(self.m.with_bound("sq", b))

    def fillers(self, top: str | None, left: str | None) -> list[str]:
        return [z for z in self.m.of("sq") if top in (None, self.m.bound(z)[0]) and left in (None, self.m.bound(z)[2])]

    def boundaries(self) -> Iterator[tuple[str, str, str, str]]:
        m = self.m
        for t in m.of("h"):
            for l in m.cells_from("v", m.src(t)):
                for r in m.cells_from("v", m.tgt(t)):
                    for b in m.cells_from("h", m.tgt(l)):
                        if m.tgt(b) == m.tgt(r):
                            yield (t, r, l, b)

    def identity_h(self, u: str) -> str:
        return self.m.e.sq_hid(u)

    def identity_v(self, f: str) -> str:
        return self.m.e.sq_vid(f)

    def _composite(self, grid: Grid, trees: Trees) -> str:
        e = self.m.e
        rows = []
        for row in grid:
            z = row[0]
            for x in row[1:]:
                z = e.sq_hcomp(z, x)
            rows.append(z)
        z = rows[0]
        for x in rows[1:]:
            z = e.sq_vcomp(z, x)
        if self.m.bound(z) != self.expected_boundary(grid, trees):
            raise OracleOutOfRange("rebracketing through coherence squares is only supported for strict models")
        return z


class PerturbedOracle(CubicalOracle):
    """Another oracle with the composite of one grid replaced; for exercising the checker."""

    def __init__(self, base: CubicalOracle, grid: Grid, replacement: Hashable):
        self.base, self.grid, self.replacement = base, grid, replacement
        self.name = f"{base.name}, perturbed"
        self.max_rows, self.max_cols, self.max_depth = base.max_rows, base.max_cols, base.max_depth

    def h_ends(self, f):
        return self.base.h_ends(f)

    def v_ends(self, u):
        return self.base.v_ends(u)

    def hcomp1(self, f, g):
        return self.base.hcomp1(f, g)

    def vcomp1(self, u, v):
        return self.base.vcomp1(u, v)

    def hid1(self, a):
        return self.base.hid1(a)

    def vid1(self, a):
        return self.base.vid1(a)

    def boundary(self, z):
        return self.base.boundary(z)

    def squares(self, b):
        return self.base.squares(b)

    def fillers(self, top, left):
        return self.base.fillers(top, left)

    def boundaries(self):
        return self.base.boundaries()

    def identity_h(self, u):
        return self.base.identity_h(u)

    def identity_v(self, f):
        return self.base.identity_v(f)

    def fmt(self, z):
        return self.base.fmt(z)

    def _composite(self, grid: Grid, trees: Trees) -> Hashable:
        z = self.base._composite(grid, trees)
        if grid == self.grid and self.boundary(self.replacement) == self.boundary(z):
            return self.replacement
        return z


# ---------------------------------------------------------------- grids


def _grids(o: CubicalOracle, rows: int, cols: int) -> Iterator[Grid]:
    cells = [[None] * cols for _ in range(rows)]

    def go(k: int) -> Iterator[Grid]:
        if k == rows * cols:
            yield tuple(tuple(r) for r in cells)
            return
        i, j = divmod(k, cols)
        top = o.boundary(cells[i - 1][j])[3] if i else None
        left = o.boundary(cells[i][j - 1])[1] if j else None
        for z in o.fillers(top, left):
            cells[i][j] = z
            yield from go(k + 1)
        cells[i][j] = None

    yield from go(0)


def _random_grid(o: CubicalOracle, rows: int, cols: int, rng: random.Random, tries: int = 50) -> Grid | None:
    for _ in range(tries):
        cells: list[list[Hashable]] = [[None] * cols for _ in range(rows)]
        ok = True
        for k in range(rows * cols):
            i, j = divmod(k, cols)
            top = o.boundary(cells[i - 1][j])[3] if i else None
            left = o.boundary(cells[i][j - 1])[1] if j else None
            options = o.fillers(top, left)
            if not options:
                ok = False
                break
            cells[i][j] = options[rng.randrange(len(options))]
        if ok:
            return tuple(tuple(r) for r in cells)
    return None


def _sample(o: CubicalOracle, rows: int, cols: int, exhaustive_limit: int, samples: int,
            rng: random.Random) -> tuple[list[Grid], str]:
    first = list(islice(_grids(o, rows, cols), exhaustive_limit + 1))
    if len(first) <= exhaustive_limit:
        return first, f"exhaustive, {len(first)} grids"
    out = []
    for _ in range(samples):
        g = _random_grid(o, rows, cols, rng)
        if g is not None:
            out.append(g)
    return out, f"seeded sample of {len(out)} grids (more than {exhaustive_limit} exist)"


def _tree_tuples(rows: int, cols: int, depth_bound: int, limit: int, rng: random.Random) -> list[Trees]:
    per_side = [[t for t in unit_free_trees(0, n) if depth(t) <= depth_bound] for n in (cols, rows, rows, cols)]
    canonical = tuple(left_nested(n) for n in (cols, rows, rows, cols))
    everything = list(product(*per_side))
    if len(everything) <= limit:
        return everything
    picked = rng.sample(everything, limit)
    return [canonical] + [t for t in picked if t != canonical]


def _fmt_grid(o: CubicalOracle, grid: Grid) -> str:
    return " / ".join(" | ".join(o.fmt(z) for z in row) for row in grid)


def _fmt_trees(trees: Trees) -> str:
    return ", ".join(f"{s} {format_tree(t)}" for s, t in zip(("top", "right", "left", "bottom"), trees))


def _sub(tree: Tree, lo: int) -> Tree:
    return shift(tree, 0, -lo)


def _block_cases(o: CubicalOracle, grid: Grid, trees: Trees):
    """(description, block composite thunk) for each guillotine cut the bracketing allows."""
    rows, cols = len(grid), len(grid[0])
    top, right, left, bottom = trees
    j = split_at(top)
    if j is not None and split_at(bottom) == j:
        for seam in unit_free_trees(0, rows):
            g1 = tuple(r[:j] for r in grid)
            g2 = tuple(r[j:] for r in grid)

            def run(g1=g1, g2=g2, seam=seam):
                x1 = o.grid_composite(g1, (top[0], seam, left, bottom[0]))
                x2 = o.grid_composite(g2, (_sub(top[1], j), right, seam, _sub(bottom[1], j)))
                return o.grid_composite(((x1, x2),), ((0, 1), 0, 0, (0, 1)))
            yield f"vertical cut after column {j}, seam {format_tree(seam)}", run
    i = split_at(left)
    if i is not None and split_at(right) == i:
        for seam in unit_free_trees(0, cols):
            g1, g2 = grid[:i], grid[i:]

            def run(g1=g1, g2=g2, seam=seam):
                x1 = o.grid_composite(g1, (top, right[0], left[0], seam))
                x2 = o.grid_composite(g2, (seam, _sub(right[1], i), _sub(left[1], i), bottom))
                return o.grid_composite(((x1,), (x2,)), (0, (0, 1), (0, 1), 0))
            yield f"horizontal cut after row {i}, seam {format_tree(seam)}", run


def _insertion_cases(o: CubicalOracle, grid: Grid, trees: Trees, depth_bound: int):
    """Units in a pair of opposite bracketings against an inserted identity row or column."""
    rows, cols = len(grid), len(grid[0])
    top, right, left, bottom = trees
    if cols + 1 <= o.max_cols:
        for pos in range(cols + 1):
            t, b = insert_unit(top, pos, cols), insert_unit(bottom, pos, cols)
            if t is None or b is None or max(depth(t[0]), depth(b[0])) > depth_bound:
                continue
            col = pos if pos < cols else cols - 1
            side = 2 if pos < cols else 1
            ids = [o.identity_h(o.boundary(grid[i][col])[side]) for i in range(rows)]
            wide = tuple(r[:pos] + (ids[i],) + r[pos:] for i, r in enumerate(grid))
            yield (f"identity column at {pos}", (t[0], right, left, b[0]),
                   wide, (t[1], right, left, b[1]))
    if rows + 1 <= o.max_rows:
        for pos in range(rows + 1):
            lt, rt = insert_unit(left, pos, rows), insert_unit(right, pos, rows)
            if lt is None or rt is None or max(depth(lt[0]), depth(rt[0])) > depth_bound:
                continue
            row = pos if pos < rows else rows - 1
            side = 0 if pos < rows else 3
            ids = tuple(o.identity_v(o.boundary(z)[side]) for z in grid[row])
            tall = grid[:pos] + (ids,) + grid[pos:]
            yield (f"identity row at {pos}", (top, rt[0], lt[0], bottom),
                   tall, (top, rt[1], lt[1], bottom))


def check_cubical_coherence(o: CubicalOracle, max_rows: int = 3, max_cols: int = 3, max_depth: int = 3,
                            seed: int = 0, samples: int = 30, exhaustive_limit: int = 200,
                            brackets_per_grid: int = 12) -> Report:
    if max_rows > o.max_rows or max_cols > o.max_cols or max_depth > o.max_depth:
        raise OracleOutOfRange(f"requested {max_rows}x{max_cols}, depth {max_depth}; oracle declares "
                               f"{o.max_rows}x{o.max_cols}, depth {o.max_depth}")
    rng = random.Random(seed)
    report = Report(f"cubical coherence: {o.name}")
    report.note(f"bounded check: grids up to {max_rows}x{max_cols}, bracket depth {max_depth}, seed {seed}; "
                "larger grids and deeper bracketings are not examined")
    for rows, cols in product(range(1, max_rows + 1), range(1, max_cols + 1)):
        grids, how = _sample(o, rows, cols, exhaustive_limit, samples, rng)
        report.note(f"{rows}x{cols}: {how}")
        for grid in grids:
            gtext = _fmt_grid(o, grid)
            for trees in _tree_tuples(rows, cols, max_depth, brackets_per_grid, rng):
                whole = o.grid_composite(grid, trees)
                w = (gtext, _fmt_trees(trees))
                report.checked += 1
                if o.boundary(whole) != o.expected_boundary(grid, trees):
                    report.add("composite has the bracketed boundary", w,
                               f"{o.fmt(whole)} has boundary {o.boundary(whole)}")
                for desc, run in _block_cases(o, grid, trees):
                    report.checked += 1
                    other = run()
                    if other != whole:
                        report.add("any two ways of composing a grid agree", w + (desc,),
                                   f"{o.fmt(whole)} != {o.fmt(other)}")
            trees = tuple(left_nested(n) for n in (cols, rows, rows, cols))
            for desc, with_unit, bigger, with_leaf in _insertion_cases(o, grid, trees, max_depth):
                report.checked += 1
                a = o.grid_composite(grid, with_unit)
                b = o.grid_composite(bigger, with_leaf)
                if a != b:
                    report.add("identity insertion agrees with a unit in the bracketing",
                               (gtext, _fmt_trees(with_unit), desc), f"{o.fmt(a)} != {o.fmt(b)}")
            if (rows, cols) == (2, 2):
                _two_by_two(o, grid, report)
    return report


def _two_by_two(o: CubicalOracle, grid: Grid, report: Report) -> None:
    """The whole 2x2 composite, rows first, and columns first."""
    split = ((0, 1), (0, 1), (0, 1), (0, 1))
    cell = (0, 0, 0, 0)
    whole = o.grid_composite(grid, split)
    rows = [o.grid_composite((r,), ((0, 1), 0, 0, (0, 1))) for r in grid]
    cols = [o.grid_composite(((grid[0][j],), (grid[1][j],)), (0, (0, 1), (0, 1), 0)) for j in range(2)]
    by_rows = o.grid_composite(((rows[0],), (rows[1],)), (0, (0, 1), (0, 1), 0))
    by_cols = o.grid_composite(((cols[0], cols[1]),), ((0, 1), 0, 0, (0, 1)))
    singles = [[o.grid_composite(((z,),), cell) for z in r] for r in grid]
    by_cells = o.grid_composite(tuple(tuple(r) for r in singles), split)
    for name, x in (("rows first", by_rows), ("columns first", by_cols), ("cellwise", by_cells)):
        report.checked += 1
        if x != whole:
            report.add("the composites of a 2x2 grid agree", (_fmt_grid(o, grid), name), f"{o.fmt(whole)} != {o.fmt(x)}")


PASTINGS = ("T", "B", "L", "R")


def _pasted(o: CubicalOracle, which: str, z: Hashable) -> Hashable:
    t, r, l, b = o.boundary(z)
    if which == "T":
        return o.grid_composite(((o.identity_v(t),), (z,)), (0, (0, 1), (0, 1), 0))
    if which == "B":
        return o.grid_composite(((z,), (o.identity_v(b),)), (0, (0, 1), (0, 1), 0))
    if which == "L":
        return o.grid_composite(((o.identity_h(l), z),), ((0, 1), 0, 0, (0, 1)))
    return o.grid_composite(((z, o.identity_h(r)),), ((0, 1), 0, 0, (0, 1)))


def pasted_boundary(o: CubicalOracle, which: str, bd: tuple[str, str, str, str]) -> tuple[str, str, str, str]:
    t, r, l, b = bd
    if which == "T":
        return (t, o.vcomp1(o.vid1(o.v_ends(r)[0]), r), o.vcomp1(o.vid1(o.v_ends(l)[0]), l), b)
    if which == "B":
        return (t, o.vcomp1(r, o.vid1(o.v_ends(r)[1])), o.vcomp1(l, o.vid1(o.v_ends(l)[1])), b)
    if which == "L":
        return (o.hcomp1(o.hid1(o.h_ends(t)[0]), t), r, l, o.hcomp1(o.hid1(o.h_ends(b)[0]), b))
    return (o.hcomp1(t, o.hid1(o.h_ends(t)[1])), r, l, o.hcomp1(b, o.hid1(o.h_ends(b)[1])))


def check_cubical_tidiness(o: CubicalOracle) -> Report:
    """Pasting an identity square on each side is a bijection, per boundary of the pool."""
    report = Report(f"cubical tidiness: {o.name}")
    report.note("boundaries range over the oracle's generation pool")
    for bd in sorted(o.boundaries()):
        for which in PASTINGS:
            report.checked += 1
            dom = o.squares(bd)
            cod = o.squares(pasted_boundary(o, which, bd))
            image = [_pasted(o, which, z) for z in dom]
            if len(set(image)) != len(image):
                report.add(f"identity pasting bijection ({which})", bd,
                           f"not injective: squares={len(dom)}, pasted={len(cod)}")
            elif set(image) != set(cod):
                report.add(f"identity pasting bijection ({which})", bd,
                           f"not surjective: squares={len(dom)}, pasted={len(cod)}")
    return report
