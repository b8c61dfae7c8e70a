"""The free doubly weak double category on a double graph with bigons.

1-cells are bracket trees. A 2-cell is a strict core (a decorated grid)
together with a boundary made of sequences of bracket trees; erasing the
brackets and units must give the core's boundary. Coherence cells are the
cells whose core has no generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Union

from .computad import Boundary, Direction, DoubleComputad, Path, Shape, TwoComputad, symmetry as graph_symmetry
from .free_engine import (
    DecoratedGrid,
    seam_end,
    EngineError,
    LayeredDiagram,
    Seam,
    diagram_hcomp,
    diagram_vcomp,
    grid_boundary,
    grid_generator,
    grid_hcomp,
    grid_hid,
    grid_vcomp,
    grid_vid,
    identity_diagram,
)


class WeakFreeError(Exception):
    pass


class NonComposableTrees(WeakFreeError):
    pass


class NotCoherenceBoundary(WeakFreeError):
    pass


class BracketInterfaceMismatch(WeakFreeError):
    pass


class SplitMismatch(WeakFreeError):
    pass


# ------------------------------------------------------------ bracket trees


@dataclass(frozen=True)
class Leaf:
    cell: str
    direction: Direction


@dataclass(frozen=True)
class Unit:
    obj: str
    direction: Direction


@dataclass(frozen=True)
class Node:
    left: "BracketTree"
    right: "BracketTree"

    @property
    def direction(self) -> Direction:
        return self.left.direction


BracketTree = Union[Leaf, Unit, Node]


def flatten(t: BracketTree) -> tuple[str, ...]:
    if isinstance(t, Leaf):
        return (t.cell,)
    if isinstance(t, Unit):
        return ()
    return flatten(t.left) + flatten(t.right)


def tree_ends(g: DoubleComputad, t: BracketTree) -> tuple[str, str]:
    """(start, end) objects, checking composability at every node."""
    if isinstance(t, Leaf):
        table = g.table1(t.direction)
        if t.cell not in table:
            raise NonComposableTrees(f"unknown {t.direction.value}-cell {t.cell!r}")
        return table[t.cell]
    if isinstance(t, Unit):
        if t.obj not in g.objects:
            raise NonComposableTrees(f"unknown object {t.obj!r}")
        return t.obj, t.obj
    if t.left.direction is not t.right.direction:
        raise NonComposableTrees("mixed directions in one tree")
    s1, e1 = tree_ends(g, t.left)
    s2, e2 = tree_ends(g, t.right)
    if e1 != s2:
        raise NonComposableTrees(f"{format_tree(t.left)} ends at {e1}, {format_tree(t.right)} starts at {s2}")
    return s1, e2


def format_tree(t: BracketTree) -> str:
    if isinstance(t, Leaf):
        return t.cell
    if isinstance(t, Unit):
        return f"1@{t.obj}"
    return f"({format_tree(t.left)} . {format_tree(t.right)})"


def mirror(t: BracketTree) -> BracketTree:
    if isinstance(t, Node):
        return Node(mirror(t.right), mirror(t.left))
    return t


def left_nested(g: DoubleComputad, p: Path) -> BracketTree:
    """((x1 . x2) . x3) ... ; the unit when p is empty."""
    if not p.cells:
        return Unit(p.anchor, p.direction)
    t: BracketTree = Leaf(p.cells[0], p.direction)
    for x in p.cells[1:]:
        t = Node(t, Leaf(x, p.direction))
    return t


def bracketings(g: DoubleComputad, p: Path, max_units: int = 0) -> list[BracketTree]:
    """All bracket trees flattening to p that contain at most `max_units` units."""
    cells, d = p.cells, p.direction
    table = g.table1(d)
    memo: dict[tuple[int, int, int], list[BracketTree]] = {}

    def obj_at(i: int) -> str:
        return p.anchor if i == 0 else table[cells[i - 1]][1]

    def build(i: int, j: int, u: int) -> list[BracketTree]:
        """Trees over cells[i:j] with exactly u units."""
        key = (i, j, u)
        if key in memo:
            return memo[key]
        out: list[BracketTree] = []
        if j - i == 1 and u == 0:
            out.append(Leaf(cells[i], d))
        if i == j and u == 1:
            out.append(Unit(obj_at(i), d))
        for k in range(i, j + 1):
            for u1 in range(u + 1):
                if (k == i and u1 == 0) or (k == j and u - u1 == 0):
                    continue
                for a in build(i, k, u1):
                    for b in build(k, j, u - u1):
                        out.append(Node(a, b))
        memo[key] = out
        return out

    return [t for u in range(max_units + 1) for t in build(0, len(cells), u)]


# ---------------------------------------------------------------- boundaries


Trees = tuple[BracketTree, ...]


@dataclass(frozen=True)
class WeakBoundary:
    top: Trees
    right: Trees
    left: Trees
    bottom: Trees
    anchor: str  # top-left corner

    @property
    def shape(self) -> Shape:
        return Shape(len(self.top), len(self.right), len(self.left), len(self.bottom))


def flat_sequence(g: DoubleComputad, trees: Trees, start: str, direction: Direction) -> Path:
    here = start
    cells: tuple[str, ...] = ()
    for t in trees:
        if t.direction is not direction:
            raise NonComposableTrees(f"{format_tree(t)} is not a {direction.value}-tree")
        s, e = tree_ends(g, t)
        if s != here:
            raise NonComposableTrees(f"{format_tree(t)} starts at {s}, expected {here}")
        cells += flatten(t)
        here = e
    return Path(direction, cells, start)


def sequence_end(g: DoubleComputad, trees: Trees, start: str) -> str:
    return tree_ends(g, trees[-1])[1] if trees else start


def flat_boundary(g: DoubleComputad, b: WeakBoundary) -> Boundary:
    top = flat_sequence(g, b.top, b.anchor, Direction.H)
    left = flat_sequence(g, b.left, b.anchor, Direction.V)
    right = flat_sequence(g, b.right, sequence_end(g, b.top, b.anchor), Direction.V)
    bottom = flat_sequence(g, b.bottom, sequence_end(g, b.left, b.anchor), Direction.H)
    if sequence_end(g, b.right, right.anchor) != sequence_end(g, b.bottom, bottom.anchor):
        raise NonComposableTrees("right and bottom sides end at different objects")
    return Boundary(top, right, left, bottom)


@dataclass(frozen=True)
class WeakCell2:
    core: DecoratedGrid
    boundary: WeakBoundary

    @property
    def is_coherence(self) -> bool:
        return self.core.is_identity


@dataclass(frozen=True)
class StrictCell2:
    """A normal form together with its flattened boundary."""

    core: Union[DecoratedGrid, LayeredDiagram]
    boundary: Boundary


def format_weak_boundary(b: WeakBoundary) -> str:
    side = lambda ts: "[" + ", ".join(format_tree(t) for t in ts) + "]"  # noqa: E731
    return f"top {side(b.top)} right {side(b.right)} left {side(b.left)} bottom {side(b.bottom)} @{b.anchor}"


# ------------------------------------------------------------- the structure


class WeakFree:
    """Cells of the free doubly weak double category over a double graph with bigons."""

    def __init__(self, graph: DoubleComputad):
        self.g = graph

    def make_cell(self, core: DecoratedGrid, boundary: WeakBoundary) -> WeakCell2:
        if flat_boundary(self.g, boundary) != grid_boundary(core, self.g):
            raise BracketInterfaceMismatch("bracketed boundary does not flatten to the core boundary")
        return WeakCell2(core, boundary)

    def generator(self, name: str) -> WeakCell2:
        b = self.g.cells2[name]
        leaves = lambda p: tuple(Leaf(x, p.direction) for x in p.cells)  # noqa: E731
        wb = WeakBoundary(leaves(b.top), leaves(b.right), leaves(b.left), leaves(b.bottom), b.top.anchor)
        return WeakCell2(grid_generator(self.g, name), wb)

    def coherence_cell(self, b: WeakBoundary) -> WeakCell2:
        try:
            flat = flat_boundary(self.g, b)
        except NonComposableTrees as exc:
            raise NotCoherenceBoundary(str(exc)) from None
        if flat.top.cells != flat.bottom.cells or flat.left.cells != flat.right.cells:
            raise NotCoherenceBoundary("opposite sides flatten to different paths")
        if not flat.left.cells:
            core = grid_vid(flat.top)
        elif not flat.top.cells:
            core = grid_hid(flat.left)
        else:
            raise NotCoherenceBoundary("neither pair of sides flattens to an empty path")
        return WeakCell2(core, b)

    def representability_cell(self, direction: Direction, orientation: str,
                              trees: tuple[BracketTree, BracketTree] | None = None,
                              obj: str | None = None) -> WeakCell2:
        """Binary composition cell [t1, t2] => [t1 . t2], or identity creation [] => [1_A].
        `decompose` gives the inverse cell."""
        if orientation not in ("compose", "decompose"):
            raise ValueError(f"orientation must be compose or decompose, not {orientation!r}")
        if trees is not None:
            t1, t2 = trees
            for t in trees:
                if t.direction is not direction:
                    raise NonComposableTrees(f"{format_tree(t)} is not a {direction.value}-tree")
            s1, e1 = tree_ends(self.g, t1)
            s2, _ = tree_ends(self.g, t2)
            if e1 != s2:
                raise NonComposableTrees(f"{format_tree(t1)} ends at {e1}, {format_tree(t2)} starts at {s2}")
            many, one, anchor = (t1, t2), (Node(t1, t2),), s1
        else:
            if obj not in self.g.objects:
                raise NonComposableTrees(f"unknown object {obj!r}")
            many, one, anchor = (), (Unit(obj, direction),), obj
        src, tgt = (many, one) if orientation == "compose" else (one, many)
        if direction is Direction.H:
            b = WeakBoundary(src, (), (), tgt, anchor)
        else:
            b = WeakBoundary((), tgt, src, (), anchor)
        return self.coherence_cell(b)

    def identity_h(self, trees: Trees, anchor: str) -> WeakCell2:
        """Horizontal identity on a sequence of vertical trees."""
        return self.coherence_cell(WeakBoundary((), trees, trees, (), anchor))

    def identity_v(self, trees: Trees, anchor: str) -> WeakCell2:
        """Vertical identity on a sequence of horizontal trees."""
        return self.coherence_cell(WeakBoundary(trees, (), (), trees, anchor))

    def compose(self, c1: WeakCell2, c2: WeakCell2, direction: Direction) -> WeakCell2:
        b1, b2 = c1.boundary, c2.boundary
        if direction is Direction.H:
            if b1.right != b2.left:
                raise BracketInterfaceMismatch(
                    f"right {[format_tree(t) for t in b1.right]} vs left {[format_tree(t) for t in b2.left]}")
            core = grid_hcomp(c1.core, c2.core, self.g)
            b = WeakBoundary(b1.top + b2.top, b2.right, b1.left, b1.bottom + b2.bottom, b1.anchor)
        else:
            if b1.bottom != b2.top:
                raise BracketInterfaceMismatch(
                    f"bottom {[format_tree(t) for t in b1.bottom]} vs top {[format_tree(t) for t in b2.top]}")
            core = grid_vcomp(c1.core, c2.core, self.g)
            b = WeakBoundary(b1.top, b1.right + b2.right, b1.left + b2.left, b2.bottom, b1.anchor)
        return WeakCell2(core, b)

    def hcomp(self, c1: WeakCell2, c2: WeakCell2) -> WeakCell2:
        return self.compose(c1, c2, Direction.H)

    def vcomp(self, c1: WeakCell2, c2: WeakCell2) -> WeakCell2:
        return self.compose(c1, c2, Direction.V)

    def strictify(self, c: WeakCell2) -> StrictCell2:
        return StrictCell2(c.core, flat_boundary(self.g, c.boundary))

    # Coherence cells used by the pentagon and triangle checks.

    def associator(self, f: BracketTree, g: BracketTree, h: BracketTree) -> WeakCell2:
        """Top f . (g . h), bottom (f . g) . h, for trees of either direction."""
        return self._bigon(Node(f, Node(g, h)), Node(Node(f, g), h))

    def left_unitor(self, f: BracketTree) -> WeakCell2:
        start = tree_ends(self.g, f)[0]
        return self._bigon(Node(Unit(start, f.direction), f), f)

    def right_unitor(self, f: BracketTree) -> WeakCell2:
        end = tree_ends(self.g, f)[1]
        return self._bigon(Node(f, Unit(end, f.direction)), f)

    def identity_on(self, t: BracketTree) -> WeakCell2:
        return self._bigon(t, t)

    def _bigon(self, src: BracketTree, tgt: BracketTree) -> WeakCell2:
        anchor = tree_ends(self.g, src)[0]
        if src.direction is Direction.H:
            return self.coherence_cell(WeakBoundary((src,), (), (), (tgt,), anchor))
        return self.coherence_cell(WeakBoundary((), (tgt,), (src,), (), anchor))

    def whisker(self, c: WeakCell2, other: BracketTree, side: str) -> WeakCell2:
        """Whisker a bigon-shaped coherence cell by the identity on another tree.

        The bigon [s] => [t] becomes [s . other] => [t . other] (side='after') or
        [other . s] => [other . t] (side='before'), by decomposing, composing with
        the identity on `other`, and recomposing.
        """
        b = c.boundary
        horizontal = len(b.top) == 1 and len(b.bottom) == 1 and not b.left and not b.right
        if not horizontal and not (len(b.left) == 1 and len(b.right) == 1 and not b.top and not b.bottom):
            raise WeakFreeError("whiskering needs a bigon-shaped cell")
        d = Direction.H if horizontal else Direction.V
        src, tgt = (b.top[0], b.bottom[0]) if horizontal else (b.left[0], b.right[0])
        pair_src = (src, other) if side == "after" else (other, src)
        pair_tgt = (tgt, other) if side == "after" else (other, tgt)
        ident = self.identity_on(other)
        first, second = (c, ident) if side == "after" else (ident, c)
        along = Direction.H if d is Direction.H else Direction.V
        pasted = self.compose(first, second, along)
        down = self.representability_cell(d, "decompose", pair_src)
        up = self.representability_cell(d, "compose", pair_tgt)
        across = d.other
        return self.compose(self.compose(down, pasted, across), up, across)

    def vertical_paste(self, c1: WeakCell2, c2: WeakCell2) -> WeakCell2:
        """Paste bigon-shaped cells along their shared 1-cell tree."""
        b = c1.boundary
        return self.vcomp(c1, c2) if len(b.top) == 1 and not b.left else self.hcomp(c1, c2)


def pentagon_composites(w: WeakFree, f: BracketTree, g: BracketTree, h: BracketTree,
                        k: BracketTree) -> tuple[WeakCell2, WeakCell2]:
    """Both ways from f.(g.(h.k)) to ((f.g).h).k."""
    a = w.associator
    path1 = w.vertical_paste(a(f, g, Node(h, k)), a(Node(f, g), h, k))
    path2 = w.vertical_paste(
        w.vertical_paste(w.whisker(a(g, h, k), f, "before"), a(f, Node(g, h), k)),
        w.whisker(a(f, g, h), k, "after"),
    )
    return path1, path2


def triangle_composites(w: WeakFree, f: BracketTree, g: BracketTree) -> tuple[WeakCell2, WeakCell2]:
    """Both ways from f.(1.g) to f.g."""
    mid = tree_ends(w.g, f)[1]
    one = Unit(mid, f.direction)
    path1 = w.vertical_paste(w.associator(f, one, g), w.whisker(w.right_unitor(f), g, "after"))
    path2 = w.whisker(w.left_unitor(g), f, "before")
    return path1, path2


# ---------------------------------------------------------------- quintets


@dataclass(frozen=True)
class QuintetCell:
    """A square in the quintet construction: a 2-cell top.right => left.bottom."""

    top: Path
    right: Path
    left: Path
    bottom: Path
    diagram: LayeredDiagram


def quintet_cell(x: TwoComputad, d: LayeredDiagram, split: Shape) -> QuintetCell:
    if split.a + split.b != len(d.source) or split.c + split.d != len(d.target):
        raise SplitMismatch(f"split {split} does not fit {len(d.source)} => {len(d.target)}")
    s, t = d.source, d.target
    top = Path(Direction.H, s.cells[:split.a], s.anchor)
    right = Path(Direction.H, s.cells[split.a:], x.end(top))
    left = Path(Direction.H, t.cells[:split.c], t.anchor)
    bottom = Path(Direction.H, t.cells[split.c:], x.end(left))
    return QuintetCell(top, right, left, bottom, d)


def quintet_hcomp(x: TwoComputad, q1: QuintetCell, q2: QuintetCell) -> QuintetCell:
    if q1.right != q2.left:
        raise SplitMismatch("right side of the first quintet differs from left side of the second")
    d = diagram_vcomp(x, diagram_hcomp(x, identity_diagram(q1.top), q2.diagram),
                      diagram_hcomp(x, q1.diagram, identity_diagram(q2.bottom)))
    return QuintetCell(x.concat(q1.top, q2.top), q2.right, q1.left, x.concat(q1.bottom, q2.bottom), d)


def quintet_vcomp(x: TwoComputad, q1: QuintetCell, q2: QuintetCell) -> QuintetCell:
    if q1.bottom != q2.top:
        raise SplitMismatch("bottom of the first quintet differs from top of the second")
    d = diagram_vcomp(x, diagram_hcomp(x, q1.diagram, identity_diagram(q2.right)),
                      diagram_hcomp(x, identity_diagram(q1.left), q2.diagram))
    return QuintetCell(q1.top, x.concat(q1.right, q2.right), x.concat(q1.left, q2.left), q2.bottom, d)


# ---------------------------------------------------------------- symmetry


def _rev_seams(g: DoubleComputad, seams: tuple[Seam, ...], direction: Direction) -> tuple[Seam, ...]:

    return tuple(Seam(seam_end(g, s, direction), tuple(reversed(s.chain))) for s in seams)


def grid_symmetry(grid: DecoratedGrid, g: DoubleComputad, op: str) -> DecoratedGrid:
    """The grid seen in the mirrored graph `computad.symmetry(g, op)`."""
    m, n = grid.rows, grid.cols
    b = grid_boundary(grid, g)
    if op == "hop":
        squares = tuple(tuple(reversed(row)) for row in grid.squares)
        hseams = tuple(tuple(reversed(level)) for level in grid.hseams)
        vseams = tuple(tuple(reversed(_rev_seams(g, row, Direction.V))) for row in grid.vseams)
        return DecoratedGrid(m, n, squares, hseams, vseams, g.end(b.top))
    if op == "vop":
        squares = tuple(reversed(grid.squares))
        hseams = tuple(reversed([_rev_seams(g, level, Direction.H) for level in grid.hseams]))
        vseams = tuple(reversed(grid.vseams))
        return DecoratedGrid(m, n, squares, hseams, vseams, b.left.anchor if not b.left.cells else g.end(b.left))
    if op == "transpose":
        squares = tuple(tuple(grid.squares[i][j] for i in range(m)) for j in range(n))
        hseams = tuple(tuple(grid.vseams[i][k] for i in range(m)) for k in range(n + 1))
        vseams = tuple(tuple(grid.hseams[k][j] for k in range(m + 1)) for j in range(n))
        return DecoratedGrid(n, m, squares, hseams, vseams, grid.anchor)
    raise ValueError(f"unknown symmetry {op!r}")


def _swap_dir(t: BracketTree) -> BracketTree:
    if isinstance(t, Leaf):
        return Leaf(t.cell, t.direction.other)
    if isinstance(t, Unit):
        return Unit(t.obj, t.direction.other)
    return Node(_swap_dir(t.left), _swap_dir(t.right))


def cell_symmetry(c: WeakCell2, g: DoubleComputad, op: str) -> WeakCell2:
    """Apply hop, vop or transpose to a weak cell over g; the result lives over symmetry(g, op)."""
    b = c.boundary
    rev = lambda ts: tuple(mirror(t) for t in reversed(ts))  # noqa: E731
    core = grid_symmetry(c.core, g, op)
    if op == "hop":
        nb = WeakBoundary(rev(b.top), b.left, b.right, rev(b.bottom), core.anchor)
    elif op == "vop":
        nb = WeakBoundary(b.bottom, rev(b.right), rev(b.left), b.top, core.anchor)
    elif op == "transpose":
        sw = lambda ts: tuple(_swap_dir(t) for t in ts)  # noqa: E731
        nb = WeakBoundary(sw(b.left), sw(b.bottom), sw(b.top), sw(b.right), core.anchor)
    else:
        raise ValueError(f"unknown symmetry {op!r}")
    return WeakCell2(core, nb)


def symmetric_structure(w: WeakFree, op: str) -> WeakFree:
    return WeakFree(graph_symmetry(w.g, op))


# ----------------------------------------------------- strictification check


@dataclass(frozen=True)
class StrictificationReport:
    objects_bijective: bool
    paths_checked: int
    essentially_surjective: bool
    boundaries_checked: int
    cells_bijective: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.objects_bijective and self.essentially_surjective and self.cells_bijective


def paths_up_to(g: DoubleComputad, direction: Direction, bound: int) -> list[Path]:
    table = g.table1(direction)
    out = [Path(direction, (), a) for a in sorted(g.objects)]
    frontier = list(out)
    for _ in range(bound):
        nxt = []
        for p in frontier:
            end = g.end(p)
            for x in sorted(table):
                if table[x][0] == end:
                    nxt.append(Path(direction, p.cells + (x,), p.anchor))
        out += nxt
        frontier = nxt
    return out


def grids_with_boundary(g: DoubleComputad, b: Boundary) -> list[DecoratedGrid]:
    """Every decorated grid over g with the given boundary (finite when the bigons form no cycles)."""

    m, n = len(b.left), len(b.top)
    if len(b.right) != m or len(b.bottom) != n:
        return []
    squares_by: dict[tuple[str, str], list[str]] = {}
    hb: dict[str, list[str]] = {}
    vb: dict[str, list[str]] = {}
    for name in sorted(g.cells2):
        sb = g.cells2[name]
        shape = sb.shape()
        if shape.is_square:
            squares_by.setdefault((sb.top.cells[0], sb.left.cells[0]), []).append(name)
        elif shape.is_horizontal_bigon:
            hb.setdefault(sb.top.cells[0], []).append(name)
        elif shape.is_vertical_bigon:
            vb.setdefault(sb.left.cells[0], []).append(name)

    def chains(start: str, table: dict[str, list[str]], direction: Direction, depth: int = 0) -> list[Seam]:
        if depth > 32:
            raise WeakFreeError("bigon chains do not terminate; the bigon graph has a cycle")
        out = [Seam(start)]
        for name in table.get(start, ()):
            sb = g.cells2[name]
            nxt = (sb.bottom if direction is Direction.H else sb.right).cells[0]
            out += [Seam(start, (name,) + s.chain) for s in chains(nxt, table, direction, depth + 1)]
        return out

    results: list[DecoratedGrid] = []
    hlevels: list[tuple[Seam, ...]] = []
    vrows: list[tuple[Seam, ...]] = []
    rows: list[tuple[str, ...]] = []

    def fill_level(i: int, edges: tuple[str, ...]) -> None:
        for combo in product(*(chains(e, hb, Direction.H) for e in edges)):
            hlevels.append(tuple(combo))
            if i == m:
                grid = DecoratedGrid(m, n, tuple(rows), tuple(hlevels), tuple(vrows), b.top.anchor)
                if grid_boundary(grid, g) == b:
                    results.append(grid)
            else:
                fill_row(i, tuple(seam_end(g, s, Direction.H) for s in combo))
            hlevels.pop()

    def fill_row(i: int, tops: tuple[str, ...]) -> None:
        def go(j: int, entering: str, seams: list[Seam], squares: list[str], bottoms: list[str]) -> None:
            for seam in chains(entering, vb, Direction.V):
                here = seam_end(g, seam, Direction.V)
                if j == n:
                    if here == b.right.cells[i]:
                        vrows.append(tuple(seams + [seam]))
                        rows.append(tuple(squares))
                        fill_level(i + 1, tuple(bottoms))
                        rows.pop()
                        vrows.pop()
                    continue
                for sq in squares_by.get((tops[j], here), ()):
                    sb = g.cells2[sq]
                    go(j + 1, sb.right.cells[0], seams + [seam], squares + [sq], bottoms + [sb.bottom.cells[0]])

        go(0, b.left.cells[i], [], [], [])

    fill_level(0, b.top.cells)
    return results


def side_bracketings(g: DoubleComputad, p: Path) -> list[Trees]:
    """The ways to present a path as a boundary side: one leaf per cell, or a
    single unit-free tree (the unit when p is empty)."""
    leaves = tuple(Leaf(x, p.direction) for x in p.cells)
    if not p.cells:
        return [(), (Unit(p.anchor, p.direction),)]
    singles = [(t,) for t in bracketings(g, p)]
    return [leaves] + [s for s in singles if s != leaves]


def check_strictification(g: DoubleComputad, bound: int = 3) -> StrictificationReport:
    """Check the three equivalence conditions for the inclusion of the weak-free
    structure into its strictification, over paths of length at most `bound`.

    Objects are shared. Every path is the flattening of its left-nested tree and
    the coherence cell comparing them must be invertible. On 2-cells we
    enumerate the strict cells (grids) once per flattened boundary and check
    that for every bracketing of that boundary each grid has exactly one lift,
    and that strictifying the lift gives the grid back.
    """
    w = WeakFree(g)
    failures: list[str] = []
    objects_ok = len(set(g.objects)) == len(g.objects)

    hpaths = paths_up_to(g, Direction.H, bound)
    vpaths = paths_up_to(g, Direction.V, bound)
    surj = True
    for p in hpaths + vpaths:
        t = left_nested(g, p)
        leaves = tuple(Leaf(x, p.direction) for x in p.cells)
        try:
            if flatten(t) != p.cells:
                raise WeakFreeError("flattening mismatch")
            if p.direction is Direction.H:
                there = w.coherence_cell(WeakBoundary(leaves, (), (), (t,), p.anchor))
                back = w.coherence_cell(WeakBoundary((t,), (), (), leaves, p.anchor))
                ok = (w.vcomp(there, back) == w.identity_v(leaves, p.anchor)
                      and w.vcomp(back, there) == w.identity_v((t,), p.anchor))
            else:
                there = w.coherence_cell(WeakBoundary((), (t,), leaves, (), p.anchor))
                back = w.coherence_cell(WeakBoundary((), leaves, (t,), (), p.anchor))
                ok = (w.hcomp(there, back) == w.identity_h(leaves, p.anchor)
                      and w.hcomp(back, there) == w.identity_h((t,), p.anchor))
            if not ok:
                raise WeakFreeError("comparison cell is not invertible")
        except (WeakFreeError, EngineError) as exc:
            surj = False
            failures.append(f"essential surjectivity at {p}: {exc}")

    hfrom: dict[str, list[Path]] = {}
    vfrom: dict[str, list[Path]] = {}
    for p in hpaths:
        hfrom.setdefault(p.anchor, []).append(p)
    for p in vpaths:
        vfrom.setdefault(p.anchor, []).append(p)

    cells_ok = True
    boundaries = 0
    for top in hpaths:
        for left in vfrom.get(top.anchor, []):
            for right in vfrom.get(g.end(top), []):
                for bottom in hfrom.get(g.end(left), []):
                    if g.end(bottom) != g.end(right):
                        continue
                    b = Boundary(top, right, left, bottom)
                    try:
                        grids = grids_with_boundary(g, b)
                    except WeakFreeError as exc:
                        cells_ok = False
                        failures.append(f"cells at {b}: {exc}")
                        continue
                    for sides in product(*(side_bracketings(g, q) for q in (top, right, left, bottom))):
                        boundaries += 1
                        wb = WeakBoundary(*sides, top.anchor)
                        lifts = {w.make_cell(grid, wb) for grid in grids}
                        back = {w.strictify(c).core for c in lifts}
                        if len(lifts) != len(grids) or back != set(grids):
                            cells_ok = False
                            failures.append(f"cells at {format_weak_boundary(wb)}: not a bijection")
    return StrictificationReport(objects_ok, len(hpaths) + len(vpaths), surj, boundaries, cells_ok, tuple(failures))


# ---------------------------------------------------------------- fixtures


def _graph(objects, hcells, vcells, cells2) -> DoubleComputad:
    g = DoubleComputad(tuple(objects), hcells, vcells, {})
    return DoubleComputad(tuple(objects), hcells, vcells, {
        name: Boundary(g.path(Direction.H, t, a.get("top")), g.path(Direction.V, r, a.get("right")),
                       g.path(Direction.V, lf, a.get("left")), g.path(Direction.H, bt, a.get("bottom")))
        for name, (t, r, lf, bt, a) in cells2.items()
    })


def fixture_graphs() -> dict[str, DoubleComputad]:
    """Small double graphs with bigons used for coherence and strictification checks.

    single-square: one square on four objects.
    loop-square: one object, a horizontal and a vertical loop, one square on them.
    bigons: two parallel squares related by a horizontal and a vertical bigon.
    """
    single = _graph("ABCD", {"f": ("A", "B"), "k": ("C", "D")}, {"h": ("A", "C"), "v": ("B", "D")},
                    {"alpha": (["f"], ["v"], ["h"], ["k"], {})})
    loop = _graph("X", {"f": ("X", "X")}, {"u": ("X", "X")},
                  {"sigma": (["f"], ["u"], ["u"], ["f"], {})})
    bigons = _graph(
        "ABCD",
        {"f": ("A", "B"), "g": ("A", "B"), "k": ("C", "D")},
        {"h": ("A", "C"), "v": ("B", "D"), "w": ("B", "D")},
        {
            "alpha": (["f"], ["v"], ["h"], ["k"], {}),
            "alpha2": (["g"], ["w"], ["h"], ["k"], {}),
            "beta": (["f"], [], [], ["g"], {"left": "A", "right": "B"}),
            "delta": ([], ["w"], ["v"], [], {"top": "B", "bottom": "D"}),
        },
    )
    return {"single-square": single, "loop-square": loop, "bigons": bigons}
