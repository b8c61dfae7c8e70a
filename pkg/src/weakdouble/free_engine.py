"""Normal forms for free strict 2-categories and free strict double categories.

Pasting terms are evaluated either to layered diagrams (one generator per
layer, modulo interchange) or to decorated grids (squares in an m x n array
with bigon chains on the seams). A breadth-first rewriting oracle decides
equality the slow way and is used to validate both normal forms.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Union

from .computad import Boundary, Direction, DoubleComputad, Path, TwoComputad

Computad = Union[TwoComputad, DoubleComputad]


class EngineError(Exception):
    pass


class ParseError(EngineError):
    def __init__(self, message: str, line: int, column: int):
        self.line, self.column = line, column
        super().__init__(f"{line}:{column}: {message}")


class DanglingId(EngineError):
    pass


class InterfaceMismatch(EngineError):
    def __init__(self, node: str, detail: str):
        self.node = node
        super().__init__(f"{detail} at {node}")


class UnsupportedGeneratorShape(EngineError):
    pass


# --------------------------------------------------------------------- terms


class _CachedHash:
    """Terms are hashed constantly by the oracle; compute each hash once."""

    __slots__ = ()

    def __hash__(self) -> int:
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((type(self).__name__,) + tuple(self.__dict__[f] for f in self.__dataclass_fields__))
            object.__setattr__(self, "_hash", h)
            return h


@dataclass(frozen=True)
class Gen(_CachedHash):
    name: str


@dataclass(frozen=True)
class HId(_CachedHash):
    path: Path  # vertical


@dataclass(frozen=True)
class VId(_CachedHash):
    path: Path  # horizontal


@dataclass(frozen=True)
class HComp(_CachedHash):
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class VComp(_CachedHash):
    top: "Term"
    bottom: "Term"


Term = Union[Gen, HId, VId, HComp, VComp]

for _cls in (Gen, HId, VId, HComp, VComp):
    _cls.__hash__ = _CachedHash.__hash__  # type: ignore[method-assign]


def size(t: Term) -> int:
    """Node count, cached on the term."""
    try:
        return t.__dict__["_size"]
    except KeyError:
        pass
    if isinstance(t, HComp):
        n = 1 + size(t.left) + size(t.right)
    elif isinstance(t, VComp):
        n = 1 + size(t.top) + size(t.bottom)
    else:
        n = 1
    object.__setattr__(t, "_size", n)
    return n


def generator_count(t: Term) -> int:
    if isinstance(t, HComp):
        return generator_count(t.left) + generator_count(t.right)
    if isinstance(t, VComp):
        return generator_count(t.top) + generator_count(t.bottom)
    return 1 if isinstance(t, Gen) else 0


def _fmt_path(p: Path) -> str:
    return f"({' '.join((p.direction.value,) + p.cells)}) @{p.anchor}"


def format_term(t: Term) -> str:
    if isinstance(t, Gen):
        return f"gen:{t.name}"
    if isinstance(t, HId):
        return f"(hid {_fmt_path(t.path)})"
    if isinstance(t, VId):
        return f"(vid {_fmt_path(t.path)})"
    if isinstance(t, HComp):
        return f"(hcomp {format_term(t.left)} {format_term(t.right)})"
    return f"(vcomp {format_term(t.top)} {format_term(t.bottom)})"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(@[^\s()]+)|([^\s()@]+))")


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens, pos = [], 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(i: int) -> tuple[int, int]:
        line = max(k for k, s in enumerate(line_starts) if s <= i)
        return line + 1, i - line_starts[line] + 1

    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", *where(pos))
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), *where(start)))
        pos = m.end()
    return tokens


def parse_term(text: str, computad: Computad) -> Term:
    """Parse the s-expression grammar `(hcomp T T) | (vcomp T T) | (hid PATH) | (vid PATH) | gen:ID`."""
    tokens = _tokenize(text)
    i = 0

    def peek() -> tuple[str, int, int]:
        if i >= len(tokens):
            last = tokens[-1] if tokens else ("", 1, 1)
            raise ParseError("unexpected end of input", last[1], last[2])
        return tokens[i]

    def take(expected: str | None = None) -> tuple[str, int, int]:
        nonlocal i
        tok = peek()
        if expected is not None and tok[0] != expected:
            raise ParseError(f"expected {expected!r}, got {tok[0]!r}", tok[1], tok[2])
        i += 1
        return tok

    def path() -> Path:
        take("(")
        d, line, col = take()
        if d not in ("h", "v"):
            raise ParseError(f"path direction must be h or v, got {d!r}", line, col)
        cells = []
        while peek()[0] != ")":
            cells.append(take()[0])
        take(")")
        anchor = None
        if i < len(tokens) and tokens[i][0].startswith("@"):
            anchor = take()[0][1:]
        direction = Direction(d)
        if not cells and anchor is None:
            raise ParseError("empty path needs an @anchor", line, col)
        try:
            return _path_in(computad, direction, cells, anchor)
        except (KeyError, ValueError) as exc:
            raise DanglingId(f"{exc} (line {line}, column {col})") from None

    def term() -> Term:
        tok, line, col = peek()
        if tok.startswith("gen:"):
            take()
            name = tok[4:]
            if name not in computad.cells2:
                raise DanglingId(f"unknown generator {name!r} (line {line}, column {col})")
            return Gen(name)
        take("(")
        head, hl, hc = take()
        if head in ("hcomp", "vcomp"):
            a, b = term(), term()
            take(")")
            return HComp(a, b) if head == "hcomp" else VComp(a, b)
        if head in ("hid", "vid"):
            p = path()
            take(")")
            want = Direction.V if head == "hid" else Direction.H
            if p.direction is not want:
                raise ParseError(f"{head} takes a {want.value}-path", hl, hc)
            return HId(p) if head == "hid" else VId(p)
        raise ParseError(f"unknown operator {head!r}", hl, hc)

    result = term()
    if i != len(tokens):
        tok = tokens[i]
        raise ParseError(f"trailing input {tok[0]!r}", tok[1], tok[2])
    return result


def _path_in(c: Computad, direction: Direction, cells: list[str], anchor: str | None) -> Path:
    if isinstance(c, TwoComputad) and direction is Direction.V:
        if cells:
            raise KeyError("a 2-computad has no vertical 1-cells")
        if anchor not in c.objects:
            raise KeyError(f"unknown object {anchor!r}")
        return Path(Direction.V, (), anchor)
    table = c.table1(direction)
    for x in cells:
        if x not in table:
            raise KeyError(f"unknown {direction.value}-cell {x!r}")
    if not cells:
        if anchor not in c.objects:
            raise KeyError(f"unknown object {anchor!r}")
        return Path(direction, (), anchor)
    for x, y in zip(cells, cells[1:]):
        if table[x][1] != table[y][0]:
            raise ValueError(f"{x} and {y} do not compose")
    if anchor is not None and anchor != table[cells[0]][0]:
        raise ValueError(f"anchor {anchor} is not the start of {cells[0]}")
    return Path(direction, tuple(cells), table[cells[0]][0])


# ------------------------------------------------------------------ typing


def _end(c: Computad, p: Path) -> str:
    if not p.cells:
        return p.anchor
    return c.table1(p.direction)[p.cells[-1]][1]


def _cat(c: Computad, p: Path, q: Path) -> Path:
    return Path(p.direction, p.cells + q.cells, p.anchor)


def generator_boundary(c: Computad, name: str) -> Boundary:
    if isinstance(c, TwoComputad):
        s, t = c.cells2[name]
        return Boundary(s, Path(Direction.V, (), _end(c, s)), Path(Direction.V, (), s.anchor), t)
    return c.cells2[name]


def hid_boundary(c: Computad, p: Path) -> Boundary:
    return Boundary(Path(Direction.H, (), p.anchor), p, p, Path(Direction.H, (), _end(c, p)))


def vid_boundary(c: Computad, p: Path) -> Boundary:
    return Boundary(p, Path(Direction.V, (), _end(c, p)), Path(Direction.V, (), p.anchor), p)


def term_boundary(t: Term, c: Computad) -> Boundary:
    """Derive the boundary bottom-up, raising InterfaceMismatch at the first bad node."""
    if isinstance(t, Gen):
        if t.name not in c.cells2:
            raise DanglingId(t.name)
        return generator_boundary(c, t.name)
    if isinstance(t, HId):
        return hid_boundary(c, t.path)
    if isinstance(t, VId):
        return vid_boundary(c, t.path)
    if isinstance(t, HComp):
        a, b = term_boundary(t.left, c), term_boundary(t.right, c)
        if a.right != b.left:
            raise InterfaceMismatch(format_term(t), f"right side {a.right} vs left side {b.left}")
        return Boundary(_cat(c, a.top, b.top), b.right, a.left, _cat(c, a.bottom, b.bottom))
    a, b = term_boundary(t.top, c), term_boundary(t.bottom, c)
    if a.bottom != b.top:
        raise InterfaceMismatch(format_term(t), f"bottom {a.bottom} vs top {b.top}")
    return Boundary(a.top, _cat(c, a.right, b.right), _cat(c, a.left, b.left), b.bottom)


# ---------------------------------------------------------- decorated grids


@dataclass(frozen=True)
class Seam:
    """The 1-cell entering a seam and the bigons stacked along it."""

    start: str
    chain: tuple[str, ...] = ()


@dataclass(frozen=True)
class DecoratedGrid:
    rows: int
    cols: int
    squares: tuple[tuple[str, ...], ...]  # rows x cols
    hseams: tuple[tuple[Seam, ...], ...]  # (rows + 1) levels x cols
    vseams: tuple[tuple[Seam, ...], ...]  # rows x (cols + 1) levels
    anchor: str  # top-left object

    def generators(self) -> list[str]:
        out = [s for row in self.squares for s in row]
        for seams in (self.hseams, self.vseams):
            out += [b for level in seams for seam in level for b in seam.chain]
        return out

    @property
    def is_identity(self) -> bool:
        return not self.generators()


def seam_end(g: DoubleComputad, seam: Seam, direction: Direction) -> str:
    if not seam.chain:
        return seam.start
    b = g.cells2[seam.chain[-1]]
    return (b.bottom if direction is Direction.H else b.right).cells[0]


def grid_boundary(grid: DecoratedGrid, g: DoubleComputad) -> Boundary:
    top = Path(Direction.H, tuple(s.start for s in grid.hseams[0]), grid.anchor)
    left = Path(Direction.V, tuple(row[0].start for row in grid.vseams), grid.anchor)
    bottom = Path(Direction.H, tuple(seam_end(g, s, Direction.H) for s in grid.hseams[-1]), _end(g, left))
    right = Path(Direction.V, tuple(seam_end(g, row[-1], Direction.V) for row in grid.vseams), _end(g, top))
    return Boundary(top, right, left, bottom)


def grid_hid(p: Path) -> DecoratedGrid:
    m = len(p)
    return DecoratedGrid(m, 0, tuple(() for _ in range(m)), tuple(() for _ in range(m + 1)),
                         tuple((Seam(v),) for v in p.cells), p.anchor)


def grid_vid(p: Path) -> DecoratedGrid:
    return DecoratedGrid(0, len(p), (), (tuple(Seam(f) for f in p.cells),), (), p.anchor)


def grid_generator(g: DoubleComputad, name: str) -> DecoratedGrid:
    b = g.cells2[name]
    shape = b.shape()
    if shape.is_square:
        return DecoratedGrid(1, 1, ((name,),), ((Seam(b.top.cells[0]),), (Seam(b.bottom.cells[0]),)),
                             ((Seam(b.left.cells[0]), Seam(b.right.cells[0])),), b.top.anchor)
    if shape.is_horizontal_bigon:
        return DecoratedGrid(0, 1, (), ((Seam(b.top.cells[0], (name,)),),), (), b.top.anchor)
    if shape.is_vertical_bigon:
        return DecoratedGrid(1, 0, ((),), ((), ()), ((Seam(b.left.cells[0], (name,)),),), b.left.anchor)
    raise UnsupportedGeneratorShape(f"{name} has shape {shape}; only squares and bigons compose")


def grid_hcomp(a: DecoratedGrid, b: DecoratedGrid, g: DoubleComputad, node: str = "hcomp") -> DecoratedGrid:
    ra, lb = grid_boundary(a, g).right, grid_boundary(b, g).left
    if ra != lb:
        raise InterfaceMismatch(node, f"right side {ra} vs left side {lb}")
    m = a.rows
    squares = tuple(a.squares[i] + b.squares[i] for i in range(m))
    hseams = tuple(a.hseams[k] + b.hseams[k] for k in range(m + 1))
    vseams = tuple(
        a.vseams[i][:-1] + (Seam(a.vseams[i][-1].start, a.vseams[i][-1].chain + b.vseams[i][0].chain),) + b.vseams[i][1:]
        for i in range(m)
    )
    return DecoratedGrid(m, a.cols + b.cols, squares, hseams, vseams, a.anchor)


def grid_vcomp(a: DecoratedGrid, b: DecoratedGrid, g: DoubleComputad, node: str = "vcomp") -> DecoratedGrid:
    ba, tb = grid_boundary(a, g).bottom, grid_boundary(b, g).top
    if ba != tb:
        raise InterfaceMismatch(node, f"bottom {ba} vs top {tb}")
    merged = tuple(Seam(x.start, x.chain + y.chain) for x, y in zip(a.hseams[-1], b.hseams[0]))
    return DecoratedGrid(a.rows + b.rows, a.cols, a.squares + b.squares,
                         a.hseams[:-1] + (merged,) + b.hseams[1:], a.vseams + b.vseams, a.anchor)


def eval_term_double(t: Term, g: DoubleComputad) -> DecoratedGrid:
    """Evaluate a pasting term over a double graph with bigons to its decorated grid."""
    if isinstance(t, Gen):
        if t.name not in g.cells2:
            raise DanglingId(t.name)
        return grid_generator(g, t.name)
    if isinstance(t, HId):
        return grid_hid(t.path)
    if isinstance(t, VId):
        return grid_vid(t.path)
    if isinstance(t, HComp):
        return grid_hcomp(eval_term_double(t.left, g), eval_term_double(t.right, g), g, format_term(t))
    return grid_vcomp(eval_term_double(t.top, g), eval_term_double(t.bottom, g), g, format_term(t))


def format_grid(grid: DecoratedGrid, g: DoubleComputad) -> str:
    """Deterministic text table: boundary, squares row by row, then non-empty seam chains."""
    b = grid_boundary(grid, g)
    lines = [
        f"grid {grid.rows}x{grid.cols} @{grid.anchor}",
        f"  top    {_fmt_path(b.top)}",
        f"  left   {_fmt_path(b.left)}",
        f"  right  {_fmt_path(b.right)}",
        f"  bottom {_fmt_path(b.bottom)}",
    ]
    for i, row in enumerate(grid.squares):
        lines.append(f"  row {i}: " + " | ".join(row))
    for k, level in enumerate(grid.hseams):
        for j, seam in enumerate(level):
            if seam.chain:
                lines.append(f"  hseam level {k} col {j}: {seam.start} ; " + " ; ".join(seam.chain))
    for i, row in enumerate(grid.vseams):
        for k, seam in enumerate(row):
            if seam.chain:
                lines.append(f"  vseam row {i} level {k}: {seam.start} ; " + " ; ".join(seam.chain))
    return "\n".join(lines) + "\n"


# -------------------------------------------------------- layered diagrams


@dataclass(frozen=True)
class Layer:
    left: Path
    gen: str
    right: Path


@dataclass(frozen=True)
class LayeredDiagram:
    source: Path
    target: Path
    layers: tuple[Layer, ...]


Step = tuple[int, str]  # (whisker position, generator)


def _apply_step(x: TwoComputad, string: tuple[str, ...], start: str, step: Step) -> tuple[str, ...]:
    pos, gen = step
    s, t = x.cells2[gen]
    if string[pos:pos + len(s)] != s.cells:
        raise InterfaceMismatch(gen, f"{gen} does not match the string at position {pos}")
    here = start if pos == 0 else x.cells1[string[pos - 1]][1]
    if here != s.anchor:
        raise InterfaceMismatch(gen, f"{gen} is anchored at {s.anchor}, not {here}")
    return string[:pos] + t.cells + string[pos + len(s):]


def _swaps(x: TwoComputad, first: Step, second: Step) -> list[tuple[Step, Step]]:
    """All ways to perform `second` before `first` (the interchange law)."""
    (p1, g1), (p2, g2) = first, second
    s1, t1 = len(x.cells2[g1][0]), len(x.cells2[g1][1])
    s2, t2 = len(x.cells2[g2][0]), len(x.cells2[g2][1])
    out = []
    if p2 + s2 <= p1:
        out.append(((p2, g2), (p1 - s2 + t2, g1)))
    if p2 >= p1 + t1:
        cand = ((p2 - t1 + s1, g2), (p1, g1))
        if cand not in out:
            out.append(cand)
    return out


def _bubble(x: TwoComputad, seq: tuple[Step, ...], k: int) -> set[tuple[Step, ...]]:
    states = {seq}
    for i in range(k, 0, -1):
        nxt = set()
        for s in states:
            for a, b in _swaps(x, s[i - 1], s[i]):
                nxt.add(s[:i - 1] + (a, b) + s[i + 1:])
        states = nxt
        if not states:
            break
    return states


def canonical_steps(x: TwoComputad, seq: tuple[Step, ...]) -> tuple[Step, ...]:
    """Lexicographically least reordering under interchange: at each layer take the
    leftmost generator that can be brought forward."""
    out: list[Step] = []
    cands = {tuple(seq)}
    while True:
        some = next(iter(cands))
        if not some:
            return tuple(out)
        best: Step | None = None
        best_rest: set[tuple[Step, ...]] = set()
        for s in cands:
            for k in range(len(s)):
                for moved in _bubble(x, s, k):
                    key = moved[0]
                    if best is None or key < best:
                        best, best_rest = key, {moved[1:]}
                    elif key == best:
                        best_rest.add(moved[1:])
        assert best is not None
        out.append(best)
        cands = best_rest


def interchange_class(x: TwoComputad, seq: tuple[Step, ...], limit: int = 100000) -> set[tuple[Step, ...]]:
    """Every reordering reachable by adjacent interchanges; a brute-force check of canonical_steps."""
    seen = {tuple(seq)}
    todo = deque(seen)
    while todo:
        s = todo.popleft()
        for i in range(len(s) - 1):
            for a, b in _swaps(x, s[i], s[i + 1]):
                t = s[:i] + (a, b) + s[i + 2:]
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
                    if len(seen) > limit:
                        raise EngineError("interchange class too large")
    return seen


def _eval_steps(t: Term, x: TwoComputad) -> tuple[Path, Path, tuple[Step, ...]]:
    if isinstance(t, Gen):
        if t.name not in x.cells2:
            raise DanglingId(t.name)
        s, tg = x.cells2[t.name]
        return s, tg, ((0, t.name),)
    if isinstance(t, VId):
        return t.path, t.path, ()
    if isinstance(t, HId):
        if t.path.cells:
            raise InterfaceMismatch(format_term(t), "a 2-computad has no vertical 1-cells")
        p = Path(Direction.H, (), t.path.anchor)
        return p, p, ()
    if isinstance(t, HComp):
        s1, t1, q1 = _eval_steps(t.left, x)
        s2, t2, q2 = _eval_steps(t.right, x)
        if _end(x, s1) != s2.anchor:
            raise InterfaceMismatch(format_term(t), f"{_end(x, s1)} vs {s2.anchor}")
        shifted = tuple((p + len(t1), g) for p, g in q2)
        return _cat(x, s1, s2), _cat(x, t1, t2), q1 + shifted
    s1, t1, q1 = _eval_steps(t.top, x)
    s2, t2, q2 = _eval_steps(t.bottom, x)
    if t1 != s2:
        raise InterfaceMismatch(format_term(t), f"target {t1} vs source {s2}")
    return s1, t2, q1 + q2


def steps_to_diagram(x: TwoComputad, source: Path, target: Path, seq: tuple[Step, ...]) -> LayeredDiagram:
    layers, string = [], source.cells
    for pos, gen in seq:
        s, _ = x.cells2[gen]
        left = Path(Direction.H, string[:pos], source.anchor)
        right_start = s.anchor if not s.cells else x.cells1[s.cells[-1]][1]
        right = Path(Direction.H, string[pos + len(s):], right_start)
        layers.append(Layer(left, gen, right))
        string = _apply_step(x, string, source.anchor, (pos, gen))
    if string != target.cells:
        raise InterfaceMismatch("diagram", f"layers end at {string}, not {target.cells}")
    return LayeredDiagram(source, target, tuple(layers))


def diagram_steps(d: LayeredDiagram) -> tuple[Step, ...]:
    return tuple((len(layer.left), layer.gen) for layer in d.layers)


def eval_term2(t: Term, x: TwoComputad) -> LayeredDiagram:
    """Evaluate a pasting term over a 2-computad to its canonical layered diagram."""
    source, target, seq = _eval_steps(t, x)
    return steps_to_diagram(x, source, target, canonical_steps(x, seq))


def diagram_hcomp(x: TwoComputad, a: LayeredDiagram, b: LayeredDiagram) -> LayeredDiagram:
    if _end(x, a.source) != b.source.anchor:
        raise InterfaceMismatch("hcomp", "diagrams do not meet at a common object")
    seq = diagram_steps(a) + tuple((p + len(a.target), g) for p, g in diagram_steps(b))
    return steps_to_diagram(x, _cat(x, a.source, b.source), _cat(x, a.target, b.target), canonical_steps(x, seq))


def diagram_vcomp(x: TwoComputad, a: LayeredDiagram, b: LayeredDiagram) -> LayeredDiagram:
    if a.target != b.source:
        raise InterfaceMismatch("vcomp", f"target {a.target} vs source {b.source}")
    return steps_to_diagram(x, a.source, b.target, canonical_steps(x, diagram_steps(a) + diagram_steps(b)))


def identity_diagram(p: Path) -> LayeredDiagram:
    return LayeredDiagram(p, p, ())


def format_diagram(d: LayeredDiagram) -> str:
    lines = [f"diagram {_fmt_path(d.source)} => {_fmt_path(d.target)}"]
    for k, layer in enumerate(d.layers):
        lines.append(f"  layer {k}: [{' '.join(layer.left.cells)}] {layer.gen} [{' '.join(layer.right.cells)}]")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- oracle


def _try_boundary(t: Term, c: Computad, cache: dict) -> Boundary | None:
    """Memoized typing; None for ill-typed terms."""
    if t in cache:
        return cache[t]
    b: Boundary | None
    if isinstance(t, HComp):
        x, y = _try_boundary(t.left, c, cache), _try_boundary(t.right, c, cache)
        b = None
        if x is not None and y is not None and x.right == y.left:
            b = Boundary(_cat(c, x.top, y.top), y.right, x.left, _cat(c, x.bottom, y.bottom))
    elif isinstance(t, VComp):
        x, y = _try_boundary(t.top, c, cache), _try_boundary(t.bottom, c, cache)
        b = None
        if x is not None and y is not None and x.bottom == y.top:
            b = Boundary(x.top, _cat(c, x.right, y.right), _cat(c, x.left, y.left), y.bottom)
    else:
        try:
            b = term_boundary(t, c)
        except EngineError:
            b = None
    cache[t] = b
    return b


class RewriteOracle:
    """Bidirectional breadth-first search under single-law rewrites.

    The laws are associativity, unit and interchange for both compositions, the
    identity interchange laws, and compatibility of the two point identities.
    Unit insertion makes closures infinite, so terms larger than `max_size`
    nodes are pruned; `max_size` defaults to the larger input plus `slack`.
    Completed closures are cached, so repeated queries in one component are cheap.
    """

    def __init__(self, computad: Computad, budget: int = 10_000, slack: int = 4, max_size: int | None = None):
        self.c = computad
        self.budget = budget
        self.slack = slack
        self.max_size = max_size
        self._bounds: dict = {}
        self._component: dict[tuple[int, Term], int] = {}
        self._next_component = 0
        self._overflow: set[tuple[int, Term]] = set()

    def boundary(self, t: Term) -> Boundary | None:
        return _try_boundary(t, self.c, self._bounds)

    def _ok(self, t: Term, cap: int) -> bool:
        return size(t) <= cap and self.boundary(t) is not None

    def _local(self, t: Term, cap: int) -> Iterator[Term]:
        c = self.c
        b = self.boundary(t)
        assert b is not None
        if isinstance(t, HComp):
            x, y = t.left, t.right
            if isinstance(x, HComp):
                yield HComp(x.left, HComp(x.right, y))
            if isinstance(y, HComp):
                yield HComp(HComp(x, y.left), y.right)
            if isinstance(x, HId):
                yield y
            if isinstance(y, HId):
                yield x
            if isinstance(x, VId) and isinstance(y, VId):
                yield VId(_cat(c, x.path, y.path))
            if isinstance(x, VComp) and isinstance(y, VComp):
                yield VComp(HComp(x.top, y.top), HComp(x.bottom, y.bottom))
        if isinstance(t, VComp):
            x, y = t.top, t.bottom
            if isinstance(x, VComp):
                yield VComp(x.top, VComp(x.bottom, y))
            if isinstance(y, VComp):
                yield VComp(VComp(x, y.top), y.bottom)
            if isinstance(x, VId):
                yield y
            if isinstance(y, VId):
                yield x
            if isinstance(x, HId) and isinstance(y, HId):
                yield HId(_cat(c, x.path, y.path))
            if isinstance(x, HComp) and isinstance(y, HComp):
                yield HComp(VComp(x.left, y.left), VComp(x.right, y.right))
        if isinstance(t, VId):
            p = t.path
            for k in range(len(p) + 1):
                if size(t) + 2 <= cap:
                    head = Path(p.direction, p.cells[:k], p.anchor)
                    tail = Path(p.direction, p.cells[k:], _end(c, head))
                    yield HComp(VId(head), VId(tail))
            if not p.cells:
                yield HId(Path(Direction.V, (), p.anchor))
        if isinstance(t, HId):
            p = t.path
            for k in range(len(p) + 1):
                if size(t) + 2 <= cap:
                    head = Path(p.direction, p.cells[:k], p.anchor)
                    tail = Path(p.direction, p.cells[k:], _end(c, head))
                    yield VComp(HId(head), HId(tail))
            if not p.cells:
                yield VId(Path(Direction.H, (), p.anchor))
        if size(t) + 2 <= cap:
            yield HComp(HId(b.left), t)
            yield HComp(t, HId(b.right))
            yield VComp(VId(b.top), t)
            yield VComp(t, VId(b.bottom))

    def neighbours(self, t: Term, cap: int, memo: dict | None = None) -> frozenset[Term]:
        """Every term one rewrite away from t (at any position) with at most cap nodes."""
        if memo is not None and (t, cap) in memo:
            return memo[(t, cap)]
        out: set[Term] = set()
        room = cap - size(t)
        for n in self._local(t, cap):
            if size(n) <= cap and self.boundary(n) is not None:
                out.add(n)
        # Rewriting inside a well-typed context preserves the boundary, so no recheck.
        if isinstance(t, HComp):
            for n in self.neighbours(t.left, size(t.left) + room, memo):
                out.add(HComp(n, t.right))
            for n in self.neighbours(t.right, size(t.right) + room, memo):
                out.add(HComp(t.left, n))
        elif isinstance(t, VComp):
            for n in self.neighbours(t.top, size(t.top) + room, memo):
                out.add(VComp(n, t.bottom))
            for n in self.neighbours(t.bottom, size(t.bottom) + room, memo):
                out.add(VComp(t.top, n))
        result = frozenset(out)
        if memo is not None:
            memo[(t, cap)] = result
        return result

    def closure(self, t: Term, cap: int) -> tuple[set[Term], bool]:
        """States reachable from t within the budget; the flag says whether the search completed."""
        seen = {t}
        todo = deque([t])
        memo: dict = {}
        while todo:
            if len(seen) > self.budget:
                return seen, False
            here = todo.popleft()
            for n in self.neighbours(here, cap, memo):
                if n not in seen:
                    seen.add(n)
                    todo.append(n)
            memo.pop((here, cap), None)
        return seen, True

    def equal(self, t1: Term, t2: Term) -> str:
        """'equal', 'distinct' or 'exhausted'."""
        b1, b2 = self.boundary(t1), self.boundary(t2)
        if b1 is None or b2 is None:
            bad = t1 if b1 is None else t2
            term_boundary(bad, self.c)  # raises InterfaceMismatch
        if t1 == t2:
            return "equal"
        if b1 != b2:
            return "distinct"
        cap = self.max_size if self.max_size is not None else max(size(t1), size(t2)) + self.slack
        k1, k2 = self._component.get((cap, t1)), self._component.get((cap, t2))
        if k1 is not None or k2 is not None:
            return "equal" if k1 == k2 else "distinct"
        # Close the larger term first: padding a small term up to the cap is what
        # blows the budget, and a completed closure answers every later query
        # in its component.
        order = (t2, t1) if size(t2) > size(t1) else (t1, t2)
        for here, there in (order, order[::-1]):
            if (cap, here) in self._overflow:
                continue
            states, complete = self.closure(here, cap)
            if there in states:
                if complete:
                    self._remember(states, cap)
                return "equal"
            if complete:
                self._remember(states, cap)
                return "distinct"
            self._overflow.add((cap, here))
        return "exhausted"

    def _remember(self, states: set[Term], cap: int) -> None:
        k = self._next_component
        self._next_component += 1
        for s in states:
            self._component[(cap, s)] = k


def oracle_equal(t1: Term, t2: Term, computad: Computad, budget: int = 10_000) -> str:
    return RewriteOracle(computad, budget).equal(t1, t2)


# ------------------------------------------------------------ enumeration


def identity_leaves(c: Computad) -> list[Term]:
    """Identities on single 1-cells and on objects, the leaves needed for whiskering."""
    leaves: list[Term] = []
    for f in sorted(c.table1(Direction.H)):
        leaves.append(VId(Path(Direction.H, (f,), c.table1(Direction.H)[f][0])))
    if isinstance(c, DoubleComputad):
        for v in sorted(c.vcells):
            leaves.append(HId(Path(Direction.V, (v,), c.vcells[v][0])))
    return leaves


def enumerate_terms(c: Computad, max_generators: int, extra_leaves: Iterable[Term] = (),
                    max_extra: int = 0) -> list[Term]:
    """All well-typed binary terms whose leaves are generators (at most `max_generators`)
    plus at most `max_extra` leaves drawn from `extra_leaves`."""
    extra = list(extra_leaves)
    by_count: dict[tuple[int, int], list[Term]] = {}
    by_count[(1, 0)] = [Gen(g) for g in sorted(c.cells2)]
    by_count[(0, 1)] = extra
    cache: dict = {}
    sizes = [(g, e) for n in range(1, max_generators + max_extra + 1)
             for g in range(0, max_generators + 1) for e in range(0, max_extra + 1) if g + e == n]
    for g, e in sizes:
        if g + e <= 1:
            continue
        bucket: list[Term] = []
        seen: set[Term] = set()
        for g1, e1 in product(range(g + 1), range(e + 1)):
            g2, e2 = g - g1, e - e1
            if g1 + e1 == 0 or g2 + e2 == 0:
                continue
            lefts, rights = by_count.get((g1, e1), []), by_count.get((g2, e2), [])
            if not lefts or not rights:
                continue
            idx_left: dict[Path, list[Term]] = {}
            idx_top: dict[Path, list[Term]] = {}
            for r in rights:
                b = _try_boundary(r, c, cache)
                idx_left.setdefault(b.left, []).append(r)
                idx_top.setdefault(b.top, []).append(r)
            for lt in lefts:
                b = _try_boundary(lt, c, cache)
                for r in idx_left.get(b.right, ()):
                    t = HComp(lt, r)
                    if t not in seen:
                        seen.add(t)
                        bucket.append(t)
                for r in idx_top.get(b.bottom, ()):
                    t = VComp(lt, r)
                    if t not in seen:
                        seen.add(t)
                        bucket.append(t)
        by_count[(g, e)] = bucket
    out: list[Term] = []
    for key in sorted(by_count):
        if key[0] >= 1:
            out.extend(by_count[key])
    return out


# ------------------------------------------------------------------ fuzzing


def random_double_graph(rng: random.Random, rows: int = 2, cols: int = 3) -> DoubleComputad:
    """A random double graph that contains at least one rows x cols grid of squares.

    Start from a grid-shaped template, glue a few objects and 1-cells together,
    then add some extra squares and bigons between existing 1-cells.
    """
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    objs = [f"o{i}{j}" for i in range(rows + 1) for j in range(cols + 1)]
    for _ in range(rng.randint(0, 2)):
        a, b = rng.sample(objs, 2)
        parent[find(b)] = find(a)
    hcells = {f"h{i}{j}": (find(f"o{i}{j}"), find(f"o{i}{j + 1}")) for i in range(rows + 1) for j in range(cols)}
    vcells = {f"v{i}{j}": (find(f"o{i}{j}"), find(f"o{i + 1}{j}")) for i in range(rows) for j in range(cols + 1)}

    def glue(cells: dict[str, tuple[str, str]]) -> dict[str, str]:
        alias = {c: c for c in cells}
        names = sorted(cells)
        for _ in range(rng.randint(0, 2)):
            a, b = rng.sample(names, 2)
            if cells[a] == cells[b] and alias[b] == b:
                alias[b] = alias[a]
        return alias

    ha, va = glue(hcells), glue(vcells)
    hcells = {c: e for c, e in hcells.items() if ha[c] == c}
    vcells = {c: e for c, e in vcells.items() if va[c] == c}
    objects = tuple(sorted({find(o) for o in objs}))
    base = DoubleComputad(objects, hcells, vcells, {})
    cells2: dict[str, Boundary] = {}

    def square(t: str, r: str, lf: str, b: str) -> Boundary:
        return Boundary(base.path(Direction.H, [t]), base.path(Direction.V, [r]),
                        base.path(Direction.V, [lf]), base.path(Direction.H, [b]))

    for i in range(rows):
        for j in range(cols):
            cells2[f"s{i}{j}"] = square(ha[f"h{i}{j}"], va[f"v{i}{j + 1}"], va[f"v{i}{j}"], ha[f"h{i + 1}{j}"])
    hnames, vnames = sorted(hcells), sorted(vcells)
    for k in range(rng.randint(0, 2)):
        t = rng.choice(hnames)
        lefts = [v for v in vnames if vcells[v][0] == hcells[t][0]]
        if not lefts:
            continue
        lf = rng.choice(lefts)
        rights = [v for v in vnames if vcells[v][0] == hcells[t][1]]
        bottoms = [h for h in hnames if hcells[h][0] == vcells[lf][1]]
        pairs = [(r, b) for r in rights for b in bottoms if vcells[r][1] == hcells[b][1]]
        if pairs:
            r, b = rng.choice(pairs)
            cells2[f"x{k}"] = square(t, r, lf, b)
    for k in range(rng.randint(0, 2)):
        f = rng.choice(hnames)
        g = rng.choice([h for h in hnames if hcells[h] == hcells[f]])
        a, b = hcells[f]
        cells2[f"beta{k}"] = Boundary(base.path(Direction.H, [f]), Path(Direction.V, (), b),
                                      Path(Direction.V, (), a), base.path(Direction.H, [g]))
    for k in range(rng.randint(0, 2)):
        v = rng.choice(vnames)
        w = rng.choice([x for x in vnames if vcells[x] == vcells[v]])
        a, b = vcells[v]
        cells2[f"delta{k}"] = Boundary(Path(Direction.H, (), a), base.path(Direction.V, [w]),
                                       base.path(Direction.V, [v]), Path(Direction.H, (), b))
    return DoubleComputad(objects, hcells, vcells, cells2)


def composable_grids(g: DoubleComputad, rows: int, cols: int, limit: int | None = None) -> list[tuple[tuple[str, ...], ...]]:
    """Every rows x cols array of generating squares whose shared edges agree."""
    squares = sorted(n for n, b in g.cells2.items() if b.shape().is_square)
    out: list[tuple[tuple[str, ...], ...]] = []
    cells: list[list[str]] = [[""] * cols for _ in range(rows)]

    def fits(i: int, j: int, s: str) -> bool:
        b = g.cells2[s]
        if j > 0 and g.cells2[cells[i][j - 1]].right != b.left:
            return False
        if i > 0 and g.cells2[cells[i - 1][j]].bottom != b.top:
            return False
        return True

    def go(k: int) -> None:
        if limit is not None and len(out) >= limit:
            return
        if k == rows * cols:
            out.append(tuple(tuple(r) for r in cells))
            return
        i, j = divmod(k, cols)
        for s in squares:
            if fits(i, j, s):
                cells[i][j] = s
                go(k + 1)

    go(0)
    return out


def composition_orders(block: tuple[tuple[Term, ...], ...]) -> list[Term]:
    """Every binary composite of a rectangular array, cutting along any full row or column seam."""
    memo: dict[tuple[int, int, int, int], list[Term]] = {}

    def go(r0: int, r1: int, c0: int, c1: int) -> list[Term]:
        key = (r0, r1, c0, c1)
        if key in memo:
            return memo[key]
        if r1 - r0 == 1 and c1 - c0 == 1:
            res = [block[r0][c0]]
        else:
            res = []
            for k in range(c0 + 1, c1):
                res += [HComp(a, b) for a in go(r0, r1, c0, k) for b in go(r0, r1, k, c1)]
            for k in range(r0 + 1, r1):
                res += [VComp(a, b) for a in go(r0, k, c0, c1) for b in go(k, r1, c0, c1)]
        memo[key] = res
        return res

    return go(0, len(block), 0, len(block[0]))


def insert_identity(t: Term, c: Computad, index: int, variant: int) -> Term:
    """Replace the index-th subterm (preorder) x by a unit composite around x."""
    counter = [index]

    def go(x: Term) -> Term:
        if counter[0] == 0:
            counter[0] = -1
            b = term_boundary(x, c)
            return (HComp(HId(b.left), x), HComp(x, HId(b.right)),
                    VComp(VId(b.top), x), VComp(x, VId(b.bottom)))[variant]
        counter[0] -= 1
        if isinstance(x, HComp):
            left = go(x.left)
            return HComp(left, go(x.right)) if counter[0] >= 0 else HComp(left, x.right)
        if isinstance(x, VComp):
            top = go(x.top)
            return VComp(top, go(x.bottom)) if counter[0] >= 0 else VComp(top, x.bottom)
        return x

    return go(t)


@dataclass
class FuzzResult:
    graphs: int = 0
    grids: int = 0
    terms: int = 0
    failures: list[str] = field(default_factory=list)


def fuzz_grid_coherence(seed: int, iters: int, shapes: Iterable[tuple[int, int]] = ((2, 2), (2, 3)),
                        max_insertions: int = 2, samples: int = 16, grid_limit: int = 200) -> FuzzResult:
    """Every binary composition order of every composable generator grid must
    normalize to the same decorated grid, also after identity insertions.

    Single identity insertions are exhaustive (every subterm, all four unit
    laws); for two or more insertions each order gets `samples` seeded variants.
    """
    rng = random.Random(seed)
    shapes = list(shapes)
    rows = max(m for m, _ in shapes)
    cols = max(n for _, n in shapes)
    res = FuzzResult()
    for it in range(iters):
        g = random_double_graph(rng, rows, cols)
        res.graphs += 1
        for m, n in shapes:
            for arr in composable_grids(g, m, n, grid_limit):
                res.grids += 1
                block = tuple(tuple(Gen(s) for s in row) for row in arr)
                expected = None
                for t in composition_orders(block):
                    variants = [t]
                    if max_insertions >= 1:
                        variants += [insert_identity(t, g, i, v) for i in range(size(t)) for v in range(4)]
                    for k in range(2, max_insertions + 1):
                        for _ in range(samples):
                            u = t
                            for _ in range(k):
                                u = insert_identity(u, g, rng.randrange(size(u)), rng.randrange(4))
                            variants.append(u)
                    for u in variants:
                        res.terms += 1
                        grid = eval_term_double(u, g)
                        if expected is None:
                            expected = grid
                            if (grid.rows, grid.cols) != (m, n) or any(s.chain for lv in grid.hseams for s in lv):
                                res.failures.append(f"iteration {it}: grid {arr} has the wrong shape")
                        elif grid != expected:
                            res.failures.append(f"iteration {it}: {format_term(u)} differs from the first order")
    return res
