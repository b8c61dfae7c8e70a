"""Operation signatures: composable inputs and expected result boundaries.

Each operation has a domain (every composable argument tuple, enumerated
from the carriers) and a boundary rule giving the result's sort and
boundary.  The typing check for a model walks every domain and compares
against the tables; that is where totality and source/target laws live.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from .base import FiniteModel, Undefined
from .report import Report

Args = tuple[str, ...]


@dataclass(frozen=True)
class Sig:
    name: str
    result: str
    domain: Callable[[FiniteModel], Iterable[Args]]
    boundary: Callable[[FiniteModel, Args], tuple[str, ...]]


# -------------------------------------------------------------- domains


def _objs(m: FiniteModel) -> Iterator[Args]:
    for a in m.of("obj"):
        yield (a,)


def _cells(sort: str) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        for x in m.of(sort):
            yield (x,)
    return dom


def _paths(d: str, n: int) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        def extend(prefix: Args) -> Iterator[Args]:
            if len(prefix) == n:
                yield prefix
                return
            for c in m.cells_from(d, m.tgt(prefix[-1])):
                yield from extend(prefix + (c,))
        for c in m.of(d):
            yield from extend((c,))
    return dom


def sq_h_pairs(m: FiniteModel) -> Iterator[Args]:
    for a in m.of("sq"):
        for b in m.sq_with("left", m.bound(a)[1]):
            yield a, b


def sq_v_pairs(m: FiniteModel) -> Iterator[Args]:
    for a in m.of("sq"):
        for b in m.sq_with("top", m.bound(a)[3]):
            yield a, b


def _bigon_comp2(sort: str) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        for a in m.of(sort):
            for b in m.bigons_from(sort, m.bound(a)[1]):
                yield a, b
    return dom


def _bigon_comp1(sort: str) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        for a in m.of(sort):
            end = m.tgt(m.bound(a)[0])
            for b in m.of(sort):
                if m.src(m.bound(b)[0]) == end:
                    yield a, b
    return dom


def _act(sort: str, side: int, bigon_first: bool, end: int) -> Callable[[FiniteModel], Iterator[Args]]:
    # bigons whose `end` (0 source, 1 target) equals the square's side
    def dom(m: FiniteModel) -> Iterator[Args]:
        for z in m.of("sq"):
            x = m.bound(z)[side]
            bigons = m.bigons_to(sort, x) if end == 1 else m.bigons_from(sort, x)
            for b in bigons:
                yield (b, z) if bigon_first else (z, b)
    return dom


def _cap(pair: Callable[[FiniteModel], Iterator[Args]], on_first: bool, sorts: tuple[str, str],
         sides: tuple[int, int]) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        for z, x in pair(m):
            b = m.bound(z if on_first else x)
            for p in m.monogons(sorts[0], b[sides[0]]):
                for q in m.monogons(sorts[1], b[sides[1]]):
                    yield z, x, p, q
    return dom


def _collapse(sorts: tuple[str, str, str], sides: tuple[int, int, int]) -> Callable[[FiniteModel], Iterator[Args]]:
    def dom(m: FiniteModel) -> Iterator[Args]:
        for z in m.of("sq"):
            b = m.bound(z)
            pools = [m.monogons(s, b[i]) for s, i in zip(sorts, sides)]
            for combo in product(*pools):
                yield (z,) + combo
    return dom


def _quad(m: FiniteModel) -> Iterator[Args]:
    for a in m.of("obj"):
        pools = []
        for sort in ("mN", "mE", "mW", "mS"):
            d = "h" if sort in ("mN", "mS") else "v"
            pools.append([x for c in m.loops(d, a) for x in m.monogons(sort, c)])
        yield from product(*pools)


# ------------------------------------------------------------- boundaries


def _b(m: FiniteModel, x: str) -> tuple[str, ...]:
    return m.bound(x)


def _sq_hcomp(m, a):
    e, (z, x) = m.e, a
    bz, bx = _b(m, z), _b(m, x)
    return (e.hcomp1(bz[0], bx[0]), bx[1], bz[2], e.hcomp1(bz[3], bx[3]))


def _sq_vcomp(m, a):
    e, (z, x) = m.e, a
    bz, bx = _b(m, z), _b(m, x)
    return (bz[0], e.vcomp1(bz[1], bx[1]), e.vcomp1(bz[2], bx[2]), bx[3])


def _sq_hid(m, a):
    (u,) = a
    return (m.e.hid1(m.src(u)), u, u, m.e.hid1(m.tgt(u)))


def _sq_vid(m, a):
    (f,) = a
    return (f, m.e.vid1(m.tgt(f)), m.e.vid1(m.src(f)), f)


def _h_assoc_cells(m, a):
    e, (f, g, h) = m.e, a
    return e.hcomp1(f, e.hcomp1(g, h)), e.hcomp1(e.hcomp1(f, g), h), m.src(f), m.tgt(h)


def _v_assoc_cells(m, a):
    e, (u, v, w) = m.e, a
    return e.vcomp1(u, e.vcomp1(v, w)), e.vcomp1(e.vcomp1(u, v), w), m.src(u), m.tgt(w)


def _h_square(m, top, bottom, s, t):
    return (top, m.e.vid1(t), m.e.vid1(s), bottom)


def _v_square(m, left, right, s, t):
    return (m.e.hid1(s), right, left, m.e.hid1(t))


def _lunit_h(m, f):
    return m.e.hcomp1(m.e.hid1(m.src(f)), f)


def _runit_h(m, f):
    return m.e.hcomp1(f, m.e.hid1(m.tgt(f)))


def _lunit_v(m, u):
    return m.e.vcomp1(m.e.vid1(m.src(u)), u)


def _runit_v(m, u):
    return m.e.vcomp1(u, m.e.vid1(m.tgt(u)))


def one_cell_sigs() -> list[Sig]:
    return [
        Sig("hcomp1", "h", _paths("h", 2), lambda m, a: (m.src(a[0]), m.tgt(a[1]))),
        Sig("hid1", "h", _objs, lambda m, a: (a[0], a[0])),
        Sig("vcomp1", "v", _paths("v", 2), lambda m, a: (m.src(a[0]), m.tgt(a[1]))),
        Sig("vid1", "v", _objs, lambda m, a: (a[0], a[0])),
    ]


def square_sigs() -> list[Sig]:
    return [
        Sig("sq_hcomp", "sq", sq_h_pairs, _sq_hcomp),
        Sig("sq_vcomp", "sq", sq_v_pairs, _sq_vcomp),
        Sig("sq_hid", "sq", _cells("v"), _sq_hid),
        Sig("sq_vid", "sq", _cells("h"), _sq_vid),
    ]


def coherence_square_sigs() -> list[Sig]:
    """Associator and unitor squares with their inverses, both directions."""
    h3, v3 = _paths("h", 3), _paths("v", 3)

    def ha(m, a):
        top, bot, s, t = _h_assoc_cells(m, a)
        return _h_square(m, top, bot, s, t)

    def hai(m, a):
        top, bot, s, t = _h_assoc_cells(m, a)
        return _h_square(m, bot, top, s, t)

    def va(m, a):
        left, right, s, t = _v_assoc_cells(m, a)
        return _v_square(m, left, right, s, t)

    def vai(m, a):
        left, right, s, t = _v_assoc_cells(m, a)
        return _v_square(m, right, left, s, t)

    def hunit(which, inverse):
        def rule(m, a):
            f = a[0]
            x = which(m, f)
            top, bot = (f, x) if inverse else (x, f)
            return _h_square(m, top, bot, m.src(f), m.tgt(f))
        return rule

    def vunit(which, inverse):
        def rule(m, a):
            u = a[0]
            x = which(m, u)
            left, right = (u, x) if inverse else (x, u)
            return _v_square(m, left, right, m.src(u), m.tgt(u))
        return rule

    hs, vs = _cells("h"), _cells("v")
    return [
        Sig("h_assoc", "sq", h3, ha), Sig("h_assoc_inv", "sq", h3, hai),
        Sig("h_lunit", "sq", hs, hunit(_lunit_h, False)), Sig("h_lunit_inv", "sq", hs, hunit(_lunit_h, True)),
        Sig("h_runit", "sq", hs, hunit(_runit_h, False)), Sig("h_runit_inv", "sq", hs, hunit(_runit_h, True)),
        Sig("v_assoc", "sq", v3, va), Sig("v_assoc_inv", "sq", v3, vai),
        Sig("v_lunit", "sq", vs, vunit(_lunit_v, False)), Sig("v_lunit_inv", "sq", vs, vunit(_lunit_v, True)),
        Sig("v_runit", "sq", vs, vunit(_runit_v, False)), Sig("v_runit_inv", "sq", vs, vunit(_runit_v, True)),
    ]


def bigon_sigs() -> list[Sig]:
    out: list[Sig] = []
    for p, d, sort in (("hb", "h", "hb"), ("vb", "v", "vb")):
        comp1 = "hcomp1" if d == "h" else "vcomp1"
        assoc = _h_assoc_cells if d == "h" else _v_assoc_cells
        lu, ru = (_lunit_h, _runit_h) if d == "h" else (_lunit_v, _runit_v)

        def c1(m, a, comp1=comp1):
            x, y = m.bound(a[0]), m.bound(a[1])
            return (m.ap(comp1, x[0], y[0]), m.ap(comp1, x[1], y[1]))

        out += [
            Sig(f"{p}_comp2", sort, _bigon_comp2(sort), lambda m, a: (m.bound(a[0])[0], m.bound(a[1])[1])),
            Sig(f"{p}_id", sort, _cells(d), lambda m, a: (a[0], a[0])),
            Sig(f"{p}_comp1", sort, _bigon_comp1(sort), c1),
            Sig(f"{p}_assoc", sort, _paths(d, 3), lambda m, a, f=assoc: f(m, a)[:2]),
            Sig(f"{p}_assoc_inv", sort, _paths(d, 3), lambda m, a, f=assoc: f(m, a)[:2][::-1]),
            Sig(f"{p}_lunit", sort, _cells(d), lambda m, a, f=lu: (f(m, a[0]), a[0])),
            Sig(f"{p}_lunit_inv", sort, _cells(d), lambda m, a, f=lu: (a[0], f(m, a[0]))),
            Sig(f"{p}_runit", sort, _cells(d), lambda m, a, f=ru: (f(m, a[0]), a[0])),
            Sig(f"{p}_runit_inv", sort, _cells(d), lambda m, a, f=ru: (a[0], f(m, a[0]))),
        ]
    return out


def action_sigs() -> list[Sig]:
    def top(m, a):
        b, z = m.bound(a[1]), m.bound(a[0])
        return (z[0], b[1], b[2], b[3])

    def bottom(m, a):
        b, z = m.bound(a[0]), m.bound(a[1])
        return (b[0], b[1], b[2], z[1])

    def left(m, a):
        b, z = m.bound(a[1]), m.bound(a[0])
        return (b[0], b[1], z[0], b[3])

    def right(m, a):
        b, z = m.bound(a[0]), m.bound(a[1])
        return (b[0], z[1], b[2], b[3])

    return [
        Sig("act_top", "sq", _act("hb", 0, True, 1), top),
        Sig("act_bottom", "sq", _act("hb", 3, False, 0), bottom),
        Sig("act_left", "sq", _act("vb", 2, True, 1), left),
        Sig("act_right", "sq", _act("vb", 1, False, 0), right),
    ]


def monogon_sigs() -> list[Sig]:
    def bz(m, a):
        return m.bound(a[0])

    def bx(m, a):
        return m.bound(a[1])

    return [
        Sig("cap_h_left", "sq", _cap(sq_h_pairs, True, ("mS", "mN"), (0, 3)),
            lambda m, a: (bx(m, a)[0], bx(m, a)[1], bz(m, a)[2], bx(m, a)[3])),
        Sig("cap_h_right", "sq", _cap(sq_h_pairs, False, ("mS", "mN"), (0, 3)),
            lambda m, a: (bz(m, a)[0], bx(m, a)[1], bz(m, a)[2], bz(m, a)[3])),
        Sig("cap_v_top", "sq", _cap(sq_v_pairs, True, ("mE", "mW"), (2, 1)),
            lambda m, a: (bz(m, a)[0], bx(m, a)[1], bx(m, a)[2], bx(m, a)[3])),
        Sig("cap_v_bottom", "sq", _cap(sq_v_pairs, False, ("mE", "mW"), (2, 1)),
            lambda m, a: (bz(m, a)[0], bz(m, a)[1], bz(m, a)[2], bx(m, a)[3])),
        Sig("to_N", "mN", _collapse(("mE", "mW", "mN"), (2, 1, 3)), lambda m, a: (bz(m, a)[0],)),
        Sig("to_S", "mS", _collapse(("mE", "mW", "mS"), (2, 1, 0)), lambda m, a: (bz(m, a)[3],)),
        Sig("to_W", "mW", _collapse(("mS", "mN", "mW"), (0, 3, 1)), lambda m, a: (bz(m, a)[2],)),
        Sig("to_E", "mE", _collapse(("mS", "mN", "mE"), (0, 3, 2)), lambda m, a: (bz(m, a)[1],)),
        Sig("quad", "sq", _quad, lambda m, a: tuple(m.bound(x)[0] for x in a)),
        Sig("id_N", "mN", _objs, lambda m, a: (m.e.hid1(a[0]),)),
        Sig("id_S", "mS", _objs, lambda m, a: (m.e.hid1(a[0]),)),
        Sig("id_E", "mE", _objs, lambda m, a: (m.e.vid1(a[0]),)),
        Sig("id_W", "mW", _objs, lambda m, a: (m.e.vid1(a[0]),)),
    ]


def signatures(kind: str) -> list[Sig]:
    base = one_cell_sigs() + square_sigs()
    if kind == "tidier":
        return base + coherence_square_sigs()
    if kind == "double-bicat":
        return base + bigon_sigs() + action_sigs()
    if kind == "monogon":
        return base + coherence_square_sigs() + monogon_sigs()
    raise ValueError(kind)


TYPING_LAW = "source and target laws"


def check_typing(m: FiniteModel, report: Report) -> None:
    """Totality on composable inputs, result sorts and boundaries, no stray rows."""
    sigs = signatures(m.kind)
    names = {s.name for s in sigs}
    for op in sorted(set(m.tables) - names):
        report.add(TYPING_LAW, (op,), "unknown operation table")
    for sig in sigs:
        table = m.tables.get(sig.name, {})
        seen: set[Args] = set()
        for args in sig.domain(m):
            seen.add(args)
            report.checked += 1
            if args not in table:
                report.add(TYPING_LAW, (sig.name,) + args, "missing table entry")
                continue
            r = table[args]
            if m.sort(r) != sig.result:
                report.add(TYPING_LAW, (sig.name,) + args, f"result {r} is not a {sig.result}")
                continue
            try:
                want = sig.boundary(m, args)
            except Undefined:
                continue  # reported against the 1-cell tables
            got = m.bound(r) if sig.result not in ("h", "v") else (m.src(r), m.tgt(r))
            if tuple(got) != tuple(want):
                report.add(TYPING_LAW, (sig.name,) + args, f"boundary of {r} is {got}, expected {tuple(want)}")
        for args in sorted(set(table) - seen):
            report.add(TYPING_LAW, (sig.name,) + args, "entry outside the composable domain")


def fill(m_tables: dict[str, dict[Args, str]], m: FiniteModel, sig: Sig, rule: Callable[[Args], str | None]) -> None:
    """Fill ``sig``'s table over its domain using ``rule`` (None skips)."""
    table = m_tables.setdefault(sig.name, {})
    for args in sig.domain(m):
        r = rule(args)
        if r is not None:
            table[args] = r
