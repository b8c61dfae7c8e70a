"""Strict functors between table models, isomorphism search, equivalences and icons."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from ..computad import DoubleComputad
from .base import CELL_SORTS, FiniteModel, Undefined
from .checker import Checker
from .report import Report


@dataclass
class ModelFunctor:
    """Cell maps between two models of the same kind; one dict covers every sort."""

    source: FiniteModel
    target: FiniteModel
    cells: dict[str, str] = field(default_factory=dict)

    def __call__(self, x: str) -> str:
        return self.cells[x]


def identity_functor(m: FiniteModel) -> ModelFunctor:
    return ModelFunctor(m, m, {x: x for x in _all_cells(m)})


def _all_cells(m: FiniteModel) -> list[str]:
    return list(m.objects) + list(m.hcells) + list(m.vcells) + list(m.cells)


def _image_bound(F: ModelFunctor, x: str) -> tuple[str, ...]:
    s = F.source
    if x in s.hcells:
        return tuple(F(o) for o in s.hcells[x])
    if x in s.vcells:
        return tuple(F(o) for o in s.vcells[x])
    return tuple(F(c) for c in s.bound(x))


def check_functor(F: ModelFunctor) -> Report:
    """Boundary preservation and strict preservation of every operation table."""
    s, t = F.source, F.target
    report = Report("strict functor")
    if s.kind != t.kind:
        report.add("same kind", (s.kind, t.kind), "functors relate models of one kind")
        return report
    for x in _all_cells(s):
        report.checked += 1
        if x not in F.cells:
            report.add("total on cells", (x,), "no image")
            continue
        y = F(x)
        if s.sort(x) != t.sort(y):
            report.add("sort preservation", (x,), f"{s.sort(x)} goes to {t.sort(y)}")
        elif s.sort(x) != "obj":
            want = _image_bound(F, x)
            have = t.hcells.get(y) or t.vcells.get(y) or t.bound(y)
            if tuple(have) != want:
                report.add("boundary preservation", (x,), f"{y} has boundary {tuple(have)}, expected {want}")
    if not report.ok:
        return report
    for op, table in sorted(s.tables.items()):
        for args, r in sorted(table.items()):
            report.checked += 1
            image = tuple(F(a) for a in args)
            try:
                got = t.ap(op, *image)
            except Undefined:
                report.add(f"preserves {op}", args, f"{op}{image} undefined in target")
                continue
            if got != F(r):
                report.add(f"preserves {op}", args, f"{got} != {F(r)}")
    return report


# ------------------------------------------------------------ isomorphism


def _profile(m: FiniteModel) -> dict[str, Counter]:
    """How often each cell occurs in each argument and result slot; an isomorphism invariant."""
    prof: dict[str, Counter] = {x: Counter() for x in _all_cells(m)}
    for op, table in m.tables.items():
        for args, r in table.items():
            for i, a in enumerate(args):
                prof[a][(op, i)] += 1
            prof[r][(op, "=")] += 1
    return prof


def find_isomorphism(a: FiniteModel, b: FiniteModel) -> ModelFunctor | None:
    """Exhaustive backtracking over sort-, boundary- and table-respecting bijections."""
    if a.kind != b.kind or set(a.tables) != set(b.tables):
        return None
    if any(len(a.tables[op]) != len(b.tables[op]) for op in a.tables):
        return None
    sorts = ("obj", "h", "v") + tuple(s for s in CELL_SORTS if a.of(s) or b.of(s))
    if any(len(a.of(s)) != len(b.of(s)) for s in sorts):
        return None
    pa, pb = _profile(a), _profile(b)
    order = [x for s in sorts for x in a.of(s)]
    pos = {x: i for i, x in enumerate(order)}

    def boundary(m: FiniteModel, x: str) -> tuple[str, ...]:
        if x in m.hcells:
            return m.hcells[x]
        if x in m.vcells:
            return m.vcells[x]
        if x in m.objects:
            return ()
        return m.bound(x)

    # each table row is checked once its last cell is assigned
    due: dict[int, list[tuple[str, tuple[str, ...], str]]] = {}
    for op, table in a.tables.items():
        for args, r in table.items():
            due.setdefault(max(pos[c] for c in args + (r,)), []).append((op, args, r))

    f: dict[str, str] = {}
    used: set[str] = set()

    def candidates(x: str):
        want = tuple(f[c] for c in boundary(a, x))
        for y in b.of(a.sort(x)):
            if y not in used and pa[x] == pb[y] and boundary(b, y) == want:
                yield y

    def consistent(i: int) -> bool:
        for op, args, r in due.get(i, ()):
            got = b.tables[op].get(tuple(f[c] for c in args))
            if got != f[r]:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in candidates(x):
            f[x] = y
            used.add(y)
            if consistent(i) and search(i + 1):
                return True
            used.discard(y)
            del f[x]
        return False

    return ModelFunctor(a, b, dict(f)) if search(0) else None


# ------------------------------------------------------------ equivalence


def _isomorphic_1cells(m: FiniteModel, d: str, x: str, y: str) -> bool:
    """x and y are related by an invertible bigon (double bicategories) or an
    invertible identity-sided square (tidier and monogon models)."""
    if m.kind == "double-bicat":
        sort, comp, ident = ("hb", "hb_comp2", "hb_id") if d == "h" else ("vb", "vb_comp2", "vb_id")
        there = [c for c in m.of(sort) if m.bound(c) == (x, y)]
        back = [c for c in m.of(sort) if m.bound(c) == (y, x)]
        for s, t in product(there, back):
            if (m.tables.get(comp, {}).get((s, t)) == m.tables.get(ident, {}).get((x,))
                    and m.tables.get(comp, {}).get((t, s)) == m.tables.get(ident, {}).get((y,))):
                return True
        return False
    from .tidier import to_double_bicategory
    from .monogon import to_tidier
    tidier = to_tidier(m) if m.kind == "monogon" else m
    return _isomorphic_1cells(to_double_bicategory(tidier), d, x, y)


def check_equivalence(F: ModelFunctor | DoubleComputad, path_bound: int = 3) -> Report:
    """The three equivalence conditions: bijective on 0-cells, locally
    essentially surjective on 1-cells, bijective on 2-cells per boundary.

    Given a double computad, checks the inclusion of its weak-free structure
    into the strictification over paths of length at most ``path_bound``.
    """
    if isinstance(F, DoubleComputad):
        return _strictification_report(F, path_bound)
    report = Report("equivalence conditions")
    report.note(f"path bound {path_bound}: table models are closed under composition, "
                "so every path composes to a listed 1-cell")
    s, t = F.source, F.target
    structural = check_functor(F)
    if not structural.ok:
        report.merge(structural)
        return report
    report.checked += 1
    images = [F(o) for o in s.objects]
    if len(set(images)) != len(images) or set(images) != set(t.objects):
        report.add("bijective on 0-cells", tuple(sorted(s.objects)),
                   f"{len(s.objects)} source objects onto {len(set(images))} of {len(t.objects)}")
    for d, cells_s, cells_t in (("h", s.hcells, t.hcells), ("v", s.vcells, t.vcells)):
        hit = {F(x) for x in cells_s}
        for y in sorted(cells_t):
            report.checked += 1
            if y in hit:
                continue
            ends = cells_t[y]
            pre = [F(x) for x in cells_s if tuple(F(o) for o in cells_s[x]) == ends]
            if not any(_isomorphic_1cells(t, d, y, z) for z in pre):
                report.add("locally essentially surjective on 1-cells", (y,), f"no image isomorphic to {y}")
    for sort in CELL_SORTS:
        if not s.of(sort):
            if t.of(sort):
                report.add("bijective on 2-cells per boundary", (sort,), "source has none of this sort")
            continue
        by_boundary: dict[tuple[str, ...], list[str]] = {}
        for x in s.of(sort):
            by_boundary.setdefault(s.bound(x), []).append(x)
        for b in _source_boundaries(s, sort):
            report.checked += 1
            dom = by_boundary.get(b, [])
            image = [F(x) for x in dom]
            cod = t.with_bound(sort, tuple(F(c) for c in b))
            if len(set(image)) != len(image) or set(image) != set(cod):
                report.add("bijective on 2-cells per boundary", b, f"{len(dom)} cells onto {len(set(image))} of {len(cod)}")
    return report


def _source_boundaries(m: FiniteModel, sort: str):
    if sort == "sq":
        for t_ in m.of("h"):
            for l in m.cells_from("v", m.src(t_)):
                for r in m.cells_from("v", m.tgt(t_)):
                    for b in m.cells_from("h", m.tgt(l)):
                        if m.tgt(b) == m.tgt(r):
                            yield (t_, r, l, b)
    elif sort in ("hb", "vb"):
        cells = m.hcells if sort == "hb" else m.vcells
        for x, y in product(sorted(cells), repeat=2):
            if cells[x] == cells[y]:
                yield (x, y)
    else:
        d = "h" if sort in ("mN", "mS") else "v"
        for a in m.objects:
            for c in m.loops(d, a):
                yield (c,)


def _strictification_report(g: DoubleComputad, bound: int) -> Report:
    from ..weak_free import check_strictification
    r = check_strictification(g, bound)
    report = Report("strictification inclusion")
    report.note(f"path bound {bound}: {r.paths_checked} paths, {r.boundaries_checked} bracketed boundaries")
    report.checked = 1 + r.paths_checked + r.boundaries_checked
    if not r.objects_bijective:
        report.add("bijective on 0-cells", (), "object sets differ")
    for msg in r.failures:
        law = ("locally essentially surjective on 1-cells" if msg.startswith("essential")
               else "bijective on 2-cells per boundary")
        report.add(law, (), msg)
    return report


# ------------------------------------------------------------------ icons


@dataclass
class Icon:
    """Components point southeast: sigma_h[f] is a horizontal bigon F f => G f
    and sigma_v[u] a vertical bigon F u => G u."""

    F: ModelFunctor
    G: ModelFunctor
    sigma_h: dict[str, str]
    sigma_v: dict[str, str]


def identity_icon(F: ModelFunctor) -> Icon:
    e = F.target.e
    return Icon(F, F, {f: e.hb_id(F(f)) for f in F.source.hcells}, {u: e.vb_id(F(u)) for u in F.source.vcells})


def check_icon(theta: Icon) -> Report:
    F, G = theta.F, theta.G
    s, t = F.source, F.target
    report = Report("icon")
    if t.kind != "double-bicat":
        report.add("icon setting", (t.kind,), "icons need bigons; convert the target to a double bicategory")
        return report
    if G.source is not s or G.target is not t:
        report.add("icon setting", (), "the two functors must share source and target")
        return report
    for o in s.objects:
        report.checked += 1
        if F(o) != G(o):
            report.add("agree on 0-cells", (o,), f"{F(o)} != {G(o)}")
    for sig, sort, cells in ((theta.sigma_h, "hb", s.hcells), (theta.sigma_v, "vb", s.vcells)):
        for x in sorted(cells):
            report.checked += 1
            c = sig.get(x)
            if c is None or t.sort(c) != sort or t.bound(c) != (F(x), G(x)):
                report.add("component boundaries", (x,), f"component {c} is not a bigon {F(x)} => {G(x)}")
    if not report.ok:
        return report
    c = Checker(t, report)
    e = t.e
    sh, sv = theta.sigma_h, theta.sigma_v
    for z in s.of("sq"):
        f, g, h, k = s.bound(z)
        c.eq("icon naturality", (z,),
             lambda: e.act_bottom(e.act_right(F(z), sv[g]), sh[k]),
             lambda: e.act_top(sh[f], e.act_left(sv[h], G(z))))
    for sort, comp, sig in (("hb", e.hb_comp2, sh), ("vb", e.vb_comp2, sv)):
        for beta in s.of(sort):
            x, y = s.bound(beta)
            c.eq("icon naturality", (beta,), lambda: comp(F(beta), sig[y]), lambda: comp(sig[x], G(beta)))
    return report
