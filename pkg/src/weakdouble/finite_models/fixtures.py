"""Deterministic fixture models.

All tidier fixtures are strict and thin (at most one square per
boundary), so every square-valued operation is forced by its boundary;
``fill_by_boundary`` exploits that.  The C_M double bicategories are
thin on squares but carry a monoid's worth of vertical bigons on f.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Mapping

from .base import FiniteModel, ModelBuilder, Undefined
from .monoid import Monoid, cyclic
from .signatures import Args, signatures

Rule = Callable[[FiniteModel, Args], "str | None"]


def fill_by_boundary(m: FiniteModel, overrides: Mapping[str, Rule] | None = None) -> FiniteModel:
    """Fill every 2-cell-valued table whose result is unique given its boundary.

    1-cell tables must already be present.  ``overrides`` supplies rules for
    operations whose results are not forced (returning None leaves a hole).
    """
    overrides = dict(overrides or {})
    tables = {k: dict(v) for k, v in m.tables.items()}
    for sig in signatures(m.kind):
        if sig.result in ("h", "v"):
            continue
        table = tables.setdefault(sig.name, {})
        for args in sig.domain(m):
            if sig.name in overrides:
                r = overrides[sig.name](m, args)
            else:
                try:
                    want = sig.boundary(m, args)
                except Undefined:
                    continue
                found = m.with_bound(sig.result, want)
                r = found[0] if len(found) == 1 else None
            if r is not None:
                table[args] = r
    return FiniteModel(m.kind, m.objects, m.hcells, m.vcells, m.cells, tables)


def _strict_category(b: ModelBuilder, d: str, cells: Mapping[str, tuple[str, str]],
                     comp: Callable[[str, str], str], ident: Mapping[str, str]) -> None:
    add = b.h if d == "h" else b.v
    for c, (s, t) in cells.items():
        add(c, s, t)
    for x, y in product(cells, repeat=2):
        if cells[x][1] == cells[y][0]:
            b.set(f"{d}comp1", (x, y), comp(x, y))
    for a, c in ident.items():
        b.set(f"{d}id1", (a,), c)


def _thin_squares(b: ModelBuilder, commutes: Callable[[str, str, str, str], bool]) -> None:
    for f, g, h, k in product(b.hcells, b.vcells, b.vcells, b.hcells):
        fs, ft = b.hcells[f]
        ks, kt = b.hcells[k]
        if b.vcells[h] == (fs, ks) and b.vcells[g] == (ft, kt) and commutes(f, g, h, k):
            b.cell(f"sq[{f},{g},{h},{k}]", "sq", (f, g, h, k))


def terminal() -> FiniteModel:
    """One cell of every kind."""
    b = ModelBuilder("tidier")
    b.obj("*")
    _strict_category(b, "h", {"1h": ("*", "*")}, lambda x, y: "1h", {"*": "1h"})
    _strict_category(b, "v", {"1v": ("*", "*")}, lambda x, y: "1v", {"*": "1v"})
    b.cell("1sq", "sq", ("1h", "1v", "1v", "1h"))
    return fill_by_boundary(b.build())


def pair(n: int = 2) -> FiniteModel:
    """The codiscrete (pair) double category on n objects: one square per boundary."""
    b = ModelBuilder("tidier")
    objs = [str(i) for i in range(n)]
    for a in objs:
        b.obj(a)
    h = {f"h{x}{y}": (x, y) for x in objs for y in objs}
    v = {f"v{x}{y}": (x, y) for x in objs for y in objs}
    _strict_category(b, "h", h, lambda p, q: f"h{h[p][0]}{h[q][1]}", {a: f"h{a}{a}" for a in objs})
    _strict_category(b, "v", v, lambda p, q: f"v{v[p][0]}{v[q][1]}", {a: f"v{a}{a}" for a in objs})
    _thin_squares(b, lambda *_: True)
    return fill_by_boundary(b.build())


def quintet(group: Monoid | None = None) -> FiniteModel:
    """Quintets of a finite group seen as a one-object category.

    Horizontal and vertical 1-cells are both the group elements; the square
    (f; g, h; k) exists exactly when f*g == h*k.
    """
    g = group or cyclic(2)
    b = ModelBuilder("tidier")
    b.obj("*")
    hs = {f"h{x}": ("*", "*") for x in g.elements}
    vs = {f"v{x}": ("*", "*") for x in g.elements}
    _strict_category(b, "h", hs, lambda p, q: "h" + g.times(p[1:], q[1:]), {"*": "h" + g.unit})
    _strict_category(b, "v", vs, lambda p, q: "v" + g.times(p[1:], q[1:]), {"*": "v" + g.unit})
    _thin_squares(b, lambda f, gg, h, k: g.times(f[1:], gg[1:]) == g.times(h[1:], k[1:]))
    return fill_by_boundary(b.build())


def c_m(monoid: Monoid) -> FiniteModel:
    """The double bicategory C_M: vertical bigons on f are the elements of M.

    Objects A, B; one non-identity vertical 1-cell f: A -> B; no
    non-identity horizontal 1-cells, horizontal bigons or squares.  The
    bigons act trivially on the identity square of f.
    """
    M = monoid
    b = ModelBuilder("double-bicat")
    for a in ("A", "B"):
        b.obj(a)
    _strict_category(b, "h", {"1A": ("A", "A"), "1B": ("B", "B")}, lambda p, q: p, {"A": "1A", "B": "1B"})
    vs = {"iA": ("A", "A"), "iB": ("B", "B"), "f": ("A", "B")}
    _strict_category(b, "v", vs, lambda p, q: "f" if "f" in (p, q) else p, {"A": "iA", "B": "iB"})
    _thin_squares(b, lambda *_: True)
    for x in ("1A", "1B"):
        b.cell(f"id[{x}]", "hb", (x, x))
    for u in ("iA", "iB"):
        b.cell(f"id[{u}]", "vb", (u, u))
    for x in M.elements:
        b.cell(f"m[{x}]", "vb", ("f", "f"))
    unit = f"m[{M.unit}]"

    def label(c: str) -> str:
        return c[2:-1]

    def vb_comp2(m: FiniteModel, args: Args) -> str:
        x, y = args
        if x.startswith("m["):
            return f"m[{M.times(label(x), label(y))}]"
        return x

    def vb_comp1(m: FiniteModel, args: Args) -> str:
        x, y = args
        return x if x.startswith("m[") else y if y.startswith("m[") else x

    def ident_on(m: FiniteModel, u: str) -> str:
        return unit if u == "f" else f"id[{u}]"

    def coherence(m: FiniteModel, args: Args) -> str:
        return ident_on(m, "f" if "f" in args else args[0])

    overrides: dict[str, Rule] = {
        "vb_comp2": vb_comp2,
        "vb_comp1": vb_comp1,
        "vb_id": lambda m, a: ident_on(m, a[0]),
    }
    for name in ("vb_assoc", "vb_assoc_inv", "vb_lunit", "vb_lunit_inv", "vb_runit", "vb_runit_inv"):
        overrides[name] = coherence
    overrides["act_left"] = lambda m, a: a[1]
    overrides["act_right"] = lambda m, a: a[0]
    return fill_by_boundary(b.build(), overrides)


def fixtures() -> dict[str, FiniteModel]:
    return {
        "terminal": terminal(),
        "pair": pair(2),
        "quintet-z2": quintet(cyclic(2)),
        "c-trivial": c_m(cyclic(1)),
        "c-z2": c_m(cyclic(2)),
        "c-z3": c_m(cyclic(3)),
    }


TIDIER_FIXTURES = ("terminal", "pair", "quintet-z2")
