"""Tidier models: squares only, with identity-pasting bijections.

A tidier model carries no bigons.  Pasting an identity square onto one
side of a square changes that side's transverse neighbours into
composites with an identity:

    T(z) = sq_vcomp(sq_vid(top z), z)       (f; g, h; k) -> (f; 1.g, 1.h; k)
    B(z) = sq_vcomp(z, sq_vid(bottom z))    (f; g, h; k) -> (f; g.1, h.1; k)
    L(z) = sq_hcomp(sq_hid(left z), z)      (f; g, h; k) -> (1.f; g, h; 1.k)
    R(z) = sq_hcomp(z, sq_hid(right z))     (f; g, h; k) -> (f.1; g, h; k.1)

The model is well formed when each of these is a bijection per boundary
and the double bicategory read off from it satisfies every law.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import FiniteModel, ModelBuilder, Undefined
from .double_bicat import check_double_bicategory
from .report import Report
from .signatures import check_typing, signatures

PASTINGS = ("T", "B", "L", "R")


def paste(m: FiniteModel, which: str, z: str) -> str:
    e = m.e
    t, r, l, b = m.bound(z)
    if which == "T":
        return e.sq_vcomp(e.sq_vid(t), z)
    if which == "B":
        return e.sq_vcomp(z, e.sq_vid(b))
    if which == "L":
        return e.sq_hcomp(e.sq_hid(l), z)
    return e.sq_hcomp(z, e.sq_hid(r))


def pasted_boundary(m: FiniteModel, which: str, b: tuple[str, ...]) -> tuple[str, ...]:
    e = m.e
    t, r, l, bo = b
    if which == "T":
        return (t, e.vcomp1(e.vid1(m.src(r)), r), e.vcomp1(e.vid1(m.src(l)), l), bo)
    if which == "B":
        return (t, e.vcomp1(r, e.vid1(m.tgt(r))), e.vcomp1(l, e.vid1(m.tgt(l))), bo)
    if which == "L":
        return (e.hcomp1(e.hid1(m.src(t)), t), r, l, e.hcomp1(e.hid1(m.src(bo)), bo))
    return (e.hcomp1(t, e.hid1(m.tgt(t))), r, l, e.hcomp1(bo, e.hid1(m.tgt(bo))))


@dataclass
class Pastings:
    """The four pasting maps with their inverses, as dictionaries."""

    forward: dict[str, dict[str, str]]
    inverse: dict[str, dict[str, str]]


def pastings(m: FiniteModel) -> Pastings:
    fwd: dict[str, dict[str, str]] = {w: {} for w in PASTINGS}
    inv: dict[str, dict[str, str]] = {w: {} for w in PASTINGS}
    for w in PASTINGS:
        for z in m.of("sq"):
            try:
                y = paste(m, w, z)
            except Undefined:
                continue
            fwd[w][z] = y
            inv[w].setdefault(y, z)
    return Pastings(fwd, inv)


def _all_boundaries(m: FiniteModel):
    """Every (top, right, left, bottom) with matching corners."""
    for t in m.of("h"):
        s0, s1 = m.hcells[t]
        for l in m.cells_from("v", s0):
            for r in m.cells_from("v", s1):
                for b in m.of("h"):
                    if m.hcells[b] == (m.tgt(l), m.tgt(r)):
                        yield (t, r, l, b)


BIJECTION_LAW = "identity pasting bijection"


def check_pastings(m: FiniteModel, report: Report) -> None:
    """Injectivity and surjectivity of each pasting map, per boundary class."""
    p = pastings(m)
    for w in PASTINGS:
        for b in _all_boundaries(m):
            report.checked += 1
            try:
                target = pasted_boundary(m, w, b)
            except Undefined:
                continue
            dom = m.with_bound("sq", b)
            cod = m.with_bound("sq", target)
            image = [p.forward[w].get(z) for z in dom]
            if None in image:
                continue  # undefined composites are typing violations
            if len(set(image)) != len(image):
                report.add(f"{BIJECTION_LAW} ({w})", b, f"not injective: {len(dom)} squares, {len(set(image))} images")
            elif set(image) != set(cod):
                report.add(f"{BIJECTION_LAW} ({w})", b, f"not surjective: {len(dom)} squares onto {len(cod)}")


def _hb_id(x: str) -> str:
    return f"hb<{x}>"


def _vb_id(x: str) -> str:
    return f"vb<{x}>"


def to_double_bicategory(m: FiniteModel) -> FiniteModel:
    """Read off the double bicategory of a tidier model.

    Horizontal bigons are the squares with identity left and right sides;
    vertical bigons are the squares with identity top and bottom.  Bigon
    compositions and actions paste squares and strip the extra identity
    with the inverse pasting maps.
    """
    e = m.e
    p = pastings(m)
    b = ModelBuilder("double-bicat")
    for a in m.objects:
        b.obj(a)
    for f, st in m.hcells.items():
        b.h(f, *st)
    for u, st in m.vcells.items():
        b.v(u, *st)
    for z in m.of("sq"):
        b.cell(z, "sq", m.bound(z))
    hb_of: dict[str, str] = {}
    vb_of: dict[str, str] = {}
    for z in m.of("sq"):
        t, r, l, bo = m.bound(z)
        s_obj, t_obj = m.hcells[t]
        if m.defined("vid1", s_obj) and l == e.vid1(s_obj) and r == e.vid1(t_obj):
            hb_of[z] = b.cell(_hb_id(z), "hb", (t, bo))
        s_obj, t_obj = m.vcells[l]
        if m.defined("hid1", s_obj) and t == e.hid1(s_obj) and bo == e.hid1(t_obj):
            vb_of[z] = b.cell(_vb_id(z), "vb", (l, r))
    for op in ("hcomp1", "hid1", "vcomp1", "vid1", "sq_hcomp", "sq_vcomp", "sq_hid", "sq_vid"):
        for args, r in m.tables.get(op, {}).items():
            b.set(op, args, r)
    d = b.build()
    sq_of = {v: k for k, v in hb_of.items()} | {v: k for k, v in vb_of.items()}

    def sq(x: str) -> str:
        return sq_of.get(x, x)

    def inv(w: str, z: str) -> str:
        try:
            return p.inverse[w][z]
        except KeyError:
            raise Undefined(f"inverse {w}", (z,)) from None

    def hb(z: str) -> str:
        if z not in hb_of:
            raise Undefined("hb", (z,))
        return hb_of[z]

    def vb(z: str) -> str:
        if z not in vb_of:
            raise Undefined("vb", (z,))
        return vb_of[z]

    rules = {
        "hb_comp2": lambda a: hb(inv("T", e.sq_vcomp(sq(a[0]), sq(a[1])))),
        "hb_id": lambda a: hb(e.sq_vid(a[0])),
        "hb_comp1": lambda a: hb(e.sq_hcomp(sq(a[0]), sq(a[1]))),
        "hb_assoc": lambda a: hb(e.h_assoc(*a)), "hb_assoc_inv": lambda a: hb(e.h_assoc_inv(*a)),
        "hb_lunit": lambda a: hb(e.h_lunit(*a)), "hb_lunit_inv": lambda a: hb(e.h_lunit_inv(*a)),
        "hb_runit": lambda a: hb(e.h_runit(*a)), "hb_runit_inv": lambda a: hb(e.h_runit_inv(*a)),
        "vb_comp2": lambda a: vb(inv("L", e.sq_hcomp(sq(a[0]), sq(a[1])))),
        "vb_id": lambda a: vb(e.sq_hid(a[0])),
        "vb_comp1": lambda a: vb(e.sq_vcomp(sq(a[0]), sq(a[1]))),
        "vb_assoc": lambda a: vb(e.v_assoc(*a)), "vb_assoc_inv": lambda a: vb(e.v_assoc_inv(*a)),
        "vb_lunit": lambda a: vb(e.v_lunit(*a)), "vb_lunit_inv": lambda a: vb(e.v_lunit_inv(*a)),
        "vb_runit": lambda a: vb(e.v_runit(*a)), "vb_runit_inv": lambda a: vb(e.v_runit_inv(*a)),
        "act_top": lambda a: inv("T", e.sq_vcomp(sq(a[0]), a[1])),
        "act_bottom": lambda a: inv("B", e.sq_vcomp(a[0], sq(a[1]))),
        "act_left": lambda a: inv("L", e.sq_hcomp(sq(a[0]), a[1])),
        "act_right": lambda a: inv("R", e.sq_hcomp(a[0], sq(a[1]))),
    }
    tables = {k: dict(v) for k, v in d.tables.items()}
    for sig in signatures("double-bicat"):
        rule = rules.get(sig.name)
        if rule is None:
            continue
        table = tables.setdefault(sig.name, {})
        for args in sig.domain(d):
            try:
                table[args] = rule(args)
            except Undefined:
                pass
    return FiniteModel("double-bicat", d.objects, d.hcells, d.vcells, d.cells, tables)


def check_tidier(m: FiniteModel) -> Report:
    report = Report("tidier model axioms")
    check_typing(m, report)
    check_pastings(m, report)
    db = check_double_bicategory(to_double_bicategory(m))
    report.note("double bicategory laws are checked on the derived double bicategory")
    report.merge(db)
    return report
