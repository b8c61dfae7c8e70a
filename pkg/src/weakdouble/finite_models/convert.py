"""Conversions between the finite presentations."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..computad import DoubleComputad
from .base import FiniteModel, ModelBuilder, Undefined
from .monogon import TIDIER_OPS, from_tidier, to_tidier
from .signatures import signatures
from .double_bicat import check_tidiness
from .tidier import to_double_bicategory

TARGETS = ("tidier", "double-bicat", "monogon", "weak-free")


class ConversionError(ValueError):
    pass


class NotTidy(ConversionError):
    """Bigon data would be lost; raised only when preservation is demanded."""


@dataclass
class Conversion:
    model: object
    notes: list[str] = field(default_factory=list)


def double_bicategory_to_tidier(m: FiniteModel) -> FiniteModel:
    """The F construction.

    1-cells are their own clique representatives: a table model has one
    composite per composable pair, so each clique is stored as that
    single 1-cell.  Coherence squares are the coherence bigons acting on
    identity squares; bigons are dropped.
    """
    e = m.e
    b = ModelBuilder("tidier")
    for a in m.objects:
        b.obj(a)
    for f, st in m.hcells.items():
        b.h(f, *st)
    for u, st in m.vcells.items():
        b.v(u, *st)
    for z in m.of("sq"):
        b.cell(z, "sq", m.bound(z))
    for op in ("hcomp1", "hid1", "vcomp1", "vid1", "sq_hcomp", "sq_vcomp", "sq_hid", "sq_vid"):
        for args, r in m.tables.get(op, {}).items():
            b.set(op, args, r)
    base = b.build()

    def h_rule(bigon: str, bottom):
        return lambda a: e.act_top(m.ap(bigon, *a), e.sq_vid(bottom(a)))

    def v_rule(bigon: str, right):
        return lambda a: e.act_left(m.ap(bigon, *a), e.sq_hid(right(a)))

    hc, vc = e.hcomp1, e.vcomp1
    rules = {
        "h_assoc": h_rule("hb_assoc", lambda a: hc(hc(a[0], a[1]), a[2])),
        "h_assoc_inv": h_rule("hb_assoc_inv", lambda a: hc(a[0], hc(a[1], a[2]))),
        "h_lunit": h_rule("hb_lunit", lambda a: a[0]),
        "h_lunit_inv": h_rule("hb_lunit_inv", lambda a: hc(e.hid1(m.src(a[0])), a[0])),
        "h_runit": h_rule("hb_runit", lambda a: a[0]),
        "h_runit_inv": h_rule("hb_runit_inv", lambda a: hc(a[0], e.hid1(m.tgt(a[0])))),
        "v_assoc": v_rule("vb_assoc", lambda a: vc(vc(a[0], a[1]), a[2])),
        "v_assoc_inv": v_rule("vb_assoc_inv", lambda a: vc(a[0], vc(a[1], a[2]))),
        "v_lunit": v_rule("vb_lunit", lambda a: a[0]),
        "v_lunit_inv": v_rule("vb_lunit_inv", lambda a: vc(e.vid1(m.src(a[0])), a[0])),
        "v_runit": v_rule("vb_runit", lambda a: a[0]),
        "v_runit_inv": v_rule("vb_runit_inv", lambda a: vc(a[0], e.vid1(m.tgt(a[0])))),
    }
    tables = {k: dict(v) for k, v in base.tables.items()}
    for sig in signatures("tidier"):
        rule = rules.get(sig.name)
        if rule is None:
            continue
        table = tables.setdefault(sig.name, {})
        for args in sig.domain(base):
            try:
                table[args] = rule(args)
            except Undefined:
                pass
    return FiniteModel("tidier", base.objects, base.hcells, base.vcells, base.cells, tables)


def convert(m: FiniteModel | DoubleComputad, target: str, preserve_bigons: bool = False) -> Conversion:
    if target not in TARGETS:
        raise ConversionError(f"unknown target {target!r}; expected one of {', '.join(TARGETS)}")
    if target == "weak-free":
        if not isinstance(m, DoubleComputad):
            raise ConversionError("weak-free structures are built from a double computad, not a table model")
        from ..weak_free import WeakFree
        return Conversion(WeakFree(m), ["free structure on the given computad"])
    if isinstance(m, DoubleComputad):
        raise ConversionError("a bare computad converts only to weak-free")
    if m.kind == target:
        return Conversion(m, ["source already has the target kind"])
    if target == "double-bicat":
        tidier = to_tidier(m) if m.kind == "monogon" else m
        return Conversion(to_double_bicategory(tidier))
    if target == "monogon":
        tidier = double_bicategory_to_tidier(m) if m.kind == "double-bicat" else m
        return Conversion(from_tidier(tidier))
    # target tidier
    if m.kind == "monogon":
        return Conversion(to_tidier(m), ["monogons are dropped; they are recovered from squares"])
    tidy = check_tidiness(m)
    notes = ["bigon data is discarded: squares bordered by identities stand in for bigons"]
    if not tidy.ok:
        if preserve_bigons:
            raise NotTidy(f"source is not tidy ({len(tidy.violations())} tidiness violations); "
                          "its bigons cannot be recovered from squares")
        notes.append(f"source is not tidy: {len(tidy.violations())} tidiness violations")
    return Conversion(double_bicategory_to_tidier(m), notes)


__all__ = ["TARGETS", "TIDIER_OPS", "Conversion", "ConversionError", "NotTidy", "convert",
           "double_bicategory_to_tidier"]
