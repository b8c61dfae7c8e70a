"""The square symmetries (horizontal opposite, vertical opposite, transpose) on models.

Ids are kept; boundaries are rearranged and every operation table is
re-read through the symmetry.  ``_OPS[op][name] = (source, perm)`` says
that in the image model ``name(a0, a1, ...)`` is the source model's
``source(a[perm[0]], a[perm[1]], ...)``.
"""

from __future__ import annotations

from .base import FiniteModel

OPS = ("hop", "vop", "transpose")


def _same(*names: str, n: int = 1) -> dict[str, tuple[str, tuple[int, ...]]]:
    return {x: (x, tuple(range(n))) for x in names}


def _swap_pairs(pairs, perm):
    out = {}
    for a, b in pairs:
        out[a] = (b, perm)
        out[b] = (a, perm)
    return out


def _table(op: str) -> dict[str, tuple[str, tuple[int, ...]]]:
    t: dict[str, tuple[str, tuple[int, ...]]] = {}
    ident1, rev2, ident2, rev3, ident3 = (0,), (1, 0), (0, 1), (2, 1, 0), (0, 1, 2)
    if op == "hop":
        t.update(hcomp1=("hcomp1", rev2), vcomp1=("vcomp1", ident2), hid1=("hid1", ident1), vid1=("vid1", ident1))
        t.update(sq_hcomp=("sq_hcomp", rev2), sq_vcomp=("sq_vcomp", ident2),
                 sq_hid=("sq_hid", ident1), sq_vid=("sq_vid", ident1))
        t.update(_swap_pairs([("h_assoc", "h_assoc_inv")], rev3))
        t.update(_swap_pairs([("h_lunit", "h_runit"), ("h_lunit_inv", "h_runit_inv")], ident1))
        t.update(_swap_pairs([("v_assoc", "v_assoc_inv")], ident3))
        t.update(_swap_pairs([("v_lunit", "v_lunit_inv"), ("v_runit", "v_runit_inv")], ident1))
        t.update(hb_comp2=("hb_comp2", ident2), hb_id=("hb_id", ident1), hb_comp1=("hb_comp1", rev2))
        t.update(_swap_pairs([("hb_assoc", "hb_assoc_inv")], rev3))
        t.update(_swap_pairs([("hb_lunit", "hb_runit"), ("hb_lunit_inv", "hb_runit_inv")], ident1))
        t.update(vb_comp2=("vb_comp2", rev2), vb_id=("vb_id", ident1), vb_comp1=("vb_comp1", ident2))
        t.update(_swap_pairs([("vb_assoc", "vb_assoc_inv")], ident3))
        t.update(_swap_pairs([("vb_lunit", "vb_lunit_inv"), ("vb_runit", "vb_runit_inv")], ident1))
        t.update(act_top=("act_top", ident2), act_bottom=("act_bottom", ident2))
        t.update(_swap_pairs([("act_left", "act_right")], rev2))
        t.update(_swap_pairs([("cap_h_left", "cap_h_right")], (1, 0, 2, 3)))
        t.update(cap_v_top=("cap_v_top", (0, 1, 3, 2)), cap_v_bottom=("cap_v_bottom", (0, 1, 3, 2)))
        t.update(to_N=("to_N", (0, 2, 1, 3)), to_S=("to_S", (0, 2, 1, 3)))
        t.update(_swap_pairs([("to_W", "to_E")], (0, 1, 2, 3)))
        t.update(quad=("quad", (0, 2, 1, 3)), id_N=("id_N", ident1), id_S=("id_S", ident1))
        t.update(_swap_pairs([("id_E", "id_W")], ident1))
    elif op == "vop":
        t.update(hcomp1=("hcomp1", ident2), vcomp1=("vcomp1", rev2), hid1=("hid1", ident1), vid1=("vid1", ident1))
        t.update(sq_hcomp=("sq_hcomp", ident2), sq_vcomp=("sq_vcomp", rev2),
                 sq_hid=("sq_hid", ident1), sq_vid=("sq_vid", ident1))
        t.update(_swap_pairs([("h_assoc", "h_assoc_inv")], ident3))
        t.update(_swap_pairs([("h_lunit", "h_lunit_inv"), ("h_runit", "h_runit_inv")], ident1))
        t.update(_swap_pairs([("v_assoc", "v_assoc_inv")], rev3))
        t.update(_swap_pairs([("v_lunit", "v_runit"), ("v_lunit_inv", "v_runit_inv")], ident1))
        t.update(hb_comp2=("hb_comp2", rev2), hb_id=("hb_id", ident1), hb_comp1=("hb_comp1", ident2))
        t.update(_swap_pairs([("hb_assoc", "hb_assoc_inv")], ident3))
        t.update(_swap_pairs([("hb_lunit", "hb_lunit_inv"), ("hb_runit", "hb_runit_inv")], ident1))
        t.update(vb_comp2=("vb_comp2", ident2), vb_id=("vb_id", ident1), vb_comp1=("vb_comp1", rev2))
        t.update(_swap_pairs([("vb_assoc", "vb_assoc_inv")], rev3))
        t.update(_swap_pairs([("vb_lunit", "vb_runit"), ("vb_lunit_inv", "vb_runit_inv")], ident1))
        t.update(_swap_pairs([("act_top", "act_bottom")], rev2))
        t.update(act_left=("act_left", ident2), act_right=("act_right", ident2))
        t.update(_swap_pairs([("cap_v_top", "cap_v_bottom")], (1, 0, 2, 3)))
        t.update(cap_h_left=("cap_h_left", (0, 1, 3, 2)), cap_h_right=("cap_h_right", (0, 1, 3, 2)))
        t.update(_swap_pairs([("to_N", "to_S")], (0, 1, 2, 3)))
        t.update(to_W=("to_W", (0, 2, 1, 3)), to_E=("to_E", (0, 2, 1, 3)))
        t.update(quad=("quad", (3, 1, 2, 0)), id_E=("id_E", ident1), id_W=("id_W", ident1))
        t.update(_swap_pairs([("id_N", "id_S")], ident1))
    elif op == "transpose":
        t.update(_swap_pairs([("hcomp1", "vcomp1")], ident2))
        t.update(_swap_pairs([("hid1", "vid1")], ident1))
        t.update(_swap_pairs([("sq_hcomp", "sq_vcomp")], ident2))
        t.update(_swap_pairs([("sq_hid", "sq_vid")], ident1))
        for x in ("assoc", "assoc_inv"):
            t.update(_swap_pairs([(f"h_{x}", f"v_{x}"), (f"hb_{x}", f"vb_{x}")], ident3))
        for x in ("lunit", "lunit_inv", "runit", "runit_inv", "id"):
            t.update(_swap_pairs([(f"h_{x}", f"v_{x}"), (f"hb_{x}", f"vb_{x}")], ident1))
        t.update(_swap_pairs([("hb_comp2", "vb_comp2"), ("hb_comp1", "vb_comp1")], ident2))
        t.update(_swap_pairs([("act_top", "act_left"), ("act_bottom", "act_right")], ident2))
        t.update(_swap_pairs([("cap_h_left", "cap_v_top"), ("cap_h_right", "cap_v_bottom")], (0, 1, 2, 3)))
        t.update(_swap_pairs([("to_N", "to_W"), ("to_S", "to_E")], (0, 1, 2, 3)))
        t.update(quad=("quad", (2, 3, 0, 1)))
        t.update(_swap_pairs([("id_N", "id_W"), ("id_S", "id_E")], ident1))
    else:
        raise ValueError(f"unknown symmetry {op!r}; expected one of {', '.join(OPS)}")
    t.pop("h_id", None)
    t.pop("v_id", None)
    return t


_OPS = {op: _table(op) for op in OPS}


def _cell(op: str, sort: str, b: tuple[str, ...]) -> tuple[str, tuple[str, ...]]:
    if op == "hop":
        if sort == "sq":
            return sort, (b[0], b[2], b[1], b[3])
        if sort == "vb":
            return sort, (b[1], b[0])
        return {"mE": "mW", "mW": "mE"}.get(sort, sort), b
    if op == "vop":
        if sort == "sq":
            return sort, (b[3], b[1], b[2], b[0])
        if sort == "hb":
            return sort, (b[1], b[0])
        return {"mN": "mS", "mS": "mN"}.get(sort, sort), b
    if sort == "sq":
        return sort, (b[2], b[3], b[0], b[1])
    return {"hb": "vb", "vb": "hb", "mN": "mW", "mW": "mN", "mE": "mS", "mS": "mE"}[sort], b


def symmetry_model(m: FiniteModel, op: str) -> FiniteModel:
    """Apply one square symmetry to every cell and table of ``m``."""
    ops = _OPS.get(op)
    if ops is None:
        raise ValueError(f"unknown symmetry {op!r}; expected one of {', '.join(OPS)}")
    hcells, vcells = dict(m.hcells), dict(m.vcells)
    if op == "hop":
        hcells = {f: (t, s) for f, (s, t) in m.hcells.items()}
    elif op == "vop":
        vcells = {u: (t, s) for u, (s, t) in m.vcells.items()}
    else:
        hcells, vcells = dict(m.vcells), dict(m.hcells)
    cells = {c: _cell(op, s, b) for c, (s, b) in m.cells.items()}
    tables: dict[str, dict[tuple[str, ...], str]] = {}
    for name, (source, perm) in ops.items():
        if source not in m.tables:
            continue
        out: dict[tuple[str, ...], str] = {}
        for src_args, r in m.tables[source].items():
            args: list[str] = [""] * len(perm)
            for i, p in enumerate(perm):
                args[p] = src_args[i]
            out[tuple(args)] = r
        tables[name] = out
    for name in m.tables:
        if name not in ops:
            tables[name] = dict(m.tables[name])
    return FiniteModel(m.kind, m.objects, hcells, vcells, cells, tables)


# The eight elements of the symmetry group of the square, as words.
GROUP = ((), ("hop",), ("vop",), ("hop", "vop"), ("transpose",), ("transpose", "hop"),
         ("transpose", "vop"), ("transpose", "hop", "vop"))


def images(m: FiniteModel, words=GROUP):
    """Yield (label, image) for each group element; label '' for the identity."""
    for word in words:
        x = m
        for op in word:
            x = symmetry_model(x, op)
        yield "∘".join(reversed(word)), x
