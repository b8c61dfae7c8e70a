"""Monogon models: squares plus N/E/S/W monogons with weak composition structure.

Monogon arguments always follow the square(s) they cap:

    cap_h_left(z, x, s, n)    z beside x, s on z's top, n on z's bottom
    cap_h_right(z, x, s, n)   z beside x, s on x's top, n on x's bottom
    cap_v_top(z, x, e, w)     z above x, e on z's left, w on z's right
    cap_v_bottom(z, x, e, w)  z above x, e on x's left, w on x's right
    to_N(z, e, w, n)  to_S(z, e, w, s)  to_W(z, s, n, w)  to_E(z, s, n, e)
    quad(n, e, w, s)

An N monogon has only a top edge, so it caps a square from below (it
sits on the square's bottom), and similarly for the others.
"""

from __future__ import annotations

from .base import FiniteModel, ModelBuilder, Undefined
from .checker import Checker
from .double_bicat import EXPANSION_NOTE, _hpaths, square_interchange_laws
from .report import Report
from .signatures import check_typing, signatures, sq_h_pairs, sq_v_pairs
from .symmetry import images
from .tidier import check_pastings, pastings

TIDIER_OPS = ("hcomp1", "hid1", "vcomp1", "vid1", "sq_hcomp", "sq_vcomp", "sq_hid", "sq_vid",
              "h_assoc", "h_assoc_inv", "h_lunit", "h_lunit_inv", "h_runit", "h_runit_inv",
              "v_assoc", "v_assoc_inv", "v_lunit", "v_lunit_inv", "v_runit", "v_runit_inv")


# ------------------------------------------------------------ conversions


def from_tidier(m: FiniteModel) -> FiniteModel:
    """Monogons are the squares bordered by identities on three sides."""
    e = m.e
    p = pastings(m)
    b = ModelBuilder("monogon")
    for a in m.objects:
        b.obj(a)
    for f, st in m.hcells.items():
        b.h(f, *st)
    for u, st in m.vcells.items():
        b.v(u, *st)
    for z in m.of("sq"):
        b.cell(z, "sq", m.bound(z))
    for op in TIDIER_OPS:
        for args, r in m.tables.get(op, {}).items():
            b.set(op, args, r)
    mono: dict[tuple[str, str], str] = {}
    for z in m.of("sq"):
        t, r, l, bo = m.bound(z)
        a = m.src(t)
        if m.tgt(bo) != a or not (m.defined("hid1", a) and m.defined("vid1", a)):
            continue
        one_h, one_v = e.hid1(a), e.vid1(a)
        forms = {"mN": ((r, l, bo), (one_v, one_v, one_h), t),
                 "mS": ((t, r, l), (one_h, one_v, one_v), bo),
                 "mE": ((t, l, bo), (one_h, one_v, one_h), r),
                 "mW": ((t, r, bo), (one_h, one_v, one_h), l)}
        for sort, (sides, want, cell) in forms.items():
            if sides == want:
                mono[(sort, z)] = b.cell(f"{sort[1]}<{z}>", sort, (cell,))
    under = {v: k[1] for k, v in mono.items()}
    base = b.build()

    def sq(x: str) -> str:
        return under[x]

    def inv(w: str, z: str) -> str:
        try:
            return p.inverse[w][z]
        except KeyError:
            raise Undefined(f"inverse {w}", (z,)) from None

    def wrap(sort: str, z: str) -> str:
        try:
            return mono[(sort, z)]
        except KeyError:
            raise Undefined(f"monogon {sort}", (z,)) from None

    def strip_sides(z: str, east: str, west: str) -> str:
        return inv("R", e.sq_hcomp(inv("L", e.sq_hcomp(sq(east), z)), sq(west)))

    def strip_ends(z: str, south: str, north: str) -> str:
        return inv("T", e.sq_vcomp(sq(south), inv("B", e.sq_vcomp(z, sq(north)))))

    rules = {
        "cap_h_left": lambda a: inv("L", e.sq_hcomp(strip_ends(a[0], a[2], a[3]), a[1])),
        "cap_h_right": lambda a: inv("R", e.sq_hcomp(a[0], strip_ends(a[1], a[2], a[3]))),
        "cap_v_top": lambda a: inv("T", e.sq_vcomp(strip_sides(a[0], a[2], a[3]), a[1])),
        "cap_v_bottom": lambda a: inv("B", e.sq_vcomp(a[0], strip_sides(a[1], a[2], a[3]))),
        "to_N": lambda a: wrap("mN", inv("B", e.sq_vcomp(strip_sides(a[0], a[1], a[2]), sq(a[3])))),
        "to_S": lambda a: wrap("mS", inv("T", e.sq_vcomp(sq(a[3]), strip_sides(a[0], a[1], a[2])))),
        "to_W": lambda a: wrap("mW", inv("R", e.sq_hcomp(strip_ends(a[0], a[1], a[2]), sq(a[3])))),
        "to_E": lambda a: wrap("mE", inv("L", e.sq_hcomp(sq(a[3]), strip_ends(a[0], a[1], a[2])))),
        "quad": lambda a: inv("R", e.sq_hcomp(
            inv("L", e.sq_hcomp(sq(a[2]), inv("T", e.sq_vcomp(sq(a[0]), sq(a[3]))))), sq(a[1]))),
        "id_N": lambda a: wrap("mN", e.sq_vid(e.hid1(a[0]))),
        "id_S": lambda a: wrap("mS", e.sq_vid(e.hid1(a[0]))),
        "id_E": lambda a: wrap("mE", e.sq_hid(e.vid1(a[0]))),
        "id_W": lambda a: wrap("mW", e.sq_hid(e.vid1(a[0]))),
    }
    tables = {k: dict(v) for k, v in base.tables.items()}
    for sig in signatures("monogon"):
        rule = rules.get(sig.name)
        if rule is None:
            continue
        table = tables.setdefault(sig.name, {})
        for args in sig.domain(base):
            try:
                table[args] = rule(args)
            except Undefined:
                pass
    return FiniteModel("monogon", base.objects, base.hcells, base.vcells, base.cells, tables)


def to_tidier(m: FiniteModel) -> FiniteModel:
    """Forget the monogons."""
    cells = {c: v for c, v in m.cells.items() if v[0] == "sq"}
    tables = {op: dict(m.tables[op]) for op in TIDIER_OPS if op in m.tables}
    return FiniteModel("tidier", m.objects, dict(m.hcells), dict(m.vcells), cells, tables)


# ------------------------------------------------------------------ laws


def _mono_on_loops(m: FiniteModel, sort: str, a: str) -> list[str]:
    d = "h" if sort in ("mN", "mS") else "v"
    return [x for c in m.loops(d, a) for x in m.monogons(sort, c)]


def cap_laws(c: Checker) -> None:
    m, e = c.m, c.e
    for z in m.of("sq"):
        t, r, l, b = m.bound(z)
        c.eq("identity laws", (z,),
             lambda: e.cap_h_left(e.sq_hid(l), z, e.id_S(m.src(l)), e.id_N(m.tgt(l))), lambda: z)
    # three squares in a row, the first two capped on top and bottom
    for l, mid in sq_h_pairs(m):
        bl, bm = m.bound(l), m.bound(mid)
        for r in m.sq_with("left", bm[1]):
            for lu in m.monogons("mS", bl[0]):
                for ld in m.monogons("mN", bl[3]):
                    for mu in m.monogons("mS", bm[0]):
                        for md in m.monogons("mN", bm[3]):
                            w = (l, mid, r, lu, ld, mu, md)
                            one = lambda: e.cap_h_left(l, e.cap_h_left(mid, r, mu, md), lu, ld)  # noqa: E731
                            c.eq("associativity laws for capped squares", w, one,
                                 lambda: e.cap_h_left(e.cap_h_left(l, mid, lu, ld), r, mu, md))
                            c.eq("associativity laws for capped squares", w, one,
                                 lambda: e.cap_h_left(e.cap_h_right(l, mid, mu, md), r, lu, ld))
            # both ends capped, middle free
            for lu in m.monogons("mS", bl[0]):
                for ld in m.monogons("mN", bl[3]):
                    br = m.bound(r)
                    for ru in m.monogons("mS", br[0]):
                        for rd in m.monogons("mN", br[3]):
                            c.eq("associativity laws for composing diagram shapes (ends capped)",
                                 (l, mid, r, lu, ld, ru, rd),
                                 lambda: e.cap_h_left(l, e.cap_h_right(mid, r, ru, rd), lu, ld),
                                 lambda: e.cap_h_right(e.cap_h_left(l, mid, lu, ld), r, ru, rd))
    # a capped square beside a square that has a capped square above it
    for l, mid in sq_h_pairs(m):
        bl = m.bound(l)
        for u in m.sq_with("bottom", m.bound(mid)[0]):
            bu = m.bound(u)
            for lu in m.monogons("mS", bl[0]):
                for ld in m.monogons("mN", bl[3]):
                    for ul in m.monogons("mE", bu[2]):
                        for ur in m.monogons("mW", bu[1]):
                            c.eq("associativity laws for composing diagram shapes (corner)",
                                 (l, mid, u, lu, ld, ul, ur),
                                 lambda: e.cap_h_left(l, e.cap_v_top(u, mid, ul, ur), lu, ld),
                                 lambda: e.cap_v_top(u, e.cap_h_left(l, mid, lu, ld), ul, ur))
    # sandwiching monogons, and squares composed beside monogons
    for z, phi in sq_h_pairs(m):
        bz, bp = m.bound(z), m.bound(phi)
        for xi in m.sq_with("left", bp[1]):
            for al in m.monogons("mS", bp[0]):
                for be in m.monogons("mN", bp[3]):
                    c.eq("associativity laws for sandwiching monogons between squares", (z, phi, xi, al, be),
                         lambda: e.sq_hcomp(e.cap_h_right(z, phi, al, be), xi),
                         lambda: e.sq_hcomp(z, e.cap_h_left(phi, xi, al, be)))
            for al in m.monogons("mS", bz[0]):
                for be in m.monogons("mN", bz[3]):
                    c.eq("associativity laws for squares composed beside monogons", (z, phi, xi, al, be),
                         lambda: e.sq_hcomp(e.cap_h_left(z, phi, al, be), xi),
                         lambda: e.cap_h_left(z, e.sq_hcomp(phi, xi), al, be))


def coherence_laws(c: Checker) -> None:
    m, e = c.m, c.e

    def ends(f: str) -> tuple[str, str]:
        return e.id_E(m.src(f)), e.id_W(m.tgt(f))

    for f in m.of("h"):
        for name, fwd, bwd, top in (
            ("left unitor", e.h_lunit, e.h_lunit_inv, lambda: e.hcomp1(e.hid1(m.src(f)), f)),
            ("right unitor", e.h_runit, e.h_runit_inv, lambda: e.hcomp1(f, e.hid1(m.tgt(f)))),
        ):
            c.eq(f"invertibility laws ({name})", (f,),
                 lambda: e.cap_v_top(fwd(f), bwd(f), *ends(f)), lambda: e.sq_vid(top()))
            c.eq(f"invertibility laws ({name} inverse)", (f,),
                 lambda: e.cap_v_top(bwd(f), fwd(f), *ends(f)), lambda: e.sq_vid(f))
    for f, g, h in _hpaths(m, 3):
        ends3 = lambda: (e.id_E(m.src(f)), e.id_W(m.tgt(h)))  # noqa: E731
        c.eq("invertibility laws (associator)", (f, g, h),
             lambda: e.cap_v_top(e.h_assoc(f, g, h), e.h_assoc_inv(f, g, h), *ends3()),
             lambda: e.sq_vid(e.hcomp1(f, e.hcomp1(g, h))))
        c.eq("invertibility laws (associator inverse)", (f, g, h),
             lambda: e.cap_v_top(e.h_assoc_inv(f, g, h), e.h_assoc(f, g, h), *ends3()),
             lambda: e.sq_vid(e.hcomp1(e.hcomp1(f, g), h)))
    for z in m.of("sq"):
        t, r, l, b = m.bound(z)
        c.eq("horizontal unitor naturality laws", (z,),
             lambda: e.cap_v_top(e.h_lunit(t), z, *ends(t)),
             lambda: e.cap_v_bottom(e.sq_hcomp(e.sq_hid(l), z), e.h_lunit(b), *ends(b)))
    for z, x in sq_h_pairs(m):
        for y in m.sq_with("left", m.bound(x)[1]):
            (t1, _, _, b1), (t2, _, _, b2), (t3, _, _, b3) = m.bound(z), m.bound(x), m.bound(y)
            c.eq("horizontal associator naturality law", (z, x, y),
                 lambda: e.cap_v_top(e.h_assoc(t1, t2, t3), e.sq_hcomp(e.sq_hcomp(z, x), y),
                                     e.id_E(m.src(t1)), e.id_W(m.tgt(t3))),
                 lambda: e.cap_v_bottom(e.sq_hcomp(z, e.sq_hcomp(x, y)), e.h_assoc(b1, b2, b3),
                                        e.id_E(m.src(b1)), e.id_W(m.tgt(b3))))
    for f, g in _hpaths(m, 2):
        one = lambda: e.hid1(m.tgt(f))  # noqa: E731
        c.eq("horizontal bicategory triangle and pentagon laws (triangle)", (f, g),
             lambda: e.sq_hcomp(e.sq_vid(f), e.h_lunit(g)),
             lambda: e.cap_v_top(e.h_assoc(f, one(), g), e.sq_hcomp(e.h_runit(f), e.sq_vid(g)),
                                 e.id_E(m.src(f)), e.id_W(m.tgt(g))))
    for f, g, h, k in _hpaths(m, 4):
        def caps():
            return e.id_E(m.src(f)), e.id_W(m.tgt(k))
        c.eq("horizontal bicategory triangle and pentagon laws (pentagon)", (f, g, h, k),
             lambda: e.cap_v_top(e.h_assoc(f, g, e.hcomp1(h, k)), e.h_assoc(e.hcomp1(f, g), h, k), *caps()),
             lambda: e.cap_v_top(
                 e.sq_hcomp(e.sq_vid(f), e.h_assoc(g, h, k)),
                 e.cap_v_top(e.h_assoc(f, e.hcomp1(g, h), k), e.sq_hcomp(e.h_assoc(f, g, h), e.sq_vid(k)), *caps()),
                 *caps()))


def monogon_laws(c: Checker) -> None:
    m, e = c.m, c.e
    # interchange of capped vertical composites with horizontal composition
    stacks = [(z, x, al, be) for z, x in sq_v_pairs(m)
              for al in m.monogons("mE", m.bound(z)[2]) for be in m.monogons("mW", m.bound(z)[1])]
    by_left: dict[str, list[tuple[str, str, str, str]]] = {}
    for s in stacks:
        by_left.setdefault(m.bound(s[1])[2], []).append(s)
    for z, x, al, be in stacks:
        for phi, psi, ga, de in by_left.get(m.bound(x)[1], []):
            p = m.src(m.bound(z)[1])

            def rhs(z=z, x=x, al=al, be=be, phi=phi, psi=psi, ga=ga, de=de, p=p):
                square = e.quad(e.id_N(p), ga, be, e.id_S(p))
                left = e.cap_h_right(z, square, e.id_S(p), e.id_N(p))
                return e.cap_v_top(e.sq_hcomp(left, phi), e.sq_hcomp(x, psi), al, de)

            c.eq("interchange law for monogons and horizontal composition", (z, x, al, be, phi, psi, ga, de),
                 lambda: e.sq_hcomp(e.cap_v_top(z, x, al, be), e.cap_v_top(phi, psi, ga, de)), rhs)
    # identity commutativity
    for z in m.of("sq"):
        f, g, h, k = m.bound(z)
        a, b = m.src(f), m.tgt(f)
        for al in m.monogons("mE", h):
            for be in m.monogons("mW", g):
                def mid(z=z, al=al, be=be, a=a, b=b):
                    right = e.quad(e.id_N(b), e.id_E(b), be, e.id_S(b))
                    left = e.quad(e.id_N(a), al, e.id_W(a), e.id_S(a))
                    return e.cap_h_left(left, e.cap_h_right(z, right, e.id_S(b), e.id_N(b)), e.id_S(a), e.id_N(a))
                w = (z, al, be)
                c.eq("identity commutativity laws", w, lambda: e.cap_v_top(z, e.sq_vid(k), al, be), mid)
                c.eq("identity commutativity laws", w, mid, lambda: e.cap_v_bottom(e.sq_vid(f), z, al, be))
    # collapsing a square to a monogon, then composing four monogons
    for z in m.of("sq"):
        t, r, l, b = m.bound(z)
        a = m.src(t)
        if m.tgt(b) != a or m.src(l) != m.tgt(l):
            continue
        for ea in m.monogons("mE", l):
            for we in m.monogons("mW", r):
                for d in m.monogons("mN", b):
                    for e2 in _mono_on_loops(m, "mE", a):
                        for w2 in _mono_on_loops(m, "mW", a):
                            for s2 in _mono_on_loops(m, "mS", a):
                                c.eq("associativity laws for composing diagram shapes (monogon block)",
                                     (z, ea, we, d, e2, w2, s2),
                                     lambda: e.quad(e.to_N(z, ea, we, d), e2, w2, s2),
                                     lambda: e.cap_v_top(z, e.quad(d, e2, w2, s2), ea, we))
    for a in m.of("obj"):
        c.eq("identity monogon law", (a,),
             lambda: e.quad(e.id_N(a), e.id_E(a), e.id_W(a), e.id_S(a)), lambda: e.sq_vid(e.hid1(a)))
        for n in _mono_on_loops(m, "mN", a):
            c.eq("monogon to square and back law", (n,),
                 lambda: e.to_N(e.quad(n, e.id_E(a), e.id_W(a), e.id_S(a)), e.id_E(a), e.id_W(a), e.id_N(a)),
                 lambda: n)


LAW_GROUPS = (cap_laws, coherence_laws, monogon_laws, square_interchange_laws)


def check_monogon(m: FiniteModel, symmetric: bool = True) -> Report:
    report = Report("monogon model axioms")
    report.note(EXPANSION_NOTE if symmetric else "symmetry images not expanded")
    check_typing(m, report)
    words = None if symmetric else ((),)
    for tag, img in (images(m) if words is None else images(m, words)):
        c = Checker(img, report, tag)
        for group in LAW_GROUPS:
            group(c)
    return report


def check_underlying_tidier(m: FiniteModel) -> Report:
    """The identity-pasting bijections of the underlying squares."""
    report = Report("underlying tidier bijections")
    check_pastings(to_tidier(m), report)
    return report
