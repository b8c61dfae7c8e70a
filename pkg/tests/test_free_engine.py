import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from weakdouble import computad as cp
from weakdouble import free_engine as fe
from weakdouble.computad import Direction, Path
from weakdouble.free_engine import DecoratedGrid, Gen, HComp, HId, Layer, Seam, VComp, VId

from conftest import cell2, double_doc


def parse(text, c):
    return fe.parse_term(text, c)


# ------------------------------------------------------------------ parsing


def test_parse_and_format_round_trip(two_by_two):
    text = "(hcomp (vcomp gen:a gen:c) (vcomp gen:b gen:d))"
    t = parse(text, two_by_two)
    assert t == HComp(VComp(Gen("a"), Gen("c")), VComp(Gen("b"), Gen("d")))
    assert fe.format_term(t) == text
    empty = parse("(hid (v) @o00)", two_by_two)
    assert empty == HId(Path(Direction.V, (), "o00"))


@pytest.mark.parametrize("text, line, column", [
    ("(hcomp gen:a", 1, 8),
    ("(frob gen:a gen:b)", 1, 2),
    ("(vid (h) )", 1, 7),
    ("gen:a gen:b", 1, 7),
    ("(hid (h f00))", 1, 2),
])
def test_parse_errors_carry_position(two_by_two, text, line, column):
    with pytest.raises(fe.ParseError) as err:
        parse(text, two_by_two)
    assert (err.value.line, err.value.column) == (line, column)


def test_parse_dangling_generator(two_by_two):
    with pytest.raises(fe.DanglingId):
        parse("gen:zeta", two_by_two)
    with pytest.raises(fe.DanglingId):
        parse("(vid (h nope))", two_by_two)


# ------------------------------------------------------------ decorated grids


def test_vertical_identity_on_path(two_by_two):
    t = parse("(vid (h f00 f01))", two_by_two)
    grid = fe.eval_term_double(t, two_by_two)
    assert (grid.rows, grid.cols) == (0, 2)
    assert grid.is_identity
    assert grid == DecoratedGrid(0, 2, (), ((Seam("f00"), Seam("f01")),), (), "o00")


def test_interchange_orders_give_the_same_grid(two_by_two):
    cols_first = parse("(hcomp (vcomp gen:a gen:c) (vcomp gen:b gen:d))", two_by_two)
    rows_first = parse("(vcomp (hcomp gen:a gen:b) (hcomp gen:c gen:d))", two_by_two)
    g1 = fe.eval_term_double(cols_first, two_by_two)
    g2 = fe.eval_term_double(rows_first, two_by_two)
    assert g1 == g2
    assert g1.squares == (("a", "b"), ("c", "d"))
    assert fe.oracle_equal(cols_first, rows_first, two_by_two, 10_000) == "equal"


def test_bigon_under_square_sits_on_the_bottom_seam(two_by_two):
    grid = fe.eval_term_double(parse("(vcomp gen:a gen:beta)", two_by_two), two_by_two)
    assert grid == DecoratedGrid(
        1, 1, (("a",),),
        ((Seam("f00"),), (Seam("f10", ("beta",)),)),
        ((Seam("u00"), Seam("u01")),),
        "o00",
    )
    assert fe.grid_boundary(grid, two_by_two).bottom.cells == ("g10",)


def test_vertical_bigon_beside_square(two_by_two):
    grid = fe.eval_term_double(parse("(hcomp gen:a gen:delta)", two_by_two), two_by_two)
    assert grid.vseams == ((Seam("u00"), Seam("u01", ("delta",))),)
    assert fe.grid_boundary(grid, two_by_two).right.cells == ("w01",)


def test_interface_mismatch_names_the_node(two_by_two):
    t = parse("(hcomp gen:a gen:a)", two_by_two)
    with pytest.raises(fe.InterfaceMismatch) as err:
        fe.eval_term_double(t, two_by_two)
    assert err.value.node == "(hcomp gen:a gen:a)"
    with pytest.raises(fe.InterfaceMismatch):
        fe.term_boundary(t, two_by_two)


def test_unsupported_generator_shape():
    doc = double_doc("A", {"f": ("A", "A")}, {}, {"n": cell2(["f"], [], [], [], right="A", left="A", bottom="A")})
    g = cp.validate_double_computad(doc)
    with pytest.raises(fe.UnsupportedGeneratorShape):
        fe.eval_term_double(Gen("n"), g)


def test_point_identities_agree(two_by_two):
    h = fe.eval_term_double(HId(Path(Direction.V, (), "o00")), two_by_two)
    v = fe.eval_term_double(VId(Path(Direction.H, (), "o00")), two_by_two)
    assert h == v == DecoratedGrid(0, 0, (), ((),), (), "o00")


def test_format_grid_is_stable(two_by_two):
    grid = fe.eval_term_double(parse("(vcomp gen:a gen:beta)", two_by_two), two_by_two)
    assert fe.format_grid(grid, two_by_two) == (
        "grid 1x1 @o00\n"
        "  top    (h f00) @o00\n"
        "  left   (v u00) @o00\n"
        "  right  (v u01) @o01\n"
        "  bottom (h g10) @o10\n"
        "  row 0: a\n"
        "  hseam level 1 col 0: f10 ; beta\n"
    )


# ------------------------------------------------------------ layered diagrams


@pytest.fixture
def strings():
    return cp.validate_two_computad({
        "objects": ["P", "Q", "R"],
        "hcells": {"f": {"src": "P", "tgt": "Q"}, "g": {"src": "P", "tgt": "Q"},
                   "p": {"src": "Q", "tgt": "R"}, "q": {"src": "Q", "tgt": "R"}},
        "cells2": {"alpha": {"source": ["f"], "target": ["g"]},
                   "beta": {"source": ["p"], "target": ["q"]}},
    })


def test_single_generator_diagram(strings):
    d = fe.eval_term2(Gen("alpha"), strings)
    assert d.layers == (Layer(Path(Direction.H, (), "P"), "alpha", Path(Direction.H, (), "Q")),)


def test_disjoint_generators_interchange(strings):
    first = parse("(vcomp (hcomp gen:alpha (vid (h p))) (hcomp (vid (h g)) gen:beta))", strings)
    second = parse("(vcomp (hcomp (vid (h f)) gen:beta) (hcomp gen:alpha (vid (h q))))", strings)
    d1, d2 = fe.eval_term2(first, strings), fe.eval_term2(second, strings)
    assert d1 == d2
    assert [(len(x.left), x.gen) for x in d1.layers] == [(0, "alpha"), (1, "beta")]
    assert d1.layers[1].left.cells == ("g",)
    # the closure at the terms' own size already contains both
    assert fe.RewriteOracle(strings, 10_000, slack=0).equal(first, second) == "equal"
    assert fe.RewriteOracle(strings, 50).equal(first, second) == "exhausted"
    assert len(fe.interchange_class(strings, fe.diagram_steps(d1))) == 2


def test_identity_diagram(strings):
    d = fe.eval_term2(parse("(vid (h f p))", strings), strings)
    assert d.layers == () and d.source == d.target


def test_two_computad_interface_mismatch(strings):
    with pytest.raises(fe.InterfaceMismatch):
        fe.eval_term2(parse("(vcomp gen:alpha gen:alpha)", strings), strings)


def test_diagram_composition_matches_terms(strings):
    a, b = fe.eval_term2(Gen("alpha"), strings), fe.eval_term2(Gen("beta"), strings)
    assert fe.diagram_hcomp(strings, a, b) == fe.eval_term2(HComp(Gen("alpha"), Gen("beta")), strings)


# -------------------------------------------------------------------- oracle


def test_oracle_reflexive_and_boundary_invariant(two_by_two):
    a = Gen("a")
    assert fe.oracle_equal(a, a, two_by_two, budget=1) == "equal"
    assert fe.oracle_equal(a, Gen("b"), two_by_two) == "distinct"


def test_oracle_rejects_ill_typed_terms(two_by_two):
    with pytest.raises(fe.InterfaceMismatch):
        fe.oracle_equal(HComp(Gen("a"), Gen("a")), Gen("a"), two_by_two)


def test_oracle_separates_distinct_cells_with_equal_boundary():
    # two parallel squares: same boundary, never equal
    doc = double_doc("ABCD", {"f": ("A", "B"), "k": ("C", "D")}, {"h": ("A", "C"), "g": ("B", "D")},
                     {"s": cell2(["f"], ["g"], ["h"], ["k"]), "t": cell2(["f"], ["g"], ["h"], ["k"])})
    g = cp.validate_double_computad(doc)
    assert fe.oracle_equal(Gen("s"), Gen("t"), g) == "distinct"


def test_small_oracle_agreement(two_by_two):
    terms = fe.enumerate_terms(two_by_two, 2, fe.identity_leaves(two_by_two), max_extra=1)
    oracle = fe.RewriteOracle(two_by_two, 10_000)
    grids = {t: fe.eval_term_double(t, two_by_two) for t in terms}
    for t1, t2 in combinations(terms, 2):
        if fe.term_boundary(t1, two_by_two) != fe.term_boundary(t2, two_by_two):
            continue
        assert (grids[t1] == grids[t2]) == (oracle.equal(t1, t2) == "equal"), (t1, t2)


# ---------------------------------------------------------------- properties


@pytest.fixture(scope="module")
def term_pool():
    objs = [f"o{i}{j}" for i in range(3) for j in range(3)]
    h = {f"f{i}{j}": (f"o{i}{j}", f"o{i}{j + 1}") for i in range(3) for j in range(2)}
    v = {f"u{i}{j}": (f"o{i}{j}", f"o{i + 1}{j}") for i in range(2) for j in range(3)}
    h["g10"] = h["f10"]
    cells = {
        "a": cell2(["f00"], ["u01"], ["u00"], ["f10"]),
        "b": cell2(["f01"], ["u02"], ["u01"], ["f11"]),
        "c": cell2(["f10"], ["u11"], ["u10"], ["f20"]),
        "beta": cell2(["f10"], [], [], ["g10"], left="o10", right="o11"),
    }
    g = cp.validate_double_computad(double_doc(objs, h, v, cells))
    return g, fe.enumerate_terms(g, 3, fe.identity_leaves(g), max_extra=1)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_boundary_preservation(term_pool, data):
    g, terms = term_pool
    t = data.draw(st.sampled_from(terms))
    assert fe.grid_boundary(fe.eval_term_double(t, g), g) == fe.term_boundary(t, g)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rewrite_invariance(term_pool, data):
    g, terms = term_pool
    t = data.draw(st.sampled_from(terms))
    want = fe.eval_term_double(t, g)
    oracle = fe.RewriteOracle(g)
    for n in oracle.neighbours(t, fe.size(t) + 2):
        assert fe.eval_term_double(n, g) == want, fe.format_term(n)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_unit_laws(term_pool, data):
    g, terms = term_pool
    t = data.draw(st.sampled_from(terms))
    b = fe.term_boundary(t, g)
    want = fe.eval_term_double(t, g)
    for u in (HComp(HId(b.left), t), HComp(t, HId(b.right)), VComp(VId(b.top), t), VComp(t, VId(b.bottom))):
        assert fe.eval_term_double(u, g) == want


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 2), st.integers(1, 3))
def test_square_grids_keep_their_shape(seed, m, n):
    g = fe.random_double_graph(random.Random(seed), 2, 3)
    for arr in fe.composable_grids(g, m, n, limit=5):
        block = tuple(tuple(Gen(s) for s in row) for row in arr)
        for t in fe.composition_orders(block):
            grid = fe.eval_term_double(t, g)
            assert (grid.rows, grid.cols) == (m, n)
            assert grid.squares == arr
            assert not any(s.chain for lv in grid.hseams for s in lv)
            assert not any(s.chain for row in grid.vseams for s in row)


def test_composition_orders_count():
    block = ((Gen("a"), Gen("b")), (Gen("c"), Gen("d")))
    # two cuts at the top level, each splitting into two 1x2 or 2x1 halves
    assert len(fe.composition_orders(block)) == 2


def test_fuzz_is_deterministic():
    r1 = fe.fuzz_grid_coherence(seed=3, iters=4)
    r2 = fe.fuzz_grid_coherence(seed=3, iters=4)
    assert r1 == r2
    assert r1.graphs == 4 and r1.grids > 0 and not r1.failures
