from itertools import product

import pytest

from weakdouble import computad as cp
from weakdouble import free_engine as fe
from weakdouble import weak_free as wf
from weakdouble.computad import Direction, Path, Shape
from weakdouble.weak_free import Leaf, Node, Unit, WeakBoundary

H, V = Direction.H, Direction.V


@pytest.fixture(scope="module")
def graphs():
    return wf.fixture_graphs()


@pytest.fixture
def loop(graphs):
    return wf.WeakFree(graphs["loop-square"])


def f_(x="f"):
    return Leaf(x, H)


# ------------------------------------------------------------ bracket trees


def test_flatten_erases_units_and_brackets():
    t = Node(Node(Unit("X", H), f_()), Node(f_(), Unit("X", H)))
    assert wf.flatten(t) == ("f", "f")
    assert wf.format_tree(t) == "((1@X . f) . (f . 1@X))"


def test_tree_ends_check_composability(graphs):
    g = graphs["single-square"]
    assert wf.tree_ends(g, Node(Leaf("f", H), Unit("B", H))) == ("A", "B")
    with pytest.raises(wf.NonComposableTrees):
        wf.tree_ends(g, Node(Leaf("f", H), Leaf("k", H)))
    with pytest.raises(wf.NonComposableTrees):
        wf.tree_ends(g, Node(Leaf("f", H), Leaf("h", V)))


def test_bracketings_count_catalan(graphs):
    g = graphs["loop-square"]
    for n, catalan in ((1, 1), (2, 1), (3, 2), (4, 5)):
        p = Path(H, ("f",) * n, "X")
        assert len(wf.bracketings(g, p)) == catalan
        assert all(wf.flatten(t) == p.cells for t in wf.bracketings(g, p))


# ---------------------------------------------------------- coherence cells


def test_associator_cell(loop):
    f = f_()
    top, bottom = Node(Node(f, f), f), Node(f, Node(f, f))
    c = loop.coherence_cell(WeakBoundary((top,), (), (), (bottom,), "X"))
    assert c.is_coherence
    assert c.core == fe.grid_vid(Path(H, ("f", "f", "f"), "X"))
    # unit-bordered sides flatten to the empty path too
    d = loop.coherence_cell(WeakBoundary((top,), (Unit("X", V),), (Unit("X", V),), (bottom,), "X"))
    assert d.core == c.core


def test_left_unitor_cell(loop):
    c = loop.coherence_cell(WeakBoundary((Node(Unit("X", H), f_()),), (), (), (f_(),), "X"))
    assert c == loop.left_unitor(f_())


def test_not_a_coherence_boundary(graphs):
    g = graphs["bigons"]
    w = wf.WeakFree(g)
    with pytest.raises(wf.NotCoherenceBoundary):
        w.coherence_cell(WeakBoundary((Leaf("f", H),), (), (), (Leaf("g", H),), "A"))
    with pytest.raises(wf.NotCoherenceBoundary):
        w.coherence_cell(WeakBoundary((Leaf("f", H),), (Leaf("v", V),), (Leaf("h", V),), (Leaf("k", H),), "A"))


def test_representability_cells(loop):
    f = f_()
    comp = loop.representability_cell(H, "compose", (f, f))
    assert comp.boundary.shape == Shape(2, 0, 0, 1)
    assert comp.boundary.bottom == (Node(f, f),)
    unit = loop.representability_cell(H, "compose", obj="X")
    assert unit.boundary.shape == Shape(0, 0, 0, 1)
    assert unit.boundary.bottom == (Unit("X", H),)
    vert = loop.representability_cell(V, "decompose", (Leaf("u", V), Leaf("u", V)))
    assert vert.boundary.shape == Shape(0, 2, 1, 0)


def test_representability_cells_are_inverse(loop):
    f = f_()
    for d, pair in ((H, (f, f)), (V, (Leaf("u", V), Leaf("u", V)))):
        comp = loop.representability_cell(d, "compose", pair)
        dec = loop.representability_cell(d, "decompose", pair)
        across = d.other
        there = loop.compose(comp, dec, across)
        back = loop.compose(dec, comp, across)
        if d is H:
            assert there == loop.identity_v(pair, "X")
            assert back == loop.identity_v((Node(*pair),), "X")
        else:
            assert there == loop.identity_h(pair, "X")
            assert back == loop.identity_h((Node(*pair),), "X")


def test_representability_rejects_non_composable(graphs):
    w = wf.WeakFree(graphs["single-square"])
    with pytest.raises(wf.NonComposableTrees):
        w.representability_cell(H, "compose", (Leaf("f", H), Leaf("k", H)))
    with pytest.raises(wf.NonComposableTrees):
        w.representability_cell(H, "compose", obj="nowhere")


# -------------------------------------------------------------- composition


def test_bracket_interface_must_match_tree_for_tree(loop):
    f = f_()
    a = loop.coherence_cell(WeakBoundary((f, f), (), (), (Node(f, f),), "X"))
    b = loop.coherence_cell(WeakBoundary((f, f), (), (), (f, f), "X"))
    with pytest.raises(wf.BracketInterfaceMismatch):
        loop.vcomp(a, b)


def test_pentagon_and_triangle(loop):
    f = f_()
    p1, p2 = wf.pentagon_composites(loop, f, f, f, f)
    assert p1 == p2 and p1.is_coherence
    assert p1.boundary.top == (Node(f, Node(f, Node(f, f))),)
    assert p1.boundary.bottom == (Node(Node(Node(f, f), f), f),)
    t1, t2 = wf.triangle_composites(loop, f, f)
    assert t1 == t2 and t1.is_coherence


def test_pentagon_over_vertical_trees(loop):
    u = Leaf("u", V)
    p1, p2 = wf.pentagon_composites(loop, u, u, u, u)
    assert p1 == p2


def test_generator_composed_with_coherence(graphs):
    g = graphs["single-square"]
    w = wf.WeakFree(g)
    alpha = w.generator("alpha")
    # rebracket the top from f to (f . 1@B) and paste on top
    c = w.coherence_cell(WeakBoundary((Node(Leaf("f", H), Unit("B", H)),), (), (), (Leaf("f", H),), "A"))
    pasted = w.vcomp(c, alpha)
    assert pasted.core == fe.grid_generator(g, "alpha")
    assert not pasted.is_coherence


# ---------------------------------------------------------- strictification


def test_strictify(loop, graphs):
    f = f_()
    c = loop.associator(f, f, f)
    assert loop.strictify(c).core.is_identity
    s = loop.strictify(loop.generator("sigma"))
    assert s.core == fe.grid_generator(graphs["loop-square"], "sigma")
    p1, _ = wf.pentagon_composites(loop, f, f, f, f)
    assert loop.strictify(p1).core == fe.grid_vid(Path(H, ("f",) * 4, "X"))


def test_strictify_is_a_homomorphism(graphs):
    g = graphs["bigons"]
    w = wf.WeakFree(g)
    a, beta = w.generator("alpha"), w.generator("beta")
    both = w.vcomp(beta, w.generator("alpha2"))
    s = w.strictify(both)
    assert s.core == fe.grid_vcomp(w.strictify(beta).core, w.strictify(w.generator("alpha2")).core, g)
    assert s.boundary == fe.grid_boundary(s.core, g)
    assert w.strictify(a).boundary == g.boundary("alpha")


def test_make_cell_rejects_wrong_flattening(graphs):
    g = graphs["single-square"]
    w = wf.WeakFree(g)
    core = fe.grid_generator(g, "alpha")
    bad = WeakBoundary((Leaf("f", H),), (Leaf("v", V),), (Leaf("h", V),), (), "A")
    with pytest.raises((wf.BracketInterfaceMismatch, wf.NonComposableTrees)):
        w.make_cell(core, bad)


@pytest.mark.parametrize("name", ["single-square", "loop-square", "bigons"])
def test_strictification_conditions_small_bound(graphs, name):
    r = wf.check_strictification(graphs[name], bound=2)
    assert r.ok, r.failures
    assert r.paths_checked > 0 and r.boundaries_checked > 0


def test_grids_with_boundary_counts(graphs):
    g = graphs["bigons"]
    b = g.boundary("alpha")
    # alpha itself; and the bigon-decorated lifts of alpha2 do not reach f/v
    grids = wf.grids_with_boundary(g, b)
    assert [x.squares for x in grids] == [(("alpha",),)]
    b2 = cp.Boundary(g.path(H, ["f"]), g.path(V, ["w"]), g.path(V, ["h"]), g.path(H, ["k"]))
    found = {(x.squares, x.hseams[0][0].chain, x.vseams[0][1].chain) for x in wf.grids_with_boundary(g, b2)}
    assert found == {((("alpha",),), (), ("delta",)), ((("alpha2",),), ("beta",), ())}


# ------------------------------------------------------------------ quintets


@pytest.fixture
def strings():
    return cp.validate_two_computad({
        "objects": ["P", "Q", "R"],
        "hcells": {"f": {"src": "P", "tgt": "Q"}, "g": {"src": "P", "tgt": "Q"},
                   "p": {"src": "Q", "tgt": "R"}, "q": {"src": "Q", "tgt": "R"}},
        "cells2": {"alpha": {"source": ["f"], "target": ["g"]},
                   "beta": {"source": ["p"], "target": ["q"]}},
    })


def test_identity_quintet(strings):
    d = fe.identity_diagram(strings.path(H, ["f"]))
    q = wf.quintet_cell(strings, d, Shape(1, 0, 1, 0))
    assert q.top.cells == ("f",) and q.left.cells == ("f",)
    assert not q.right.cells and not q.bottom.cells


def test_bigon_quintet(strings):
    q = wf.quintet_cell(strings, fe.eval_term2(fe.Gen("alpha"), strings), Shape(1, 0, 0, 1))
    assert (q.top.cells, q.bottom.cells) == (("f",), ("g",))
    with pytest.raises(wf.SplitMismatch):
        wf.quintet_cell(strings, q.diagram, Shape(1, 1, 0, 1))


def test_quintet_composition_agrees_with_diagrams(strings):
    qa = wf.quintet_cell(strings, fe.eval_term2(fe.Gen("alpha"), strings), Shape(1, 0, 0, 1))
    qb = wf.quintet_cell(strings, fe.eval_term2(fe.Gen("beta"), strings), Shape(1, 0, 0, 1))
    q = wf.quintet_hcomp(strings, qa, qb)
    assert q.diagram == fe.eval_term2(fe.HComp(fe.Gen("alpha"), fe.Gen("beta")), strings)
    assert (q.top.cells, q.bottom.cells) == (("f", "p"), ("g", "q"))
    qi = wf.quintet_cell(strings, fe.identity_diagram(strings.path(H, ["g"])), Shape(1, 0, 0, 1))
    assert wf.quintet_vcomp(strings, qa, qi).diagram == qa.diagram


# ------------------------------------------------------------------ symmetry


@pytest.mark.parametrize("op", ["hop", "vop", "transpose"])
def test_cell_symmetry_is_an_involution(graphs, op):
    for name, g in graphs.items():
        w = wf.WeakFree(g)
        g2 = cp.symmetry(g, op)
        w2 = wf.WeakFree(g2)
        cells = [w.generator(x) for x in sorted(g.cells2)]
        f = next(iter(sorted(g.hcells)))
        cells.append(w.identity_on(Leaf(f, H)))
        for c in cells:
            once = wf.cell_symmetry(c, g, op)
            w2.make_cell(once.core, once.boundary)
            assert wf.cell_symmetry(once, g2, op) == c


def test_transpose_of_pentagon_is_the_vertical_pentagon(loop):
    p1, _ = wf.pentagon_composites(loop, f_(), f_(), f_(), f_())
    t = wf.cell_symmetry(p1, loop.g, "transpose")
    fv = Leaf("f", V)
    q1, q2 = wf.pentagon_composites(wf.WeakFree(cp.symmetry(loop.g, "transpose")), fv, fv, fv, fv)
    assert t == q1 == q2


def test_composites_of_coherence_cells_are_coherence(loop):
    f = f_()
    trees = wf.bracketings(loop.g, Path(H, ("f",) * 3, "X"), max_units=1)
    cells = [loop._bigon(s, t) for s, t in product(trees, repeat=2)]
    for a, b in product(cells[:12], repeat=2):
        if a.boundary.bottom == b.boundary.top:
            assert loop.vcomp(a, b).is_coherence
    assert f in wf.bracketings(loop.g, Path(H, ("f",), "X"))
