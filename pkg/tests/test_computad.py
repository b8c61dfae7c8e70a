import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from weakdouble import computad as cp
from weakdouble.computad import Direction, Shape
from weakdouble.free_engine import random_double_graph

from conftest import cell2, double_doc


def kinds(err):
    return {(v.kind, v.cell) for v in err.value.violations}


# ------------------------------------------------------------ 2-computads


def test_empty_two_computad_is_valid():
    c = cp.validate_two_computad({})
    assert c.objects == () and not c.cells1 and not c.cells2


def test_loop_two_cell_is_valid():
    c = cp.validate_two_computad({
        "objects": ["P"], "hcells": {"f": {"src": "P", "tgt": "P"}},
        "cells2": {"alpha": {"source": ["f", "f"], "target": ["f"]}},
    })
    s, t = c.cells2["alpha"]
    assert s.cells == ("f", "f") and t.cells == ("f",)


def test_two_cell_with_mismatched_endpoints():
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_two_computad({
            "objects": ["P", "Q", "R"],
            "hcells": {"f": {"src": "P", "tgt": "Q"}, "g": {"src": "P", "tgt": "R"}},
            "cells2": {"alpha": {"source": ["f"], "target": ["g"]}},
        })
    assert kinds(err) == {("EndpointMismatch", "alpha")}


def test_all_violations_are_reported():
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_two_computad({
            "objects": ["P"],
            "hcells": {"f": {"src": "P", "tgt": "Z"}},
            "cells2": {"alpha": {"source": ["nope"], "target": []}},
        })
    assert ("DanglingId", "f") in kinds(err)
    assert ("DanglingId", "alpha") in kinds(err)


# -------------------------------------------------------- double computads


SQUARE = double_doc("ABCD", {"f": ("A", "B"), "k": ("C", "D")}, {"h": ("A", "C"), "g": ("B", "D")},
                    {"alpha": cell2(["f"], ["g"], ["h"], ["k"])})


def test_single_square_is_a_double_graph():
    c = cp.validate_double_computad(SQUARE)
    assert c.classify() == "double-graph"
    assert cp.boundary_shape(c, "alpha") == Shape(1, 1, 1, 1)


def test_corner_mismatch():
    doc = double_doc("ABCDE", {"f": ("A", "B"), "k": ("C", "D")}, {"h": ("A", "C"), "g": ("E", "D")},
                     {"alpha": cell2(["f"], ["g"], ["h"], ["k"])})
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_double_computad(doc)
    assert kinds(err) == {("CornerMismatch", "alpha")}
    assert "top end / right start" in str(err.value)


def test_general_shape_is_classified_general():
    doc = double_doc("ABCDEF", {"f1": ("A", "B"), "f2": ("B", "C"), "k1": ("D", "E"), "k2": ("E", "F")},
                     {"h": ("A", "D"), "g": ("C", "F")},
                     {"pin": cell2(["f1", "f2"], ["g"], ["h"], ["k1", "k2"])})
    c = cp.validate_double_computad(doc)
    assert cp.boundary_shape(c, "pin") == Shape(2, 1, 1, 2)
    assert c.classify() == "general"


def test_monogon_and_point_shapes():
    doc = double_doc("A", {"f": ("A", "A")}, {},
                     {"n": cell2(["f"], [], [], [], right="A", left="A", bottom="A"),
                      "pt": cell2([], [], [], [], top="A", right="A", left="A", bottom="A")})
    c = cp.validate_double_computad(doc)
    assert cp.boundary_shape(c, "n") == Shape(1, 0, 0, 0)
    assert cp.boundary_shape(c, "n").monogon_side == "N"
    assert cp.boundary_shape(c, "pt") == Shape(0, 0, 0, 0)
    assert c.classify() == "general"


def test_bigons_and_monogons_classification(two_by_two):
    assert two_by_two.classify() == "with-bigons"
    doc = double_doc("A", {"f": ("A", "A")}, {}, {"n": cell2(["f"], [], [], [], right="A", left="A", bottom="A")})
    assert cp.validate_double_computad(doc).classify() == "with-monogons"


def test_non_composable_path():
    doc = double_doc("ABCD", {"f": ("A", "B"), "f2": ("C", "D"), "k": ("C", "D")}, {"h": ("A", "C"), "g": ("B", "D")},
                     {"alpha": cell2(["f", "f2"], ["g"], ["h"], ["k"])})
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_double_computad(doc)
    assert ("NonComposablePath", "alpha") in kinds(err)


def test_empty_side_needs_anchor():
    doc = double_doc("AB", {"f": ("A", "B"), "g": ("A", "B")}, {}, {"beta": cell2(["f"], [], [], ["g"])})
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_double_computad(doc)
    assert kinds(err) == {("DanglingId", "beta")}


def test_malformed_cell_table_is_a_violation():
    doc = {"kind": "double-computad", "objects": ["A"], "hcells": {"f": ["A", "A"]}, "vcells": {}}
    with pytest.raises(cp.ValidationError) as err:
        cp.validate_double_computad(doc)
    assert kinds(err) == {("BadCell", "f")}


def test_shape_rejects_negative_entries():
    with pytest.raises(ValueError):
        Shape(1, -1, 0, 0)


def test_path_building():
    c = cp.validate_double_computad(SQUARE)
    assert c.path(Direction.H, ["f"]).anchor == "A"
    with pytest.raises(cp.ValidationError):
        c.path(Direction.H, [])
    with pytest.raises(cp.ValidationError):
        c.path(Direction.H, ["f", "k"])
    assert c.end(c.path(Direction.V, [], "B")) == "B"


# -------------------------------------------------------------------- dflat


def test_dflat_of_double_graph_is_isomorphic():
    c = cp.validate_double_computad(SQUARE)
    flat = cp.dflat(c)
    assert flat.graph.objects == c.objects
    b = flat.graph.boundary("alpha")
    assert [b.side(s).cells for s in cp.SIDES] == [("h[f]",), ("v[g]",), ("v[h]",), ("h[k]",)]
    assert flat.paths["h[f]"] == c.boundary("alpha").top


def test_dflat_of_bigon(two_by_two):
    flat = cp.dflat(two_by_two)
    b = flat.graph.boundary("beta")
    assert b.top.cells == ("h[f10]",) and b.bottom.cells == ("h[g10]",)
    assert b.left.cells == ("v[]@o10",) and b.right.cells == ("v[]@o11",)
    assert flat.paths["v[]@o10"] == cp.Path(Direction.V, (), "o10")
    assert flat.graph.vcells["v[]@o10"] == ("o10", "o10")


def test_dflat_of_general_cell():
    doc = double_doc("ABCDEF", {"f1": ("A", "B"), "f2": ("B", "C"), "k1": ("D", "E"), "k2": ("E", "F")},
                     {"h": ("A", "D"), "g": ("C", "F")},
                     {"pin": cell2(["f1", "f2"], ["g"], ["h"], ["k1", "k2"])})
    flat = cp.dflat(cp.validate_double_computad(doc))
    assert flat.graph.classify() == "double-graph"
    assert flat.graph.hcells["h[f1,f2]"] == ("A", "C")


# ---------------------------------------------------------------- properties


graphs = st.integers(min_value=0, max_value=10_000).map(lambda s: random_double_graph(random.Random(s)))


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_serialize_round_trip(g):
    text = cp.dumps(g)
    back = cp.loads(text)
    assert back == cp.validate_double_computad(json.loads(text))
    assert cp.dumps(back) == text


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_dflat_preserves_objects_and_cell_count(g):
    flat = cp.dflat(g)
    assert flat.graph.objects == g.objects
    assert set(flat.graph.cells2) == set(g.cells2)
    assert all(b.shape().is_square for b in flat.graph.cells2.values())


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_shape_agrees_with_path_lengths(g):
    for name, b in g.cells2.items():
        assert cp.boundary_shape(g, name).as_tuple() == tuple(len(b.side(s)) for s in cp.SIDES)


@settings(max_examples=30, deadline=None)
@given(graphs, st.sampled_from(["hop", "vop", "transpose"]))
def test_symmetries_are_involutions_and_stay_valid(g, op):
    once = cp.symmetry(g, op)
    cp.loads(cp.dumps(once))
    assert cp.symmetry(once, op) == g


def test_transpose_swaps_one_cell_counts(two_by_two):
    t = cp.symmetry(two_by_two, "transpose")
    assert (len(t.hcells), len(t.vcells)) == (len(two_by_two.vcells), len(two_by_two.hcells))
