import pytest
from hypothesis import given, settings, strategies as st

from weakdouble import finite_models as fm
from weakdouble.finite_models import cubical as cu
from weakdouble.finite_models.cubical import LabelledSquare, UNIT

ONE, TWO = "1", "(1 . 1)"


@pytest.fixture(scope="module")
def z2():
    return fm.MonoidOracle(fm.cyclic(2))


def sq(label, b=(ONE, ONE, ONE, TWO)):
    return LabelledSquare(label, b)


# --------------------------------------------------------------------- trees


def test_tree_helpers():
    assert [len(cu.unit_free_trees(0, n)) for n in range(1, 6)] == [1, 1, 2, 5, 14]
    assert cu.left_nested(3) == ((0, 1), 2)
    assert cu.leaves(((0, UNIT), 1)) == [0, 1]
    assert cu.depth(((0, 1), 2)) == 2
    assert cu.format_tree((0, (UNIT, 1))) == "(0 . (1 . 1))"
    with_unit, with_leaf = cu.insert_unit((0, 1), 1, 2)
    assert with_unit == (0, (UNIT, 1))
    assert with_leaf == (0, (1, 2))


# ------------------------------------------------------------- monoid oracle


def test_two_by_two_composite_is_the_sum(z2):
    a, b, c, d = 1, 0, 1, 1
    top, bottom = (TWO, ONE, ONE, ONE), (ONE, ONE, ONE, TWO)
    grid = ((sq(str(a), top), sq(str(b), top)), (sq(str(c), bottom), sq(str(d), bottom)))
    z = z2.grid_composite(grid, ((0, 1), (0, 1), (0, 1), (0, 1)))
    assert z.label == str((a + b + c + d) % 2)
    assert z.boundary == (f"({TWO} . {TWO})", TWO, TWO, f"({TWO} . {TWO})")


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4), st.sampled_from([0, 1, 2, 3, 4]))
def test_composite_label_is_order_independent(xs, pick):
    o = fm.MonoidOracle(fm.cyclic(3))
    grid = ((sq(str(xs[0])), sq(str(xs[1]))), (sq(str(xs[2]), (TWO, ONE, ONE, ONE)), sq(str(xs[3]), (TWO, ONE, ONE, ONE))))
    trees = [(0, 1), (0, 1), ((0, UNIT), 1), (UNIT, (0, 1)), ((0, 1), UNIT)]
    t = trees[pick]
    z = o.grid_composite(grid, (t, (0, 1), (0, 1), (0, 1)))
    assert z.label == str(sum(xs) % 3)


def test_grid_composite_validates_input(z2):
    with pytest.raises(ValueError):
        z2.grid_composite(((sq("0"), sq("0", (ONE, ONE, TWO, ONE))),), ((0, 1), 0, 0, (0, 1)))
    with pytest.raises(ValueError):
        z2.grid_composite(((sq("0"),),), ((0, 1), 0, 0, 0))
    with pytest.raises(fm.OracleOutOfRange):
        z2.grid_composite(((sq("0"),),), (cu.left_nested(1), 0, 0, ((((((((0, UNIT), UNIT), UNIT), UNIT), UNIT), UNIT), UNIT))))


def test_requesting_beyond_declared_bounds(z2):
    with pytest.raises(fm.OracleOutOfRange):
        fm.check_cubical_coherence(z2, max_rows=7)


def test_z2_is_coherent_but_untidy(z2):
    coh = fm.check_cubical_coherence(z2, 3, 3, 3)
    assert coh.ok, coh.to_text()
    tidy = fm.check_cubical_tidiness(z2)
    assert not tidy.ok
    details = {(e.law, e.witness, e.detail) for e in tidy.violations()}
    for which in "TBLR":
        assert (f"identity pasting bijection ({which})", (ONE, ONE, ONE, ONE), "not surjective: squares=1, pasted=2") in details


def test_trivial_monoid_passes_both():
    o = fm.MonoidOracle(fm.cyclic(1))
    assert fm.check_cubical_coherence(o, 3, 3, 3).ok
    assert fm.check_cubical_tidiness(o).ok


def test_perturbed_oracle_is_caught(z2):
    grid = ((sq("0"),),)
    bad = fm.PerturbedOracle(z2, grid, sq("1"))
    r = fm.check_cubical_coherence(bad, 2, 2, 2)
    assert not r.ok
    assert "any two ways of composing a grid agree" in r.laws() or \
        "identity insertion agrees with a unit in the bracketing" in r.laws()


def test_coherence_report_is_reproducible(z2):
    a = fm.check_cubical_coherence(z2, 2, 3, 2, seed=5)
    b = fm.check_cubical_coherence(z2, 2, 3, 2, seed=5)
    assert a.to_text() == b.to_text()
    assert any("bounded check" in h for h in a.header)


# ------------------------------------------------------------- tidier oracle


@pytest.mark.parametrize("name", fm.TIDIER_FIXTURES)
def test_tidier_fixture_oracles_pass(name):
    o = fm.TidierOracle(fm.fixtures()[name])
    assert fm.check_cubical_coherence(o, 3, 3, 3).ok
    assert fm.check_cubical_tidiness(o).ok
