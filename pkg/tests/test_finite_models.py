from itertools import product

import pytest

from weakdouble import finite_models as fm
from weakdouble.computad import ValidationError
from weakdouble.finite_models import Icon, ModelFunctor, Monoid


@pytest.fixture(scope="module")
def fx():
    return fm.fixtures()


NONCOMMUTATIVE = Monoid(("e", "a", "b"), (("e", "a", "b"), ("a", "a", "a"), ("b", "b", "b")))


# ------------------------------------------------------------------ fixtures


def test_terminal_is_all_singletons(fx):
    m = fx["terminal"]
    assert set(m.size().values()) == {1}


def test_pair_has_one_square_per_boundary(fx):
    m = fx["pair"]
    objs = m.objects
    # a boundary is a choice of the four corners
    assert len(m.of("sq")) == len(objs) ** 4
    assert all(len(m.with_bound("sq", m.bound(z))) == 1 for z in m.of("sq"))


def test_quintet_square_count(fx):
    m = fx["quintet-z2"]
    z2 = [0, 1]
    expected = sum(1 for f, g, h, k in product(z2, repeat=4) if (f + g) % 2 == (h + k) % 2)
    assert len(m.of("sq")) == expected == 8


def test_c_m_carriers(fx):
    m = fx["c-z2"]
    assert (len(m.objects), len(m.vcells), len(m.hcells), len(m.of("sq"))) == (2, 3, 2, 3)
    assert len(m.with_bound("vb", ("f", "f"))) == 2


@pytest.mark.parametrize("name", ["terminal", "pair", "quintet-z2", "c-trivial", "c-z2", "c-z3"])
def test_fixtures_pass_their_axioms(fx, name):
    r = fm.check_axioms(fx[name])
    assert r.ok, r.to_text()
    assert r.checked > 0


def test_model_json_round_trip(fx):
    for m in fx.values():
        text = fm.dumps_model(m)
        back = fm.loads_model(text)
        assert fm.dumps_model(back) == text
        assert back.tables == m.tables


# ------------------------------------------------------------------ mutation


def test_corrupted_interchange_entry_is_caught(fx):
    q = fx["quintet-z2"]
    one = "sq[h0,v0,v0,h0]"
    m = q.edited("sq_hcomp", (one, one), "sq[h0,v0,v1,h1]")
    r = fm.check_axioms(m)
    assert not r.ok
    assert "square composition interchange law" in r.laws()
    witness = [e for e in r.violations() if e.law == "square composition interchange law"]
    assert all(len(e.witness) == 4 for e in witness)


def test_report_is_sorted_and_deterministic(fx):
    q = fx["quintet-z2"]
    m = q.edited("sq_vcomp", ("sq[h0,v0,v0,h0]", "sq[h0,v1,v1,h0]"), "sq[h0,v0,v0,h0]")
    a, b = fm.check_axioms(m), fm.check_axioms(m)
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()
    assert a.violations() == sorted(a.violations())


@pytest.mark.parametrize("name", ["terminal", "pair", "quintet-z2", "c-z2"])
def test_transpose_compatibility(fx, name):
    m = fx[name]
    t = fm.symmetry_model(m, "transpose")
    assert fm.check_axioms(t).ok == fm.check_axioms(m).ok
    assert fm.dumps_model(fm.symmetry_model(t, "transpose")) == fm.dumps_model(m)


def test_transpose_compatibility_on_a_failing_model(fx):
    q = fx["quintet-z2"]
    m = q.edited("sq_hcomp", ("sq[h0,v0,v0,h0]", "sq[h0,v0,v0,h0]"), "sq[h0,v0,v1,h1]")
    assert not fm.check_axioms(fm.symmetry_model(m, "transpose")).ok


# ------------------------------------------------------------------ tidiness


def test_c_z2_is_untidy_with_exact_cardinalities(fx):
    r = fm.check_tidiness(fx["c-z2"])
    assert not r.ok
    [entry] = r.violations()
    assert entry.witness == ("f", "f", "1A", "1B")
    assert entry.detail == "bigons=2, squares=1"


@pytest.mark.parametrize("name, tidy", [("c-trivial", True), ("c-z2", False), ("c-z3", False)])
def test_tidiness_fails_exactly_when_m_is_nontrivial(fx, name, tidy):
    assert fm.check_tidiness(fx[name]).ok is tidy


@pytest.mark.parametrize("name", fm.TIDIER_FIXTURES)
def test_derived_double_bicategories_are_tidy(fx, name):
    d = fm.to_double_bicategory(fx[name])
    assert fm.check_double_bicategory(d).ok
    assert fm.check_tidiness(d).ok


# ---------------------------------------------------------------- conversion


def test_c_z2_to_tidier_keeps_one_bigon(fx):
    conv = fm.convert(fx["c-z2"], "tidier")
    t = conv.model
    assert fm.check_axioms(t).ok
    derived = fm.to_double_bicategory(t)
    assert len(derived.with_bound("vb", ("f", "f"))) == 1
    assert any("not tidy" in n for n in conv.notes)


def test_preserving_bigons_raises_on_untidy(fx):
    with pytest.raises(fm.NotTidy):
        fm.convert(fx["c-z2"], "tidier", preserve_bigons=True)
    fm.convert(fx["c-trivial"], "tidier", preserve_bigons=True)


def test_terminal_to_monogon_has_singleton_families(fx):
    m = fm.convert(fx["terminal"], "monogon").model
    assert all(len(m.of(s)) == 1 for s in ("mN", "mE", "mS", "mW"))
    assert fm.check_axioms(m).ok


@pytest.mark.parametrize("name", fm.TIDIER_FIXTURES)
@pytest.mark.parametrize("via", ["double-bicat", "monogon"])
def test_roundtrips_are_isomorphic(fx, name, via):
    m = fx[name]
    there = fm.convert(m, via).model
    assert fm.check_axioms(there).ok
    back = fm.convert(there, "tidier").model
    iso = fm.find_isomorphism(m, back)
    assert iso is not None
    assert fm.check_functor(iso).ok


def test_weak_free_needs_a_computad(fx):
    with pytest.raises(fm.ConversionError):
        fm.convert(fx["terminal"], "weak-free")
    with pytest.raises(fm.ConversionError):
        fm.convert(fx["terminal"], "nowhere")


def test_monogon_mutation_is_caught(fx):
    m = fm.convert(fx["pair"], "monogon").model
    args, r = sorted(m.tables["quad"].items())[0]
    other = [x for x in m.of(m.sort(r)) if x != r][0]
    assert not fm.check_axioms(m.edited("quad", args, other)).ok


# -------------------------------------------------------------- isomorphism


def test_isomorphism_search_finds_relabellings(fx):
    m = fx["quintet-z2"]
    doc = fm.model_to_dict(m)
    renamed = fm.dumps_model(m).replace("sq[", "square[")
    other = fm.loads_model(renamed)
    assert doc != fm.model_to_dict(other)
    assert fm.find_isomorphism(m, other) is not None


def test_non_isomorphic_models(fx):
    assert fm.find_isomorphism(fx["pair"], fx["quintet-z2"]) is None
    assert fm.find_isomorphism(fx["terminal"], fx["c-trivial"]) is None


# -------------------------------------------------------------- equivalence


def test_identity_functor_is_an_equivalence(fx):
    r = fm.check_equivalence(fm.identity_functor(fx["terminal"]))
    assert r.ok, r.to_text()


def test_collapsing_objects_is_not_an_equivalence(fx):
    p, t = fx["pair"], fx["terminal"]
    cells = {a: "*" for a in p.objects}
    cells.update({f: "1h" for f in p.hcells})
    cells.update({u: "1v" for u in p.vcells})
    cells.update({z: "1sq" for z in p.of("sq")})
    F = ModelFunctor(p, t, cells)
    assert fm.check_functor(F).ok
    r = fm.check_equivalence(F)
    assert "bijective on 0-cells" in r.laws()


def test_strictification_inclusion_is_an_equivalence():
    from weakdouble.weak_free import fixture_graphs
    r = fm.check_equivalence(fixture_graphs()["single-square"], path_bound=2)
    assert r.ok, r.to_text()


# --------------------------------------------------------------------- icons


def test_identity_icon(fx):
    r = fm.check_icon(fm.identity_icon(fm.identity_functor(fx["c-z2"])))
    assert r.ok, r.to_text()


def test_icon_with_wrong_component_boundary(fx):
    m = fx["c-z2"]
    F = fm.identity_functor(m)
    theta = fm.identity_icon(F)
    theta.sigma_h["1A"] = "id[1B]"
    r = fm.check_icon(theta)
    assert r.laws() == ["component boundaries"]


def test_icon_on_the_nontrivial_bigon_of_c_z2(fx):
    # the bigons act trivially on the identity square of f, so naturality holds
    m = fx["c-z2"]
    F = fm.identity_functor(m)
    theta = fm.identity_icon(F)
    theta.sigma_v["f"] = "m[1]"
    r = fm.check_icon(theta)
    assert r.ok, r.to_text()


def test_icon_naturality_can_fail():
    m = fm.c_m(NONCOMMUTATIVE)
    assert fm.check_axioms(m).ok
    F = fm.identity_functor(m)
    theta = fm.identity_icon(F)
    theta.sigma_v["f"] = "m[a]"
    r = fm.check_icon(theta)
    assert r.laws() == ["icon naturality"]
    assert any(e.witness == ("m[b]",) for e in r.violations())


def test_icons_need_a_double_bicategory(fx):
    F = fm.identity_functor(fx["terminal"])
    r = fm.check_icon(Icon(F, F, {}, {}))
    assert r.laws() == ["icon setting"]


# ------------------------------------------------------------------- monoids


def test_monoid_validation():
    with pytest.raises(ValidationError):
        Monoid(("e", "a"), (("e", "a"), ("a", "x")))
    assert fm.named_monoid("z3").times("1", "2") == "0"
    assert not NONCOMMUTATIVE.is_commutative()


def test_counterexample_dispatch():
    assert fm.counterexample("double-bicat", fm.cyclic(2)).kind == "double-bicat"
    assert isinstance(fm.counterexample("cubical", fm.cyclic(2)), fm.MonoidOracle)
    with pytest.raises(fm.NonCommutativeMonoid):
        fm.counterexample("cubical", NONCOMMUTATIVE)
    with pytest.raises(ValueError):
        fm.counterexample("globular", fm.cyclic(2))
