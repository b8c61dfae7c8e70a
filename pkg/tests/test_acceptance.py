"""Acceptance criteria 1-9. Each test prints one PASS/FAIL line."""

import time
from collections import Counter
from itertools import product

from weakdouble import finite_models as fm
from weakdouble import free_engine as fe
from weakdouble import weak_free as wf
from weakdouble.cli import main
from weakdouble.computad import Boundary, Direction, DoubleComputad, Path
from weakdouble.weak_free import Leaf, Unit

H, V = Direction.H, Direction.V


def loop_graph():
    """One object, loops f and u, two parallel squares, one bigon each way."""
    p = lambda d, cells: Path(d, tuple(cells), "X")  # noqa: E731
    square = Boundary(p(H, "f"), p(V, "u"), p(V, "u"), p(H, "f"))
    return DoubleComputad(("X",), {"f": ("X", "X")}, {"u": ("X", "X")}, {
        "a": square,
        "c": square,
        "b": Boundary(p(H, "f"), p(V, ""), p(V, ""), p(H, "f")),
        "d": Boundary(p(H, ""), p(V, "u"), p(V, "u"), p(H, "")),
    })


# ------------------------------------------------------------------ 1


def test_normal_forms_agree_with_the_rewrite_oracle(verdict):
    g = loop_graph()
    start = time.perf_counter()
    terms = fe.enumerate_terms(g, 4)
    grids = {t: fe.eval_term_double(t, g) for t in terms}
    oracle = fe.RewriteOracle(g, budget=10_000)
    answers, mismatches = Counter(), []
    for i, t1 in enumerate(terms):
        for t2 in terms[i:]:
            r = oracle.equal(t1, t2)
            answers[r] += 1
            if (grids[t1] == grids[t2]) != (r == "equal"):
                mismatches.append((fe.format_term(t1), fe.format_term(t2), r))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300
    verdict(1, "normal forms agree with the rewrite oracle", ok,
            f"{len(terms)} terms, {sum(answers.values())} pairs, "
            f"{answers['equal']} equal, {answers['distinct']} distinct, "
            f"{answers['exhausted']} exhausted, {elapsed:.0f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed < 300


# ------------------------------------------------------------------ 2


def test_grid_coherence_on_random_graphs(verdict):
    start = time.perf_counter()
    res = fe.fuzz_grid_coherence(seed=2024, iters=100, shapes=((2, 2), (2, 3)))
    elapsed = time.perf_counter() - start
    ok = not res.failures and res.grids > 0 and elapsed < 60
    verdict(2, "grid coherence", ok,
            f"{res.graphs} graphs, {res.grids} grids, {res.terms} terms, {elapsed:.1f}s")
    assert not res.failures, res.failures[:5]
    assert res.grids > 0 and elapsed < 60


# ------------------------------------------------------------------ 3


def one_cells(g, d):
    return [(x, *g.table1(d)[x]) for x in sorted(g.table1(d))]


def composable(cells, n):
    """All length-n composable sequences of (cell, source, target) triples."""
    return [seq for seq in product(cells, repeat=n)
            if all(seq[i][2] == seq[i + 1][1] for i in range(n - 1))]


def coherence_pool(w, d):
    """Associators, unitors and representability cells over single 1-cells."""
    g, leaves = w.g, one_cells(w.g, d)
    pool = []
    for (x, _, _), (y, _, _) in composable(leaves, 2):
        pair = (Leaf(x, d), Leaf(y, d))
        pool += [w.representability_cell(d, o, pair) for o in ("compose", "decompose")]
    for (x, _, _), (y, _, _), (z, _, _) in composable(leaves, 3):
        pool.append(w.associator(Leaf(x, d), Leaf(y, d), Leaf(z, d)))
    for x, _, _ in leaves:
        pool += [w.left_unitor(Leaf(x, d)), w.right_unitor(Leaf(x, d))]
    for a in sorted(g.objects):
        pool += [w.representability_cell(d, o, obj=a) for o in ("compose", "decompose")]
    return pool


def unit_or_leaf(g, d):
    """Single 1-cells and units, each with its ends."""
    out = [(Leaf(x, d), *g.table1(d)[x]) for x in sorted(g.table1(d))]
    return out + [(Unit(a, d), a, a) for a in sorted(g.objects)]


def test_coherence_theorem_on_fixture_graphs(verdict):
    start = time.perf_counter()
    pentagons = triangles = composites = 0
    failures = []
    for name, g in wf.fixture_graphs().items():
        w = wf.WeakFree(g)
        for d in (H, V):
            trees = unit_or_leaf(g, d)
            for quad in composable(trees, 4):
                p1, p2 = wf.pentagon_composites(w, *(t for t, _, _ in quad))
                pentagons += 1
                if p1 != p2 or not p1.is_coherence:
                    failures.append(f"pentagon {name} {[wf.format_tree(t) for t, _, _ in quad]}")
            for pair in composable(trees, 2):
                t1, t2 = wf.triangle_composites(w, *(t for t, _, _ in pair))
                triangles += 1
                if t1 != t2 or not t1.is_coherence:
                    failures.append(f"triangle {name} {[wf.format_tree(t) for t, _, _ in pair]}")
        for d in (H, V):
            pool = coherence_pool(w, d)
            for a, b in product(pool, repeat=2):
                for along in (H, V):
                    try:
                        c = w.compose(a, b, along)
                    except (wf.WeakFreeError, fe.EngineError):
                        continue
                    composites += 1
                    if not c.is_coherence or c != w.coherence_cell(c.boundary):
                        failures.append(f"composite {name} along {along.value}")
    elapsed = time.perf_counter() - start
    ok = not failures and pentagons and triangles and composites and elapsed < 30
    verdict(3, "pentagon, triangle and closure of coherence cells", bool(ok),
            f"{pentagons} pentagons, {triangles} triangles, {composites} composites, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert pentagons and triangles and composites and elapsed < 30


# ------------------------------------------------------------------ 4


def test_tidiness_separation(verdict):
    m = fm.counterexample("double-bicat", fm.cyclic(2))
    axioms, tidy = fm.check_axioms(m), fm.check_tidiness(m)
    witnesses = [(e.witness, e.detail) for e in tidy.violations()]
    trivial = fm.counterexample("double-bicat", fm.cyclic(1))
    ok = (axioms.ok and witnesses == [(("f", "f", "1A", "1B"), "bigons=2, squares=1")]
          and fm.check_axioms(trivial).ok and fm.check_tidiness(trivial).ok)
    verdict(4, "tidiness separation", ok, "; ".join(f"{' '.join(w)}: {d}" for w, d in witnesses))
    assert ok


# ------------------------------------------------------------------ 5


def test_cubical_separation(verdict):
    o = fm.counterexample("cubical", fm.cyclic(2))
    coherence, tidy = fm.check_cubical_coherence(o, 3, 3, 3), fm.check_cubical_tidiness(o)
    details = {e.detail for e in tidy.violations()}
    trivial = fm.counterexample("cubical", fm.cyclic(1))
    ok = (coherence.ok and not tidy.ok and details == {"not surjective: squares=1, pasted=2"}
          and fm.check_cubical_coherence(trivial, 3, 3, 3).ok and fm.check_cubical_tidiness(trivial).ok)
    verdict(5, "cubical separation", ok, f"{coherence.checked} coherence instances, {', '.join(sorted(details))}")
    assert ok


# ------------------------------------------------------------------ 6


def test_equivalence_roundtrips(verdict):
    start = time.perf_counter()
    found = []
    for name in fm.TIDIER_FIXTURES:
        m = fm.fixtures()[name]
        for via in ("double-bicat", "monogon"):
            back = fm.convert(fm.convert(m, via).model, "tidier").model
            iso = fm.find_isomorphism(m, back)
            found.append(iso is not None and fm.check_functor(iso).ok)
    elapsed = time.perf_counter() - start
    ok = all(found) and elapsed < 120
    verdict(6, "equivalence roundtrips", ok, f"{sum(found)}/{len(found)} isomorphic, {elapsed:.1f}s")
    assert ok


# ------------------------------------------------------------------ 7


def test_monogon_axioms(verdict):
    counts = []
    for name in fm.TIDIER_FIXTURES:
        r = fm.check_axioms(fm.convert(fm.fixtures()[name], "monogon").model)
        counts.append((name, r.checked, len(r.violations())))
    ok = all(v == 0 for _, _, v in counts)
    verdict(7, "monogon axioms", ok, ", ".join(f"{n}: {c} instances, {v} violations" for n, c, v in counts))
    assert ok


# ------------------------------------------------------------------ 8


def test_strictification_is_an_equivalence(verdict):
    reports = {name: wf.check_strictification(g, bound=3) for name, g in wf.fixture_graphs().items()}
    ok = all(r.ok for r in reports.values())
    verdict(8, "strictification", ok, ", ".join(
        f"{n}: {r.paths_checked} paths, {r.boundaries_checked} boundaries" for n, r in reports.items()))
    for r in reports.values():
        assert r.ok, r.failures[:5]


# ------------------------------------------------------------------ 9


def cli_runs(tmp_path):
    """Every verb, with fixed seeds."""
    model = tmp_path / "cZ2.model"
    graph = tmp_path / "bigons.json"
    t1, t2 = tmp_path / "t1", tmp_path / "t2"
    t1.write_text("(vcomp gen:beta gen:alpha2)")
    t2.write_text("(vcomp gen:beta (vcomp (vid (h g)) gen:alpha2))")
    return [
        ["fixtures", "c-z2", "-o", model],
        ["fixtures", "bigons", "-o", graph],
        ["fixtures"],
        ["validate", graph],
        ["check", "--presentation", "double-bicat", model],
        ["check", model, "--format", "json"],
        ["convert", "--to", "tidier", model],
        ["convert", "--to", "monogon", model],
        ["compose", graph, t1, t2],
        ["coherence-fuzz", "--grid", "2x2", "--seed", "7", "--iters", "20"],
        ["counterexample", "double-bicat", "--monoid", "z2"],
        ["counterexample", "cubical", "--monoid", "z2", "--seed", "3"],
        ["equivalence", model],
        ["equivalence", graph, "--path-bound", "2"],
    ]


def test_determinism(verdict, tmp_path, capsys):
    def capture():
        outs = []
        for argv in cli_runs(tmp_path):
            code = main([str(a) for a in argv])
            out, err = capsys.readouterr()
            outs.append((code, out, err))
        g = loop_graph()
        outs.append(fm.check_axioms(fm.fixtures()["quintet-z2"]).to_text())
        outs.append(fm.check_cubical_coherence(fm.MonoidOracle(fm.cyclic(2)), 2, 3, 2, seed=5).to_text())
        outs.append(repr(fe.fuzz_grid_coherence(7, 5)))
        outs.append(repr(wf.check_strictification(wf.fixture_graphs()["bigons"], 2)))
        outs.append([fe.format_term(t) for t in fe.enumerate_terms(g, 2)])
        return outs

    first, second = capture(), capture()
    same = sum(a == b for a, b in zip(first, second))
    ok = first == second
    verdict(9, "determinism", ok, f"{same}/{len(first)} outputs byte-identical")
    assert ok
