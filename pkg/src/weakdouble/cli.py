"""Command-line workbench.

Exit codes: 0 when every check passes, 1 when a violation or inequality
was found (the report is printed), 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import computad as cp
from . import free_engine as fe
from .finite_models import (
    KINDS, TARGETS, ConversionError, FiniteModel, Monoid, NonCommutativeMonoid, NotTidy, OracleOutOfRange,
    Report, check_axioms, check_cubical_coherence, check_cubical_tidiness, check_equivalence, check_tidiness,
    convert, counterexample, dumps_model, find_isomorphism, fixtures, loads_monoid, model_from_dict, named_monoid,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything wrong with the command line or the input files."""


# ------------------------------------------------------------------ inputs


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _validation(path: str, err: cp.ValidationError) -> InputError:
    lines = [f"{path}: {len(err.violations)} validation problem(s)"]
    lines += [f"  {v.kind} {v.cell}: {v.detail}" for v in err.violations]
    return InputError("\n".join(lines))


def load_any(path: str) -> FiniteModel | cp.TwoComputad | cp.DoubleComputad:
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        if doc.get("kind") == "model":
            return model_from_dict(doc)
        if doc.get("kind") == "weak-free":
            return cp.validate_double_computad(doc.get("presentation") or {})
        return cp.loads(json.dumps(doc))
    except cp.ValidationError as err:
        raise _validation(path, err) from None


def load_model(path: str) -> FiniteModel:
    x = load_any(path)
    if not isinstance(x, FiniteModel):
        raise InputError(f"{path}: expected a model document (kind \"model\")")
    return x


def load_monoid(spec: str) -> Monoid:
    if spec in ("trivial", "z2", "z3"):
        return named_monoid(spec)
    doc = _read_json(spec)
    try:
        return loads_monoid(json.dumps(doc))
    except cp.ValidationError as err:
        raise _validation(spec, err) from None


def parse_grid(text: str) -> tuple[int, int]:
    try:
        r, c = text.lower().split("x")
        rows, cols = int(r), int(c)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RxC, e.g. 2x3, not {text!r}") from None
    if rows < 1 or cols < 1:
        raise argparse.ArgumentTypeError("grid dimensions must be positive")
    return rows, cols


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, not {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return n


# ----------------------------------------------------------------- output


class Out:
    def __init__(self, args: argparse.Namespace):
        self.json = getattr(args, "format", "text") == "json"
        self.path = getattr(args, "output", None)

    def report(self, r: Report) -> int:
        sys.stdout.write(r.to_json() if self.json else r.to_text())
        return EXIT_OK if r.ok else EXIT_FAIL

    def document(self, text: str) -> None:
        if self.path:
            Path(self.path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)


# ------------------------------------------------------------------- verbs


def cmd_validate(args: argparse.Namespace) -> int:
    x = load_any(args.file) if not args.monoid_file else load_monoid(args.file)
    if isinstance(x, Monoid):
        what = f"monoid with {len(x)} elements" + (", commutative" if x.is_commutative() else "")
    elif isinstance(x, FiniteModel):
        what = f"{x.kind} model: " + ", ".join(f"{k} {v}" for k, v in x.size().items())
    elif isinstance(x, cp.DoubleComputad):
        what = f"double computad: {len(x.objects)} objects, {len(x.hcells)} h-cells, {len(x.vcells)} v-cells, {len(x.cells2)} 2-cells"
    else:
        what = f"2-computad: {len(x.objects)} objects, {len(x.cells1)} 1-cells, {len(x.cells2)} 2-cells"
    print(f"valid {what}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    m = load_model(args.file)
    if args.presentation and args.presentation != m.kind:
        raise InputError(f"{args.file}: presentation is {m.kind}, not {args.presentation}")
    report = check_axioms(m)
    if m.kind == "double-bicat":
        tidy = check_tidiness(m)
        report.note("tidiness checked after the axioms")
        report.merge(tidy)
    return Out(args).report(report)


def cmd_convert(args: argparse.Namespace) -> int:
    src = load_any(args.file)
    kind = src.kind if isinstance(src, FiniteModel) else "computad"
    if args.source and args.source != kind:
        raise InputError(f"{args.file}: source is {kind}, not {args.source}")
    try:
        result = convert(src, args.to, preserve_bigons=args.preserve_bigons)
    except NotTidy as exc:
        print(f"not tidy: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ConversionError as exc:
        raise InputError(str(exc)) from None
    for n in result.notes:
        print(f"note: {n}", file=sys.stderr)
    if isinstance(result.model, FiniteModel):
        text = dumps_model(result.model)
    else:
        doc = {"kind": "weak-free", "presentation": cp.double_computad_to_dict(src)}
        text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    Out(args).document(text)
    return EXIT_OK


def _read_term(path: str, c: cp.TwoComputad | cp.DoubleComputad) -> fe.Term:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return fe.parse_term(text, c)
    except fe.ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except fe.EngineError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def cmd_compose(args: argparse.Namespace) -> int:
    c = load_any(args.computad)
    if isinstance(c, FiniteModel):
        raise InputError(f"{args.computad}: compose needs a computad, not a model")
    terms = [_read_term(p, c) for p in args.terms]
    forms = []
    try:
        for p, t in zip(args.terms, terms):
            if isinstance(c, cp.DoubleComputad):
                nf = fe.eval_term_double(t, c)
                text = fe.format_grid(nf, c)
            else:
                nf = fe.eval_term2(t, c)
                text = fe.format_diagram(nf)
            forms.append(nf)
            print(f"# {p}: {fe.format_term(t)}")
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
    except fe.EngineError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None
    if len(terms) < 2:
        return EXIT_OK
    equal = forms[0] == forms[1]
    print(f"normal forms: {'equal' if equal else 'different'}")
    if args.budget:
        print(f"rewrite oracle (budget {args.budget}): {fe.oracle_equal(terms[0], terms[1], c, args.budget)}")
    return EXIT_OK if equal else EXIT_FAIL


def cmd_fuzz(args: argparse.Namespace) -> int:
    shapes = [args.grid] if args.grid else [(2, 2), (2, 3)]
    res = fe.fuzz_grid_coherence(args.seed, args.iters, shapes)
    report = Report("grid coherence fuzz")
    report.note(f"seed {args.seed}, {args.iters} random double graphs, shapes "
                + ", ".join(f"{r}x{c}" for r, c in shapes) + ", up to 2 identity insertions")
    report.note(f"{res.graphs} graphs, {res.grids} grids, {res.terms} composition terms")
    report.checked = res.terms
    for f in res.failures:
        report.add("all binary composition orders normalize to one grid", (), f)
    return Out(args).report(report)


def cmd_counterexample(args: argparse.Namespace) -> int:
    monoid = load_monoid(args.monoid)
    out = Out(args)
    try:
        c = counterexample(args.kind, monoid)
    except NonCommutativeMonoid as exc:
        raise InputError(str(exc)) from None
    if args.kind == "double-bicat":
        axioms, tidy = check_axioms(c), check_tidiness(c)
        if args.output:
            out.document(dumps_model(c))
    else:
        rows, cols = args.grid or (3, 3)
        try:
            axioms = check_cubical_coherence(c, rows, cols, args.depth, seed=args.seed)
        except OracleOutOfRange as exc:
            raise InputError(str(exc)) from None
        tidy = check_cubical_tidiness(c)
    expected = len(monoid) > 1
    summary = Report(f"counterexample {args.kind}, |M| = {len(monoid)}")
    summary.note(f"axioms: {'pass' if axioms.ok else 'fail'} ({axioms.checked} instances)")
    summary.note(f"tidiness: {'pass' if tidy.ok else 'fail'} ({tidy.checked} instances)")
    summary.note(f"separation expected: {'yes' if expected else 'no'}")
    summary.header += [h for h in axioms.header if h not in summary.header]
    for e in tidy.violations():
        summary.note(f"tidiness witness {e.law} [{', '.join(e.witness)}]: {e.detail}")
    summary.checked = axioms.checked + tidy.checked
    summary.entries = list(axioms.entries)
    if tidy.ok == expected:
        summary.add("tidiness fails exactly when |M| > 1", (str(len(monoid)),),
                    f"tidiness {'passed' if tidy.ok else 'failed'}")
    sys.stdout.write(summary.to_json() if out.json else summary.to_text())
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_equivalence(args: argparse.Namespace) -> int:
    if len(args.files) > 2:
        raise InputError("equivalence takes one computad or two models")
    first = load_any(args.files[0])
    if len(args.files) == 1:
        if not isinstance(first, cp.DoubleComputad):
            raise InputError("with one file, equivalence checks a double computad's strictification")
        return Out(args).report(check_equivalence(first, args.path_bound))
    second = load_any(args.files[1])
    if not (isinstance(first, FiniteModel) and isinstance(second, FiniteModel)):
        raise InputError("with two files, equivalence compares two models")
    iso = find_isomorphism(first, second)
    if iso is None:
        report = Report("equivalence conditions")
        report.add("models are isomorphic", tuple(args.files), "no boundary- and table-respecting bijection")
        return Out(args).report(report)
    report = check_equivalence(iso, args.path_bound)
    report.note("functor: isomorphism found by exhaustive search")
    return Out(args).report(report)


def cmd_fixtures(args: argparse.Namespace) -> int:
    from .weak_free import fixture_graphs
    models = fixtures()
    graphs = fixture_graphs()
    if not args.name:
        for n, m in models.items():
            print(f"{n}\t{m.kind}\t" + ", ".join(f"{k} {v}" for k, v in m.size().items()))
        for n, g in graphs.items():
            print(f"{n}\tdouble-computad\t{len(g.objects)} objects, {len(g.cells2)} 2-cells")
        return EXIT_OK
    if args.name in models:
        Out(args).document(dumps_model(models[args.name]))
    elif args.name in graphs:
        Out(args).document(cp.dumps(graphs[args.name]))
    else:
        raise InputError(f"unknown fixture {args.name!r}; run `fixtures` for the list")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakdouble", description="Workbench for doubly weak double categories.")
    sub = p.add_subparsers(dest="verb", required=True)

    def fmt(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("validate", help="validate a computad, model or monoid file")
    sp.add_argument("file")
    sp.add_argument("--monoid-file", action="store_true", help="read the file as a monoid table")
    sp.set_defaults(run=cmd_validate)

    sp = sub.add_parser("check", help="check every axiom of a model (and tidiness for double bicategories)")
    sp.add_argument("file")
    sp.add_argument("--presentation", choices=KINDS)
    fmt(sp)
    sp.set_defaults(run=cmd_check)

    sp = sub.add_parser("convert", help="convert a model to another presentation")
    sp.add_argument("file")
    sp.add_argument("--to", required=True, choices=TARGETS)
    sp.add_argument("--from", dest="source", choices=KINDS + ("computad",))
    sp.add_argument("--preserve-bigons", action="store_true", help="fail instead of discarding untidy bigon data")
    sp.add_argument("-o", "--output")
    sp.set_defaults(run=cmd_convert)

    sp = sub.add_parser("compose", help="normal form of pasting terms; with two terms, decide equality")
    sp.add_argument("computad")
    sp.add_argument("terms", nargs="+", metavar="term")
    sp.add_argument("--budget", type=_positive, default=10_000, help="rewrite oracle budget (0 to skip)")
    sp.set_defaults(run=cmd_compose)

    sp = sub.add_parser("coherence-fuzz", help="seeded grid coherence fuzzing of the free engine")
    sp.add_argument("--grid", type=parse_grid)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--iters", type=_positive, default=100)
    fmt(sp)
    sp.set_defaults(run=cmd_fuzz)

    sp = sub.add_parser("counterexample", help="build C_M and show the tidiness separation")
    sp.add_argument("kind", choices=("double-bicat", "cubical"))
    sp.add_argument("--monoid", default="z2", help="trivial, z2, z3 or a monoid file")
    sp.add_argument("--grid", type=parse_grid, help="cubical coherence grid bound (default 3x3)")
    sp.add_argument("--depth", type=_positive, default=3, help="cubical bracket depth bound")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", help="write the double bicategory model here")
    fmt(sp)
    sp.set_defaults(run=cmd_counterexample)

    sp = sub.add_parser("equivalence", help="strictification of a computad, or isomorphism of two models")
    sp.add_argument("files", nargs="+", metavar="file")
    sp.add_argument("--path-bound", type=_positive, default=3)
    fmt(sp)
    sp.set_defaults(run=cmd_equivalence)

    sp = sub.add_parser("fixtures", help="list fixtures, or write one")
    sp.add_argument("name", nargs="?")
    sp.add_argument("-o", "--output")
    sp.set_defaults(run=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
