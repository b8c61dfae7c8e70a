import pytest

from weakdouble import computad as cp


def cell2(top, right, left, bottom, /, **anchors):
    doc = {"top": top, "right": right, "left": left, "bottom": bottom}
    if anchors:
        doc["anchors"] = anchors
    return doc


def double_doc(objects, hcells, vcells, cells2):
    return {
        "kind": "double-computad",
        "objects": list(objects),
        "hcells": {k: {"src": s, "tgt": t} for k, (s, t) in hcells.items()},
        "vcells": {k: {"src": s, "tgt": t} for k, (s, t) in vcells.items()},
        "cells2": cells2,
    }


@pytest.fixture
def two_by_two():
    """Four squares in a 2x2 array on a 3x3 lattice of objects, plus a
    horizontal bigon under the top-left square and a vertical bigon beside it."""
    objs = [f"o{i}{j}" for i in range(3) for j in range(3)]
    h = {f"f{i}{j}": (f"o{i}{j}", f"o{i}{j + 1}") for i in range(3) for j in range(2)}
    v = {f"u{i}{j}": (f"o{i}{j}", f"o{i + 1}{j}") for i in range(2) for j in range(3)}
    h["g10"] = h["f10"]
    v["w01"] = v["u01"]
    cells = {
        "a": cell2(["f00"], ["u01"], ["u00"], ["f10"]),
        "b": cell2(["f01"], ["u02"], ["u01"], ["f11"]),
        "c": cell2(["f10"], ["u11"], ["u10"], ["f20"]),
        "d": cell2(["f11"], ["u12"], ["u11"], ["f21"]),
        "beta": cell2(["f10"], [], [], ["g10"], left="o10", right="o11"),
        "delta": cell2([], ["w01"], ["u01"], [], top="o01", bottom="o11"),
    }
    return cp.validate_double_computad(double_doc(objs, h, v, cells))


VERDICTS: list[str] = []


@pytest.fixture
def verdict(capsys):
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
        VERDICTS.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
