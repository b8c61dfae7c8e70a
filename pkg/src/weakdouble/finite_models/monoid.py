"""Finite monoids given by explicit multiplication tables."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Any, Mapping

from ..computad import ValidationError, Violation


class NonCommutativeMonoid(ValueError):
    """A commutative monoid was required."""


@dataclass(frozen=True)
class Monoid:
    elements: tuple[str, ...]
    mul: tuple[tuple[str, ...], ...]  # mul[i][j] is elements[i] * elements[j]

    def __post_init__(self) -> None:
        problems = monoid_problems(self.elements, self.mul)
        if problems:
            raise ValidationError(problems)

    @property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def times(self, x: str, y: str) -> str:
        ix = self.index
        return self.mul[ix[x]][ix[y]]

    @property
    def unit(self) -> str:
        for x in self.elements:
            if all(self.times(x, y) == y and self.times(y, x) == y for y in self.elements):
                return x
        raise AssertionError("validated monoids have a unit")

    def is_commutative(self) -> bool:
        return all(self.times(x, y) == self.times(y, x) for x, y in product(self.elements, repeat=2))

    def __len__(self) -> int:
        return len(self.elements)


def monoid_problems(elements: Any, mul: Any) -> list[Violation]:
    out: list[Violation] = []
    if not isinstance(elements, (list, tuple)) or not elements or not all(isinstance(x, str) for x in elements):
        return [Violation("BadMonoid", "elements", "expected a non-empty list of strings")]
    if len(set(elements)) != len(elements):
        out.append(Violation("BadMonoid", "elements", "duplicate element"))
    n = len(elements)
    if (not isinstance(mul, (list, tuple)) or len(mul) != n
            or any(not isinstance(r, (list, tuple)) or len(r) != n for r in mul)):
        return out + [Violation("BadMonoid", "mul", f"expected an {n}x{n} table")]
    names = set(elements)
    for i, row in enumerate(mul):
        for j, x in enumerate(row):
            if x not in names:
                out.append(Violation("BadMonoid", f"mul[{i}][{j}]", f"{x!r} is not an element"))
    if out:
        return out
    ix = {x: i for i, x in enumerate(elements)}

    def t(x: str, y: str) -> str:
        return mul[ix[x]][ix[y]]

    for x, y, z in product(elements, repeat=3):
        if t(t(x, y), z) != t(x, t(y, z)):
            out.append(Violation("NotAssociative", f"{x},{y},{z}", "multiplication is not associative"))
            break
    if not any(all(t(u, y) == y and t(y, u) == y for y in elements) for u in elements):
        out.append(Violation("NoUnit", "mul", "no two-sided unit"))
    return out


def cyclic(n: int) -> Monoid:
    els = tuple(str(i) for i in range(n))
    return Monoid(els, tuple(tuple(str((i + j) % n) for j in range(n)) for i in range(n)))


def named_monoid(name: str) -> Monoid:
    table = {"trivial": 1, "z2": 2, "z3": 3}
    if name not in table:
        raise ValueError(f"unknown monoid {name!r}; expected trivial, z2, z3 or a file")
    return cyclic(table[name])


def monoid_from_dict(doc: Mapping[str, Any]) -> Monoid:
    els, mul = doc.get("elements"), doc.get("mul")
    problems = monoid_problems(els, mul)
    if problems:
        raise ValidationError(problems)
    return Monoid(tuple(els), tuple(tuple(r) for r in mul))


def loads_monoid(text: str) -> Monoid:
    return monoid_from_dict(json.loads(text))
