"""Law-instance bookkeeping shared by the axiom checkers."""

from __future__ import annotations

from typing import Callable

from .base import FiniteModel, Undefined
from .report import Report


class Checker:
    def __init__(self, m: FiniteModel, report: Report, tag: str = ""):
        self.m = m
        self.e = m.e
        self.report = report
        self.tag = tag

    def name(self, law: str) -> str:
        return f"{law} {{{self.tag}}}" if self.tag else law

    def eq(self, law: str, witness: tuple[str, ...], lhs: Callable[[], str], rhs: Callable[[], str]) -> None:
        self.report.checked += 1
        try:
            a = lhs()
        except Undefined as u:
            self.report.add(self.name(law), witness, f"left side undefined at {u.op}{u.args}")
            return
        try:
            b = rhs()
        except Undefined as u:
            self.report.add(self.name(law), witness, f"right side undefined at {u.op}{u.args}")
            return
        if a != b:
            self.report.add(self.name(law), witness, f"{a} != {b}")

    def holds(self, law: str, witness: tuple[str, ...], cond: Callable[[], bool], detail: str = "") -> None:
        self.report.checked += 1
        try:
            ok = cond()
        except Undefined as u:
            self.report.add(self.name(law), witness, f"undefined at {u.op}{u.args}")
            return
        if not ok:
            self.report.add(self.name(law), witness, detail)

    def safe(self, f: Callable[[], str]) -> str | None:
        try:
            return f()
        except Undefined:
            return None
