"""Deterministic check reports shared by every checker and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True, order=True)
class Entry:
    law: str
    witness: tuple[str, ...]
    detail: str = ""

    def text(self) -> str:
        w = ", ".join(self.witness)
        return f"VIOLATION {self.law} [{w}]" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    title: str
    header: list[str] = field(default_factory=list)
    entries: list[Entry] = field(default_factory=list)
    checked: int = 0

    def add(self, law: str, witness: tuple[str, ...] | list[str], detail: str = "") -> None:
        self.entries.append(Entry(law, tuple(str(w) for w in witness), detail))

    def note(self, line: str) -> None:
        self.header.append(line)

    def merge(self, other: "Report") -> None:
        self.header.extend(h for h in other.header if h not in self.header)
        self.entries.extend(other.entries)
        self.checked += other.checked

    @property
    def ok(self) -> bool:
        return not self.entries

    def violations(self) -> list[Entry]:
        return sorted(set(self.entries))

    def laws(self) -> list[str]:
        return sorted({e.law for e in self.entries})

    def to_text(self) -> str:
        lines = [f"# {self.title}"]
        lines += [f"# {h}" for h in self.header]
        lines.append(f"# instances checked: {self.checked}")
        lines += [e.text() for e in self.violations()]
        lines.append(f"status: {'pass' if self.ok else 'fail'} ({len(self.violations())} violations)")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "header": list(self.header),
            "checked": self.checked,
            "status": "pass" if self.ok else "fail",
            "violations": [{"law": e.law, "witness": list(e.witness), "detail": e.detail}
                           for e in self.violations()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"
