"""Pass/fail reports shared by every checker and by the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class Report:
    """Named checks plus the command/params that produced them.

    ``passed`` is the conjunction of all results; an empty report passes.
    """

    command: str
    params: dict[str, Any] = field(default_factory=dict)
    results: list[CheckResult] = field(default_factory=list)
    data: dict[str, Any] | None = None

    def add(self, name: str, passed: bool, witness: str | None = None) -> CheckResult:
        result = CheckResult(name, bool(passed), None if passed else witness)
        self.results.append(result)
        return result

    def extend(self, other: Report, prefix: str = "") -> None:
        for r in other.results:
            self.results.append(CheckResult(prefix + r.name, r.passed, r.witness))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def get(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "command": self.command,
            "params": {k: _plain(v) for k, v in sorted(self.params.items())},
            "results": [
                {"name": r.name, "pass": r.passed, "witness": r.witness}
                for r in sorted(self.results, key=lambda r: r.name)
            ],
            "pass": self.passed,
        }
        if self.data is not None:
            out["data"] = _plain(self.data)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def __str__(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        for r in sorted(self.results, key=lambda r: r.name):
            mark = "ok  " if r.passed else "FAIL"
            tail = f"  [{r.witness}]" if r.witness else ""
            lines.append(f"  {mark} {r.name}{tail}")
        return "\n".join(lines)


def _plain(value: Any) -> Any:
    # Fractions, HalfIntegers etc. serialize through str().
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)
