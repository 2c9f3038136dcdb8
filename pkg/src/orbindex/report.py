"""IndexReport and its stable JSON / table renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cyclotomic import Cyclotomic


@dataclass(frozen=True)
class IndexReport:
    model: str
    params: dict[str, Any]
    operator: str
    twist: str
    rho: str
    grouping: str  # byElements | byCyclic | pairing
    contributions: tuple[tuple[str, Cyclotomic], ...]
    total: Fraction
    integral: bool
    oracle: int | None = None
    checks: tuple[tuple[str, bool], ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "ok" if self.integral and all(ok for _, ok in self.checks) else "mismatch"

    @property
    def ok(self) -> bool:
        return self.verdict == "ok"

    def with_checks(self, *checks: tuple[str, bool], oracle: int | None = None) -> IndexReport:
        return IndexReport(
            self.model,
            self.params,
            self.operator,
            self.twist,
            self.rho,
            self.grouping,
            self.contributions,
            self.total,
            self.integral,
            self.oracle if oracle is None else oracle,
            self.checks + tuple(checks),
        )

    def failed_checks(self) -> list[str]:
        out = [name for name, ok in self.checks if not ok]
        if not self.integral:
            out.insert(0, "integrality")
        return out

    # -- serialization ------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "params": self.params,
            "operator": self.operator,
            "twist": self.twist,
            "rho": self.rho,
            "grouping": self.grouping,
            "contributions": [{"class": c, "value": v.to_string()} for c, v in self.contributions],
            "total": str(self.total),
            "total_int": int(self.total) if self.integral else None,
            "integral": self.integral,
            "oracle": self.oracle,
            "checks": [{"name": n, "ok": ok} for n, ok in self.checks],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> IndexReport:
        return cls(
            model=d["model"],
            params=d["params"],
            operator=d["operator"],
            twist=d["twist"],
            rho=d["rho"],
            grouping=d["grouping"],
            contributions=tuple((c["class"], Cyclotomic.parse(c["value"])) for c in d["contributions"]),
            total=Fraction(d["total"]),
            integral=bool(d["integral"]),
            oracle=d["oracle"],
            checks=tuple((c["name"], bool(c["ok"])) for c in d["checks"]),
        )

    @classmethod
    def from_json(cls, text: str) -> IndexReport:
        return cls.from_dict(json.loads(text))

    def render_table(self) -> str:
        head = f"{self.model} {_params(self.params)}  operator={self.operator}  twist={self.twist}  rho={self.rho}"
        rows = [(c, v.to_string()) for c, v in self.contributions]
        width = max([len("class")] + [len(c) for c, _ in rows])
        lines = [head, f"grouping: {self.grouping}", "", f"{'class'.ljust(width)}  contribution"]
        lines.append("-" * (width + 2 + 12))
        lines += [f"{c.ljust(width)}  {v}" for c, v in rows]
        lines.append("")
        lines.append(f"total   : {self.total}")
        if self.oracle is not None:
            lines.append(f"oracle  : {self.oracle}")
        for name, ok in self.checks:
            lines.append(f"check   : {name}: {'pass' if ok else 'FAIL'}")
        lines.append(f"verdict : {self.verdict}")
        return "\n".join(lines)


def _params(p: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in p.items())


def emit_report(report: IndexReport, fmt: str = "json") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "human":
        return report.render_table()
    raise ValueError(f"unknown format {fmt!r}")
