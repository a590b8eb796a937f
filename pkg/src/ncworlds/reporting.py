"""Report records shared by the symbolic verification suites and the CLI.

A CheckRow is one verified equation; the residual term counts before and
after normalization double as a performance-regression signal (the Ampere
check is the stress test, so its pre-collection word count is worth watching
across revisions).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Expression


@dataclass
class CheckRow:
    """One verified equation: its residual and whether it vanished."""

    name: str
    residual: Expression
    terms_before: int
    ok: bool


@dataclass
class CheckReport:
    name: str
    rows: list[CheckRow] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def terms_before(self) -> int:
        return sum(row.terms_before for row in self.rows)

    @property
    def terms_after(self) -> int:
        return sum(row.residual.n_terms for row in self.rows)

    def to_dict(self) -> dict:
        # No timing here: json/csv outputs must be byte-identical across runs.
        return {
            "check": self.name,
            "ok": self.ok,
            "terms_before": self.terms_before,
            "terms_after": self.terms_after,
            "rows": [
                {
                    "name": row.name,
                    "ok": row.ok,
                    "terms_before": row.terms_before,
                    "terms_after": row.residual.n_terms,
                    "residual": row.residual.text(),
                }
                for row in self.rows
            ],
        }
