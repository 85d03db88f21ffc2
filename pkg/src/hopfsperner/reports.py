"""Structured verification results shared by the bound checkers and CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a bound check.

    ``passes`` is derived, never stored: every hypothesis must hold and the
    observed count must reach the required bound.
    """

    theorem: str
    hypotheses: list[tuple[str, bool]] = field(default_factory=list)
    invariant: int | None = None
    observed: int | None = None
    required: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(ok for _, ok in self.hypotheses)

    @property
    def passes(self) -> bool:
        if not self.hypotheses_hold:
            return False
        if self.required is None or self.observed is None:
            return self.required is None
        return self.observed >= self.required

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "hypotheses": [{"name": n, "pass": ok} for n, ok in self.hypotheses],
            "invariant": self.invariant,
            "observed": self.observed,
            "required": self.required,
            "passes": self.passes,
            "details": self.details,
        }
