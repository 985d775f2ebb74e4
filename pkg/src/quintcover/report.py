"""Verification reports shared by every check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactalg import MultiPoly, QuadExtScalar, RatFunc, rational_str


def to_jsonable(x: Any) -> Any:
    """Convert exact objects to their canonical JSON forms."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return rational_str(x)
    if isinstance(x, QuadExtScalar):
        return x.to_json()
    if isinstance(x, MultiPoly):
        return {"vars": x.json_vars(), "terms": x.to_json()}
    if isinstance(x, RatFunc):
        return x.to_json()
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        return x
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class CheckReport:
    check: str
    passed: bool
    residual: Any = None
    constants: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "residual": to_jsonable(self.residual),
            "constants": to_jsonable(self.constants),
        }
        if self.detail:
            out["detail"] = self.detail
        return out

    def line(self) -> str:
        return f"[{self.status.upper()}] {self.check}" + (f": {self.detail}" if self.detail else "")


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no whitespace variation."""
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))
