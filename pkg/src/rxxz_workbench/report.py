"""Machine-readable check reports shared by the library and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


SCHEMA_VERSION = 1


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalars
        return _jsonable(x.item())
    return x


@dataclass
class CheckReport:
    """Outcome of one named check: residuals against a tolerance.

    ``passed`` is always residual <= tolerance; failures keep their residuals
    so reports stay useful for diagnosis.
    """

    name: str
    residual: float
    tolerance: float
    params: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)
    runtime_s: float | None = None

    @property
    def passed(self) -> bool:
        import math

        return math.isfinite(self.residual) and self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": _jsonable(self.residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "params": _jsonable(self.params),
            "diagnostics": _jsonable(self.diagnostics),
            "runtime_s": self.runtime_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def bundle(reports: list[CheckReport], *, seed: int | None = None, config: dict | None = None) -> dict:
    """Assemble reports (sorted by name) into the versioned document."""
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "config": _jsonable(config or {}),
        "checks": [r.to_dict() for r in sorted(reports, key=lambda r: r.name)],
        "pass": all(r.passed for r in reports),
    }
