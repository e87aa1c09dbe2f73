"""Verification reports and their JSON form."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field


def cvalue(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def jsonable(x):
    """Convert parameters (complex numbers, tuples, numpy scalars) to JSON types."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if hasattr(x, "entries"):
        return jsonable(x.entries)
    try:
        z = complex(x)
    except TypeError:
        return str(x)
    if z.imag == 0:
        return z.real
    return cvalue(z)


@dataclass
class VerificationReport:
    identity_id: str
    parameters: dict
    lhs: object
    rhs: object
    abs_error: object
    rel_error: object
    passed: bool
    runtime_ms: int = 0
    threshold: float | None = None
    error: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def pass_(self) -> bool:
        return self.passed

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "identity_id": self.identity_id,
            "parameters": jsonable(self.parameters),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "pass": self.passed,
        }
        if self.threshold is not None:
            d["threshold"] = self.threshold
        if self.error is not None:
            d["error"] = self.error
        d.update(self.extra)
        if include_timing:
            d["runtime_ms"] = self.runtime_ms
        return d


def _elapsed_ms(t0) -> int:
    return int(round(1000 * (time.perf_counter() - t0)))


def complex_report(identity_id, parameters, lhs, rhs, threshold, t0) -> VerificationReport:
    lhs, rhs = complex(lhs), complex(rhs)
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_err = abs_err / scale if scale > 0 else 0.0
    ok = math.isfinite(rel_err) and rel_err <= threshold
    return VerificationReport(identity_id, parameters, cvalue(lhs), cvalue(rhs), abs_err,
                              rel_err, ok, _elapsed_ms(t0), threshold)


def exact_report(identity_id, parameters, lhs, rhs, t0) -> VerificationReport:
    """Report for an exact identity; lhs and rhs are polynomials or series."""
    ok = lhs == rhs
    return VerificationReport(identity_id, parameters, lhs.digest(), rhs.digest(),
                              "exact" if ok else "mismatch", "exact" if ok else "mismatch",
                              ok, _elapsed_ms(t0))


def failure_report(identity_id, parameters, exc, t0) -> VerificationReport:
    """Record a numerical infeasibility or convergence failure."""
    return VerificationReport(identity_id, parameters, None, None, None, None, False,
                              _elapsed_ms(t0), error=f"{type(exc).__name__}: {exc}")
