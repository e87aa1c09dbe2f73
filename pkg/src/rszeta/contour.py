"""Quadrature over products of vertical lines in C^d.

An integral over Re z_j = sigma_j is parametrized as z_j = sigma_j + i t_j, so
dz_1 ... dz_d = i^d dt_1 ... dt_d.  The engine applies that factor; the
constant in front of the integral (1/(2 pi i), 1/(4 pi i), 1/2, ...) is always
passed in by the caller exactly as it appears in the formula being evaluated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import InfeasibleContour, NonConvergence
from .special import gamma_r_prod

RULES = ("trapezoid", "gauss_legendre_panels")
_GL_PANEL = 16


@dataclass(frozen=True)
class ContourSpec:
    abscissas: tuple
    truncation_height: float = 40.0
    nodes_per_axis: int = 2048
    rule: str = "trapezoid"

    def __post_init__(self):
        object.__setattr__(self, "abscissas", tuple(float(x) for x in self.abscissas))
        if not 1 <= len(self.abscissas) <= 3:
            raise ValueError("ContourSpec supports 1 to 3 dimensions")
        if not self.truncation_height > 0:
            raise ValueError("truncation height must be positive")
        if self.nodes_per_axis < 16:
            raise ValueError("need at least 16 nodes per axis")
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    @property
    def d(self) -> int:
        return len(self.abscissas)

    def refined(self) -> "ContourSpec":
        """Same contour with doubled truncation height and node count."""
        return replace(self, truncation_height=2 * self.truncation_height,
                       nodes_per_axis=2 * self.nodes_per_axis)


@dataclass(frozen=True)
class GammaArgConstraint:
    """Require const + sum_j coeffs[j] * sigma_j > margin."""
    coeffs: tuple
    const: float
    margin: float = 0.1

    def value(self, sigma) -> float:
        return self.const + float(np.dot(self.coeffs, sigma))

    def slack(self, sigma) -> float:
        return self.value(sigma) - self.margin


def axis_rule(T: float, n: int, rule: str = "trapezoid"):
    """Nodes and weights on [-T, T]."""
    if rule == "trapezoid":
        h = 2.0 * T / n
        t = -T + h * (np.arange(n) + 0.5)
        return t, np.full(n, h)
    if rule == "gauss_legendre_panels":
        panels = max(1, math.ceil(n / _GL_PANEL))
        x, w = np.polynomial.legendre.leggauss(_GL_PANEL)
        width = 2.0 * T / panels
        left = -T + width * np.arange(panels)
        t = (left[:, None] + 0.5 * width * (x[None, :] + 1.0)).ravel()
        return t, np.tile(0.5 * width * w, panels)
    raise ValueError(f"unknown rule {rule!r}")


def choose_abscissa(constraints: Sequence[GammaArgConstraint], d: int,
                    cap: float = 1.0) -> np.ndarray:
    """Pick sigma in R^d maximizing the smallest slack of the constraints.

    The min-slack is capped at `cap` so that far-away contours are not
    preferred for no reason; among the optimal points the one with the
    smallest sum of |sigma_j| is returned.  Raises InfeasibleContour if some
    constraint cannot be met with its margin.
    """
    if d == 0:
        slacks = [c.slack(()) for c in constraints]
        worst = min(slacks, default=cap)
        if worst < 0:
            exc = InfeasibleContour("constant Gamma argument violates its margin", worst)
            exc.binding = [i for i, x in enumerate(slacks) if x < 0]
            raise exc
        return np.zeros(0)
    m = len(constraints)
    A = np.array([c.coeffs for c in constraints], dtype=float).reshape(m, d)
    b = np.array([c.const - c.margin for c in constraints], dtype=float)
    # variables (sigma, t): maximize t subject to A sigma + b >= t, t <= cap
    A_ub = np.hstack([-A, np.ones((m, 1))])
    bounds = [(-50.0, 50.0)] * d + [(None, cap)]
    res = linprog(np.r_[np.zeros(d), -1.0], A_ub=A_ub, b_ub=b, bounds=bounds,
                  method="highs")
    if res.status != 0:
        raise InfeasibleContour(f"abscissa LP failed: {res.message}")
    t_star = float(res.x[-1])
    if t_star < -1e-12:
        exc = InfeasibleContour(
            f"no straight contour keeps every Gamma argument above its margin "
            f"(best slack {t_star:.3g})", t_star)
        slacks = A @ res.x[:d] + b
        exc.binding = [i for i in range(m) if slacks[i] <= t_star + 1e-9]
        raise exc
    # second pass: hold the slack, minimize sum |sigma| via sigma = p - q
    t_hold = t_star - 1e-9 * max(1.0, abs(t_star))
    A2 = np.hstack([-A, A])
    b2 = b - t_hold
    res2 = linprog(np.ones(2 * d), A_ub=A2, b_ub=b2,
                   bounds=[(0, 50.0)] * (2 * d), method="highs")
    if res2.status != 0:
        return np.asarray(res.x[:d])
    return np.asarray(res2.x[:d] - res2.x[d:])


def _grid_axes(spec: ContourSpec, batch_ndim: int):
    d = spec.d
    zs, ws = [], []
    for j, sigma in enumerate(spec.abscissas):
        t, w = axis_rule(spec.truncation_height, spec.nodes_per_axis, spec.rule)
        shape = [1] * (batch_ndim + d)
        shape[batch_ndim + j] = len(t)
        zs.append((sigma + 1j * t).reshape(shape))
        ws.append(w)
    return zs, ws


def _integrate_once(f, spec: ContourSpec, batch_ndim: int):
    zs, ws = _grid_axes(spec, batch_ndim)
    vals = np.asarray(f(*zs))
    vals = np.broadcast_to(vals, np.broadcast_shapes(vals.shape, *(z.shape for z in zs)))
    # contract the trailing axes one at a time, last first
    out = vals
    for w in reversed(ws):
        out = out @ w
    return out * (1j ** spec.d)


def integrate_vertical(f: Callable, spec: ContourSpec, prefactor=1.0, *,
                       batch_ndim: int = 0, tol: float | None = None):
    """prefactor * int f(z) dz over Re z = spec.abscissas.

    `f` receives d broadcastable complex arrays (with `batch_ndim` leading
    singleton axes) and returns an array of shape batch + (N,)*d.  When `tol`
    is given, the integral is recomputed with doubled height and node count and
    NonConvergence is raised if the two results differ by more than 10*tol in
    relative terms; the refined value is returned.
    """
    coarse = _integrate_once(f, spec, batch_ndim) * prefactor
    if tol is None:
        return coarse[()] if np.ndim(coarse) == 0 else coarse
    fine = _integrate_once(f, spec.refined(), batch_ndim) * prefactor
    scale = np.maximum(np.abs(fine), 1e-300)
    rel = np.max(np.abs(fine - coarse) / scale)
    if not np.isfinite(rel) or rel > 10 * tol:
        raise NonConvergence(
            f"doubling T and nodes changed the result by {rel:.3g} (tolerance {tol:g})",
            coarse, fine)
    return fine[()] if np.ndim(fine) == 0 else fine


def barnes_first_lemma_rhs(a, b, c, d) -> complex:
    """Gamma_R(a+c) Gamma_R(a+d) Gamma_R(b+c) Gamma_R(b+d) / Gamma_R(a+b+c+d)."""
    num = gamma_r_prod([a + c, a + d, b + c, b + d])
    return num / gamma_r_prod([a + b + c + d])
