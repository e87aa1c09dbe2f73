"""Mellin-Barnes integrands as ratios of Gamma_R factors with affine arguments.

Every integrand in the package has the shape

    const * prod Gamma_R(L_i(z)) / prod Gamma_R(M_k(z)) * exp(E(z))

with L_i, M_k, E affine in the integration variables.  `MBIntegral` stores
that data symbolically, derives the contour constraints (each numerator
argument needs positive real part), picks the abscissas and evaluates the
integral on a tensor grid.

Constants may be numpy arrays: then one call evaluates the integral at a whole
batch of parameter points sharing the same contour.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .contour import ContourSpec, GammaArgConstraint, axis_rule, choose_abscissa
from .errors import InfeasibleContour, NonConvergence
from .special import log_gamma_r_array

MARGIN = 0.1
DISCRETIZATION_TARGET = 1e-14
NODE_CAPS = (32768, 4096, 2048)


class Affine:
    """const + sum_v coeffs[v] * v, with real coefficients on named variables."""

    __slots__ = ("const", "coeffs")

    def __init__(self, const=0.0, coeffs=None):
        self.const = const if isinstance(const, np.ndarray) else complex(const)
        self.coeffs = {k: float(v) for k, v in (coeffs or {}).items() if v != 0}

    @staticmethod
    def var(name: str) -> "Affine":
        return Affine(0.0, {name: 1.0})

    def _coerce(self, other):
        return other if isinstance(other, Affine) else Affine(other)

    def __add__(self, other):
        other = self._coerce(other)
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0.0) + v
        return Affine(self.const + other.const, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, c):
        c = float(c)
        return Affine(self.const * c, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def variables(self):
        return set(self.coeffs)

    def min_re_const(self) -> float:
        return float(np.min(np.real(self.const)))

    def constraint(self, order, margin=MARGIN) -> GammaArgConstraint:
        return GammaArgConstraint(tuple(self.coeffs.get(v, 0.0) for v in order),
                                  self.min_re_const(), margin)

    def substitute(self, values: dict) -> "Affine":
        """Replace some variables by other affine forms."""
        out = Affine(self.const, {k: v for k, v in self.coeffs.items() if k not in values})
        for k, v in self.coeffs.items():
            if k in values:
                out = out + values[k] * v
        return out

    def evaluate(self, zmap: dict, pad: int = 0):
        """Value on a grid; array constants get `pad` trailing singleton axes."""
        const = self.const
        if pad and isinstance(const, np.ndarray):
            const = const.reshape(const.shape + (1,) * pad)
        out = const
        for k, v in self.coeffs.items():
            out = out + v * zmap[k]
        return out

    def __repr__(self):
        terms = " + ".join(f"{v:g}*{k}" for k, v in self.coeffs.items())
        return f"Affine({self.const!r}{' + ' + terms if terms else ''})"


def as_affine(x) -> Affine:
    return x if isinstance(x, Affine) else Affine(x)


@dataclass
class MBIntegral:
    """prefactor * int exp(log_const + E(z)) prod Gamma_R(num) / prod Gamma_R(den) dz.

    `variables` lists the integration variables.  The integrand is a product
    of factors that each involve only a few variables, so the sum over the
    tensor grid is carried out as a tensor-network contraction (one variable
    summed out at a time) rather than by forming the full d-dimensional grid.
    """
    variables: list
    num: list
    den: list = field(default_factory=list)
    log_const: object = 0.0
    prefactor: complex = 1.0
    exponent: Affine | None = None

    @property
    def d(self) -> int:
        return len(self.variables)

    def constraints(self, margin=MARGIN):
        order = list(self.variables)
        return [f.constraint(order, margin) for f in self.num if f.coeffs], order

    def abscissas(self) -> np.ndarray:
        cons, order = self.constraints()
        try:
            return choose_abscissa(cons, len(order))
        except InfeasibleContour as exc:
            factors = [f for f in self.num if f.coeffs]
            names = [f"Re({factors[i]!r}) > {MARGIN}" for i in exc.binding]
            if names:
                exc.args = (f"{exc.args[0]}; violated: " + ", ".join(names),)
            raise

    def batch_shape(self):
        shapes = [np.shape(f.const) for f in self.num + self.den]
        if self.exponent is not None:
            shapes.append(np.shape(self.exponent.const))
        shapes.append(np.shape(self.log_const))
        return np.broadcast_shapes(*shapes)

    def strip_width(self, sigma) -> float:
        """Half-width of the analytic strip around the contour, per axis, minimized.

        Moving t_j off the real line by tau changes a Gamma argument's real
        part by -c_j tau, so axis j stays pole-free while tau < value / |c_j|.
        """
        width = np.inf
        for f in self.num:
            if not f.coeffs:
                continue
            value = f.min_re_const() + sum(c * sigma[self.variables.index(v)]
                                           for v, c in f.coeffs.items())
            for c in f.coeffs.values():
                if c:
                    width = min(width, value / abs(c))
        return float(width)

    def nodes(self, policy, sigma) -> tuple:
        """Node count per axis and the estimated discretization error.

        The trapezoid error decays like exp(-2 pi w / h) for strip half-width w
        and step h, so the policy's node count is raised (up to a memory cap)
        until that estimate drops below DISCRETIZATION_TARGET.
        """
        d = self.d
        T, N = policy.T_for(d), policy.nodes_for(d)
        if policy.rule != "trapezoid":
            return N, 0.0
        w = self.strip_width(sigma)
        if policy.adaptive and np.isfinite(w) and w > 0:
            need = int(np.ceil(2 * T * -np.log(DISCRETIZATION_TARGET) / (2 * np.pi * w)))
            cap = NODE_CAPS[min(d, 3) - 1]
            N = max(N, min(need + need % 2, cap))
        est = float(np.exp(-2 * np.pi * w * N / (2 * T))) if w > 0 else np.inf
        return N, est

    def evaluate(self, policy=None, sigma=None, check: bool | None = None):
        """Value of the integral (an array when constants are batched)."""
        policy = policy or QuadPolicy()
        batch = self.batch_shape()
        if self.d == 0:
            val = self.prefactor * np.exp(self._const_log(batch))
            return val if batch else complex(val)
        if sigma is None:
            sigma = self.abscissas()
        if check is None:
            check = policy.check
        d = self.d
        T, rule = policy.T_for(d), policy.rule
        N, disc = self.nodes(policy, sigma)
        if not check:
            val = self._contract(sigma, *axis_rule(T, N, rule), batch)
        else:
            tol = policy.tol(d)
            if rule == "trapezoid":
                # truncation: compare with the inner half |t| <= T/2 of the same
                # grid (one contraction serves both sums).  With exponential
                # decay the error at T is about the square of the change seen
                # between T/2 and T.
                t, w = axis_rule(T, N, rule)
                wc = np.where(np.abs(t) <= T / 2, w, 0.0)
                fine, coarse = self._contract(sigma, t, [w, wc], batch)
                rel = np.max(np.abs(fine - coarse) / np.maximum(np.abs(fine), 1e-300)) ** 2
            else:
                coarse = self._contract(sigma, *axis_rule(T, N, rule), batch)
                fine = self._contract(sigma, *axis_rule(2 * T, 2 * N, rule), batch)
                rel = np.max(np.abs(fine - coarse) / np.maximum(np.abs(fine), 1e-300))
            if not np.isfinite(rel) or rel > 10 * tol:
                raise NonConvergence(
                    f"estimated truncation error {rel:.3g} of a {d}-dimensional integral "
                    f"exceeds 10x tolerance {tol:g} (T={T:g})", coarse, fine)
            if disc > tol:
                raise NonConvergence(
                    f"contour passes within {self.strip_width(sigma):.3g} of a pole; estimated "
                    f"discretization error {disc:.3g} exceeds {tol:g} at the node cap {N}",
                    coarse, fine)
            val = fine
        val = val * self.prefactor * (1j ** d)
        return val if batch else complex(val)

    def _const_log(self, batch):
        total = np.asarray(self.log_const, dtype=complex)
        for f in self.num:
            if not f.coeffs:
                total = total + log_gamma_r_array(f.const)
        for f in self.den:
            if not f.coeffs:
                total = total - log_gamma_r_array(f.const)
        if self.exponent is not None:
            total = total + self.exponent.const
        return np.broadcast_to(total, batch) if batch else total

    def _groups(self):
        """Collect log-factors by the set of variables they involve."""
        items = [(f, 1) for f in self.num] + [(f, -1) for f in self.den]
        groups = {}
        for f, sign in items:
            key = tuple(v for v in self.variables if v in f.coeffs)
            if key:
                groups.setdefault(key, []).append(("g", f, sign))
        if self.exponent is not None:
            for v, c in self.exponent.coeffs.items():
                groups.setdefault((v,), []).append(("e", Affine(0.0, {v: c}), 1))
        # merge each group into a larger one containing its variables
        keys = sorted(groups, key=len, reverse=True)
        merged = {}
        for k in keys:
            home = next((m for m in merged if set(k) <= set(m)), None)
            if home is None:
                merged[k] = list(groups[k])
            else:
                merged[home] += groups[k]
        return merged

    def _contract(self, sigma, t, weights, batch):
        multi = isinstance(weights, list)
        wlist = weights if multi else [weights]
        z_axis = {v: sigma[i] + 1j * t for i, v in enumerate(self.variables)}
        letters = {v: chr(ord("a") + i) for i, v in enumerate(self.variables)}
        bl = "Z"
        nb = int(np.prod(batch)) if batch else 0
        groups = self._groups()
        operands, subs = [], []
        for key, factors in groups.items():
            k = len(key)
            zmap = {}
            for i, v in enumerate(key):
                shape = [1] * k
                shape[i] = len(t)
                zmap[v] = z_axis[v].reshape(shape)
            batched = any(isinstance(f.const, np.ndarray) for _, f, _ in factors)
            pad = k if batched else 0
            total = 0.0
            for kind, f, sign in factors:
                if batched and isinstance(f.const, np.ndarray):
                    f = Affine(np.broadcast_to(f.const, batch).ravel(), f.coeffs)
                arg = f.evaluate(zmap, pad)
                if kind == "g":
                    total = total + sign * log_gamma_r_array(arg)
                else:
                    total = total + arg
            operands.append(np.exp(total))
            subs.append((bl if batched else "") + "".join(letters[v] for v in key))
        const = self._const_log(batch)
        out_sub = bl if any(bl in x for x in subs) else ""
        results = []
        for w in wlist:
            ops = list(operands) + [w] * len(self.variables)
            sb = list(subs) + [letters[v] for v in self.variables]
            val = np.einsum(",".join(sb) + "->" + out_sub, *ops, optimize="greedy")
            if batch:
                val = np.broadcast_to(val, (nb,)).reshape(batch)
            results.append(val * np.exp(const))
        return results if multi else results[0]


def feasible(integral: MBIntegral) -> bool:
    try:
        integral.abscissas()
    except InfeasibleContour:
        return False
    return True


@dataclass(frozen=True)
class QuadPolicy:
    """Quadrature settings and convergence tolerances, indexed by dimension.

    Index 0 is used for 1-variable integrals, index 1 for 2 variables and
    index 2 for 3 or more variables.  T and nodes apply to every axis.
    With `adaptive` set, `nodes` is a floor: integrals whose contour runs
    close to a pole get more nodes (see MBIntegral.nodes).
    """
    T: tuple = (40.0, 30.0, 25.0)
    nodes: tuple = (2048, 1024, 1024)
    rule: str = "trapezoid"
    tolerances: tuple = (1e-9, 1e-7, 1e-5)
    check: bool = False
    adaptive: bool = True

    def T_for(self, d: int) -> float:
        return float(self.T[min(d, 3) - 1])

    def nodes_for(self, d: int) -> int:
        return int(self.nodes[min(d, 3) - 1])

    def spec(self, sigma) -> ContourSpec:
        d = len(sigma)
        return ContourSpec(tuple(sigma), self.T_for(d), self.nodes_for(d), self.rule)

    def tol(self, d: int) -> float:
        return self.tolerances[min(d, 3) - 1]

    def with_check(self, check=True) -> "QuadPolicy":
        return replace(self, check=check)

    @classmethod
    def from_config(cls, cfg: dict | None, base: "QuadPolicy | None" = None) -> "QuadPolicy":
        """Build from {"quadrature": {T, nodes, rule}, "tolerances": {d1, d2, d3}}.

        T and nodes may be single numbers (used for every dimension) or lists
        of three.
        """
        pol = base or cls()
        if not cfg:
            return pol
        q = cfg.get("quadrature", {}) or {}
        kw = {}
        for key in ("T", "nodes"):
            if key in q:
                v = q[key]
                if isinstance(v, (list, tuple)):
                    if len(v) != 3:
                        raise ValueError(f"quadrature.{key} needs 3 entries")
                    kw[key] = tuple(v)
                else:
                    kw[key] = (v, v, v)
        if "rule" in q:
            kw["rule"] = q["rule"]
        tols = cfg.get("tolerances", {}) or {}
        if tols:
            cur = list(pol.tolerances)
            for j, k in enumerate(("d1", "d2", "d3")):
                if k in tols:
                    cur[j] = float(tols[k])
            kw["tolerances"] = tuple(cur)
        pol = replace(pol, **kw)
        for d in (1, 2, 3):
            pol.spec((0.0,) * d)  # validates T, nodes and rule
        return pol
