"""Radial class one Whittaker functions on the positive torus.

Two independent routes are provided for each group:

* direct: the integral recursions in t_j (substituting t_j = e^{u_j}, the
  integrands decay double exponentially at both ends, so the trapezoid rule
  converges geometrically in the step),
* mellin: inversion of the Mellin transforms U_{n,a} and V_{n,b}.

All functions return the hatted radial part; multiply by
TorusPoint.rho_shift() for the full value.
"""
from __future__ import annotations

import math
import time

import numpy as np
from scipy.integrate import quad as scipy_quad

from .errors import DomainError, UnsupportedRank
from .mb import Affine, QuadPolicy
from .mellin import nested_integral
from .params import TorusPoint, as_params_a, as_params_b
from .report import VerificationReport, complex_report
from .special import bessel_k, bessel_k_array, gamma_r_prod

# cut the exp(-(pi y)^2 t - 1/t) factors where the exponent passes -_CUT
_CUT = 45.0
_STEP = 0.12


def _coords(y, n, kind):
    if isinstance(y, TorusPoint):
        c = y.coords
    else:
        c = TorusPoint(tuple(y), kind).coords
    if len(c) != n:
        raise DomainError(f"torus point needs {n} coordinates, got {len(c)}")
    return c


def _cpow(x, c):
    """x**c for positive real x (arrays allowed) and complex c."""
    return np.exp(complex(c) * np.log(x))


def _log_range(scale, h):
    """Grid for u = log t covering exp(-scale * t - 1/t) above e^{-_CUT}."""
    lo = -math.log(_CUT)
    hi = math.log(_CUT / scale)
    return np.arange(lo - h, hi + 2 * h, h)


def _w2_hat(a1, a2, Y):
    """2 Y^{(a1+a2)/2} K_{(a1-a2)/2}(2 pi Y) for an array of Y."""
    Y = np.asarray(Y, dtype=float)
    return 2.0 * _cpow(Y, (a1 + a2) / 2) * bessel_k_array((a1 - a2) / 2, 2 * math.pi * Y)


def _diff_table(fn, u1, u2, h):
    """fn(u2 - u1) on the grid, computed once per distinct difference."""
    n1, n2 = len(u1), len(u2)
    k = np.arange(-(n1 - 1), n2)
    vals = fn((u2[0] - u1[0]) + k * h)
    idx = (np.arange(n2)[None, :] - np.arange(n1)[:, None]) + (n1 - 1)
    return vals[idx]


def whittaker_a_direct(a, y, h: float = _STEP) -> complex:
    """W^A_{n,a}(alpha[y]) (hatted) through the t-integral recursion, n <= 3."""
    a = as_params_a(a)
    n = a.n
    ys = _coords(y, n, "GL")
    tr = a.trace()
    scale = _cpow(ys[-1], tr)
    if n == 1:
        return complex(_cpow(ys[0], a[0]))
    if n == 2:
        return complex(scale * 2 * _cpow(ys[0], (a[0] + a[1]) / 2)
                       * bessel_k((a[0] - a[1]) / 2, 2 * math.pi * ys[0]))
    if n != 3:
        raise UnsupportedRank("direct GL evaluation is implemented for n <= 3")
    a1 = a[0]
    at = a.reduce()
    y1, y2 = ys[0], ys[1]
    u1 = _log_range((math.pi * y1) ** 2, h)
    u2 = _log_range((math.pi * y2) ** 2, h)
    W = _diff_table(lambda du: _w2_hat(at[0], at[1], y2 * np.exp(du / 2)), u1, u2, h)

    def edge(u, yj, j):
        t = np.exp(u)
        return np.exp(-(math.pi * yj) ** 2 * t - 1 / t) * _cpow(math.pi * yj, (3 - j) * a1 / 2) \
            * np.exp(u * (3 * a1 / 4))
    e1 = edge(u1, y1, 1)
    e2 = edge(u2, y2, 2) * np.exp(-(tr / 2) * (math.log(math.pi) + u2))
    val = h * h * np.einsum("i,ij,j->", e1, W, e2)
    return complex(scale * val)


def whittaker_b_direct(b, y, h: float = _STEP) -> complex:
    """W^B_{n,b}(beta[y]) (hatted) through the (t, u)-integral recursion, n <= 2."""
    b = as_params_b(b)
    n = b.n
    ys = _coords(y, n, "SO")
    if n == 1:
        return complex(2 * bessel_k(b[0] / 2, 2 * math.pi * ys[0]))
    if n != 2:
        raise UnsupportedRank("direct SO evaluation is implemented for n <= 2")
    b1, b2 = b[0], b[1]
    y1, y2 = ys
    c1, c2 = (math.pi * y1) ** 2, (math.pi * y2) ** 2
    v1 = _log_range(c1, h)
    v2 = _log_range(c2, h)
    # exp(-c1 t1 u1 / t2 - 1/u1): u1 ranges up to CUT * t2max / (c1 t1min)
    w_hi = math.log(_CUT) + v2[-1] - v1[0] - math.log(c1)
    w = np.arange(-math.log(_CUT) - h, w_hi + 2 * h, h)
    W1 = _diff_table(lambda dv: 2 * bessel_k_array(b1 / 2, 2 * math.pi * y2 * np.exp(dv / 2)),
                     w, v2, h)  # indexed [w, v2], argument v2 - w
    t1 = np.exp(v1)
    e1 = np.exp(-c1 * t1 - 1 / t1 + b2 * v1) * _cpow(math.pi * y1, b2)
    t2 = np.exp(v2)
    e2 = np.exp(-c2 * t2 - 1 / t2 + (b2 / 2) * v2) * _cpow(math.pi * y2, b2)
    uw = np.exp(w)
    ew = np.exp(-1 / uw + (b2 / 2) * w)
    # coupling exp(-c1 t1 u1 / t2) over (v1, w, v2)
    expo = v1[:, None, None] + w[None, :, None] - v2[None, None, :]
    coup = np.exp(-c1 * np.exp(expo))
    val = h ** 3 * np.einsum("i,iwj,wj,w,j->", e1, coup, W1, ew, e2)
    return complex(val)


def whittaker_a_mellin(a, y, quad: QuadPolicy | None = None) -> complex:
    """W^A_{n,a}(alpha[y]) = y_n^{|a|} (2 pi i)^{1-n} int U_{n,a}(s) prod y_j^{-s_j} ds."""
    a = as_params_a(a)
    n = a.n
    ys = _coords(y, n, "GL")
    scale = _cpow(ys[-1], a.trace())
    if n == 1:
        return complex(_cpow(ys[0], a[0]))
    names = [f"s{j}" for j in range(1, n)]
    s = [Affine.var(x) for x in names]
    expo = Affine(0.0, {x: -math.log(yj) for x, yj in zip(names, ys[:-1])})
    integral = nested_integral(names, [], prefactor=(2j * math.pi) ** (1 - n),
                               exponent=expo, u=[(a, s)])
    return complex(scale * integral.evaluate(quad))


def whittaker_b_mellin(b, y, quad: QuadPolicy | None = None) -> complex:
    """W^B_{n,b}(beta[y]) by Mellin inversion, (2 pi i)^{-n} int V(s) prod y_j^{-s_j} ds.

    The base case 2 K_{b_1/2}(2 pi y) has Mellin transform
    2^{-1} Gamma_R(s + b_1/2) Gamma_R(s - b_1/2), while V_{1,(b_1)} carries
    b_1 unhalved.  The t,u-recursion transforms level by level into the V
    recursion with b_n unchanged, so the transform of the direct route is
    V_{n,b'} with b' = (b_1/2, b_2, ..., b_n); that is what gets inverted.
    """
    b = as_params_b(b)
    n = b.n
    ys = _coords(y, n, "SO")
    b_eff = as_params_b((b[0] / 2,) + tuple(b.entries[1:]))
    names = [f"s{j}" for j in range(1, n + 1)]
    s = [Affine.var(x) for x in names]
    expo = Affine(0.0, {x: -math.log(yj) for x, yj in zip(names, ys)})
    integral = nested_integral(names, [], prefactor=(2j * math.pi) ** (-n),
                               exponent=expo, v=[(b_eff, s)])
    return complex(integral.evaluate(quad))


# ----------------------------------------------------------------------------
# Jacquet-type recursion at n = 3

_JACQUET_STEP = 0.05


def jacquet_rhs(a, y, epsrel: float = 1e-6) -> complex:
    """Right side of the x-integral recursion for W^A_{3,a}(alpha[y_1, y_2, y_3]).

    Gamma_R(a_1-a_2+1) Gamma_R(a_1-a_3+1) y_3^{|a|} y_1^{-a_1/2} y_2^{-a_1}
      * int_{R^2} W^A_{2,a~}(alpha[y_1 sqrt(q_1)/q_2, y_2 sqrt(q_2)])
        exp(-2 pi i (x_1 x_2 y_1 / q_2 + x_2 y_2)) q_1^{-3 a_1/4} dx_1 dx_2 / sqrt(q_1 q_2)

    with q_1 = 1 + x_1^2 + x_2^2 and q_2 = 1 + x_2^2.  The inner x_1-integral
    G(x_2) is done with x_1 = sqrt(q_2) sinh(v) on the shifted line
    Im v = pi/4, where the integrand decays double exponentially for every x_2.  G is even in x_2, and the outer integral is the
    cosine transform 2 int_0^inf G(x_2) cos(2 pi y_2 x_2) dx_2, whose integrand
    decays only algebraically; it goes to QUADPACK's Fourier-integral routine.
    """
    a = as_params_a(a)
    if a.n != 3:
        raise UnsupportedRank("the x-integral recursion check is implemented for n = 3")
    ys = _coords(y, 3, "GL")
    y1, y2, y3 = ys
    # the function is symmetric in a; the outer integrand decays fastest when
    # a_1 has the largest real part
    a = as_params_a(sorted(a.entries, key=lambda z: (-z.real, -z.imag)))
    a1 = a[0]
    at = a.reduce()
    tr = a.trace()
    pref = gamma_r_prod([a1 - a[1] + 1, a1 - a[2] + 1]) * _cpow(y3, tr) \
        * _cpow(y1, -a1 / 2) * _cpow(y2, -a1)
    cache = {}
    theta = math.pi / 4
    nu = (at[0] - at[1]) / 2
    half = (at[0] + at[1]) / 2

    def G(x2):
        key = float(x2)
        if key in cache:
            return cache[key]
        x2 = abs(key)
        q2 = 1.0 + x2 * x2
        r2 = math.sqrt(q2)
        # With F even in v, int F(v) cos(w r2 sinh v) dv = int F(v) exp(i w r2 sinh v) dv,
        # and the line Im v = theta turns the oscillation into decay.  On that line
        # sqrt(q_1) = r2 cosh(v + i theta) stays in the right half plane.
        decay = 2 * math.pi * y1 * (x2 * math.sin(theta) + math.cos(theta)) / r2
        vmax = math.acosh(max(1.0, 50.0 / decay)) + 1.5
        v = np.arange(-vmax, vmax + _JACQUET_STEP / 2, _JACQUET_STEP) + 1j * theta
        ch = np.cosh(v)
        x1 = r2 * np.sinh(v)
        Y1 = y1 * r2 * ch / q2
        w2 = _cpow(y2 * r2, tr) * 2.0 * np.exp(half * np.log(Y1)) \
            * bessel_k_array(nu, 2 * math.pi * Y1)
        f = w2 * _cpow(q2, -3 * a1 / 4) * np.exp((-1.5 * a1) * np.log(ch)) / r2 \
            * np.exp(2j * math.pi * y1 * x2 / q2 * x1)
        val = complex(f.sum() * _JACQUET_STEP)
        cache[key] = val
        return val

    omega = 2 * math.pi * y2

    def transform(epsabs):
        kw = dict(weight="cos", wvar=omega, epsabs=epsabs, epsrel=epsrel, limlst=200, limit=400)
        re = scipy_quad(lambda x: G(x).real, 0.0, np.inf, **kw)[0]
        im = scipy_quad(lambda x: G(x).imag, 0.0, np.inf, **kw)[0]
        return complex(re + 1j * im)

    # QAWF needs an absolute tolerance.  The transform cancels heavily (it can
    # be orders of magnitude below G(0)), so a rough pass fixes the scale of
    # the result and a second pass runs with a tolerance relative to it.
    rough = transform(1e-2 * max(abs(G(0.0)), 1e-300))
    val = transform(epsrel * max(abs(rough), 1e-12 * abs(G(0.0)), 1e-300))
    return complex(pref * 2 * val)


def verify_jacquet_recursion(a, y, quad: QuadPolicy | None = None,
                             threshold: float = 1e-3) -> VerificationReport:
    """Compare the direct t-integral value with the x-integral recursion at n = 3."""
    a = as_params_a(a)
    ys = _coords(y, 3, "GL")
    t0 = time.perf_counter()
    lhs = whittaker_a_direct(a, ys)
    rhs = jacquet_rhs(a, ys)
    return complex_report("jacquet/n=3", {"a": a.entries, "y": list(ys)}, lhs, rhs, threshold, t0)


def whittaker_routes_report(kind: str, params, y, quad=None, threshold=1e-4) -> VerificationReport:
    """Direct route against Mellin inversion at one torus point."""
    t0 = time.perf_counter()
    if kind == "GL":
        p = as_params_a(params)
        lhs, rhs = whittaker_a_direct(p, y), whittaker_a_mellin(p, y, quad)
    else:
        p = as_params_b(params)
        lhs, rhs = whittaker_b_direct(p, y), whittaker_b_mellin(p, y, quad)
    ys = list(y.coords if isinstance(y, TorusPoint) else y)
    return complex_report(f"whittaker_routes/{kind}/n={p.n}", {"params": p.entries, "y": ys},
                          lhs, rhs, threshold, t0)
