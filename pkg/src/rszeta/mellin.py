"""Mellin transforms U_{n,a} and V_{n,b} of the radial Whittaker functions.

U_{n,a} is built by unrolling its recursion down to the closed form

    U_{2,(a_1,a_2)}(s) = Gamma_R(s+a_1) Gamma_R(s+a_2) / 2,

    U_{n,a}(s) = 2^{-1} (4 pi i)^{2-n} int U_{n-1,a~}(z)
                 prod_{j=1}^{n-1} Gamma_R(s_j - z_j - j a_1/(n-1))
                                  Gamma_R(s_j - z_{j-1} + (n-j) a_1/(n-1)) dz,

with z_0 = 0 and z_{n-1} = -|a|.  Unrolling gives one flat Mellin-Barnes
integral over all levels: 1 variable for n = 3 and 3 variables for n = 4.
V_{n,b} is treated the same way starting from V_{1,(b_1)}(s) =
Gamma_R(s+b_1) Gamma_R(s-b_1) / 2; V_2 is a flat 2-variable integral.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .contour import barnes_first_lemma_rhs
from .errors import DomainError, UnsupportedRank
from .mb import Affine, MBIntegral, QuadPolicy, as_affine
from .params import as_params_a, as_params_b
from .report import VerificationReport, complex_report
from .special import gamma_r_prod

LOG_HALF = math.log(0.5)
MAX_GL_RANK = 4
MAX_SO_RANK = 2


@dataclass
class MBParts:
    """Flattened recursion data: variables, Gamma arguments and constants."""
    variables: list
    num: list
    den: list
    log_const: complex
    prefactor: complex

    def integral(self, **kw) -> MBIntegral:
        return MBIntegral(list(self.variables), list(self.num), list(self.den),
                          self.log_const, self.prefactor, **kw)


def u_parts(a, s, prefix="u") -> MBParts:
    """Unrolled data for U_{n,a}(s_1..s_{n-1}); s entries may be Affine forms."""
    a = as_params_a(a)
    n = a.n
    if n > MAX_GL_RANK:
        raise UnsupportedRank(f"U_n is implemented for n <= {MAX_GL_RANK}")
    s = [as_affine(x) for x in s]
    if len(s) != n - 1:
        raise DomainError(f"U_{n} takes {n - 1} arguments, got {len(s)}")
    if n == 1:
        return MBParts([], [], [], 0.0, 1.0)
    if n == 2:
        return MBParts([], [s[0] + a[0], s[0] + a[1]], [], LOG_HALF, 1.0)
    a1 = a[0]
    m = n - 1
    z = [Affine.var(f"{prefix}{n}_{j}") for j in range(1, n - 1)]
    zz = [Affine(0.0)] + z + [Affine(-a.trace())]
    inner = u_parts(a.reduce(), z, prefix)
    num = list(inner.num)
    for j in range(1, n):
        num.append(s[j - 1] - zz[j] - j * a1 / m)
        num.append(s[j - 1] - zz[j - 1] + (n - j) * a1 / m)
    variables = [f"{prefix}{n}_{j}" for j in range(1, n - 1)] + inner.variables
    return MBParts(variables, num, inner.den, inner.log_const + LOG_HALF,
                   inner.prefactor / (4j * math.pi) ** (n - 2))


def v_parts(b, s, prefix="v") -> MBParts:
    """Unrolled data for V_{n,b}(s_1..s_n)."""
    b = as_params_b(b)
    n = b.n
    if n > MAX_SO_RANK:
        raise UnsupportedRank(f"V_n is implemented for n <= {MAX_SO_RANK}")
    s = [as_affine(x) for x in s]
    if len(s) != n:
        raise DomainError(f"V_{n} takes {n} arguments, got {len(s)}")
    if n == 1:
        return MBParts([], [s[0] + b[0], s[0] - b[0]], [], LOG_HALF, 1.0)
    bn = b[n - 1]
    wn = [f"{prefix}{n}_w{j}" for j in range(1, n)]
    zn = [f"{prefix}{n}_z{j}" for j in range(1, n)]
    w = [Affine(0.0)] + [Affine.var(x) for x in wn]
    z = [Affine(0.0)] + [Affine.var(x) for x in zn]
    inner = v_parts(b.reduce(), z[1:], prefix)
    num = list(inner.num)
    for j in range(1, n):
        num += [s[j - 1] - w[j], s[j - 1] - w[j - 1] - bn,
                w[j] - z[j], w[j] - z[j - 1] + bn]
    num += [s[n - 1] - w[n - 1] - bn, s[n - 1] - z[n - 1] + bn]
    return MBParts(wn + zn + inner.variables, num, inner.den,
                   inner.log_const + LOG_HALF,
                   inner.prefactor / (4j * math.pi) ** (2 * n - 2))


def _values(parts_fn, params, s, quad):
    quad = quad or QuadPolicy()
    arrs = np.broadcast_arrays(*[np.asarray(x, dtype=complex) for x in s])
    shape = arrs[0].shape if arrs else ()
    flat = [x.ravel() for x in arrs]
    if shape == ():
        flat = [complex(x) for x in arrs]
    val = parts_fn(params, flat).integral().evaluate(quad)
    return np.reshape(val, shape) if shape != () else complex(val)


def u_values(a, s, quad: QuadPolicy | None = None):
    """U_{n,a} at arrays of points (entries of s broadcast against each other)."""
    return _values(u_parts, a, s, quad)


def v_values(b, s, quad: QuadPolicy | None = None):
    return _values(v_parts, b, s, quad)


def u_transform(a, s, quad: QuadPolicy | None = None) -> complex:
    """U_{n,a}(s_1, ..., s_{n-1}) for a single point."""
    return complex(u_values(a, [complex(x) for x in s], quad))


def v_transform(b, s, quad: QuadPolicy | None = None) -> complex:
    """V_{n,b}(s_1, ..., s_n) for a single point."""
    return complex(v_values(b, [complex(x) for x in s], quad))


def verify_contragredient(a, s, quad: QuadPolicy | None = None, threshold=None) -> VerificationReport:
    """Check U_{n,a}(s_{n-1}-|a|, ..., s_1-|a|) = U_{n,-a}(s_1, ..., s_{n-1})."""
    a = as_params_a(a)
    s = [complex(x) for x in s]
    t0 = time.perf_counter()
    tr = a.trace()
    lhs = u_transform(a, [x - tr for x in reversed(s)], quad)
    rhs = u_transform(-a, s, quad)
    if threshold is None:
        threshold = 1e-6 if a.n <= 3 else 1e-4
    return complex_report(f"contragredient/n={a.n}", {"a": a.entries, "s": s},
                          lhs, rhs, threshold, t0)


def nested_integral(variables, num, den=(), *, prefactor=1.0, log_const=0.0,
                    exponent=None, u=None, v=None) -> MBIntegral:
    """Mellin-Barnes integral whose integrand also contains U or V values.

    `u` and `v` are lists of (params, s_forms) pairs.  Each transform is
    unrolled into its own Gamma factors and integration variables, so the
    result is one flat integral over outer and inner variables.  Its factors
    still involve at most two variables each, which keeps the contraction
    cheap.
    """
    variables, num, den = list(variables), list(num), list(den)
    specs = [(u_parts, p, s) for p, s in (u or [])] + [(v_parts, p, s) for p, s in (v or [])]
    for k, (parts_fn, params, s_forms) in enumerate(specs):
        parts = parts_fn(params, s_forms, f"n{k}_")
        variables += parts.variables
        num += parts.num
        den += parts.den
        log_const = log_const + parts.log_const
        prefactor = prefactor * parts.prefactor
    return MBIntegral(variables, num, den, log_const, prefactor, exponent)


def _vars(prefix, k):
    names = [f"{prefix}{j}" for j in range(1, k + 1)]
    return names, [Affine.var(x) for x in names]


def _gr_prod(args):
    return gamma_r_prod(args)


def barnes_first_lemma_lhs(a, b, c, d, quad: QuadPolicy | None = None) -> complex:
    """(4 pi i)^{-1} int Gamma_R(a+z) Gamma_R(b+z) Gamma_R(c-z) Gamma_R(d-z) dz by quadrature."""
    names, z = _vars("z", 1)
    a, b, c, d = (complex(x) for x in (a, b, c, d))
    integral = MBIntegral(names, [a + z[0], b + z[0], c - z[0], d - z[0]],
                          prefactor=1 / (4j * math.pi))
    return complex(integral.evaluate(quad or QuadPolicy()))


def verify_barnes_first_lemma(a, b, c, d, quad=None, threshold=1e-8) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = barnes_first_lemma_lhs(a, b, c, d, quad)
    rhs = barnes_first_lemma_rhs(a, b, c, d)
    return complex_report("barnes_first_lemma", {"abcd": [a, b, c, d]}, lhs, rhs, threshold, t0)


def barnes_reduction_sides(part: int, n: int, gamma, delta, c, d, quad: QuadPolicy | None = None):
    """Both sides of the two Barnes-type reduction identities.

    Part 1 (n variables on the left, n-1 on the right) uses c_1..c_n and
    d_1..d_n; part 2 (n-1 variables on both sides) uses c_1..c_n and
    d_1..d_{n-1}.  c_0 = d_0 = 0.
    """
    quad = quad or QuadPolicy()
    g, dl = complex(gamma), complex(delta)
    c = [0j] + [complex(x) for x in c]
    d = [0j] + [complex(x) for x in d]
    four = 4j * math.pi
    if part == 1:
        if len(c) != n + 1 or len(d) != n + 1:
            raise DomainError("part 1 needs n entries in c and in d")
        names, z = _vars("z", n)
        num = []
        for j in range(1, n + 1):
            zj = z[j - 1]
            num += [c[j - 1] + g + zj, c[j] + zj, d[j - 1] + dl - zj, d[j] - zj]
        lhs = MBIntegral(names, num, prefactor=four ** (-n)).evaluate(quad)
        const = _gr_prod([c[1] + dl, d[1] + g, g + dl, c[n] + d[n]]) / \
            _gr_prod([g + dl + c[n] + d[n]])
        names, z = _vars("z", n - 1)
        num = []
        for j in range(1, n):
            zj = z[j - 1]
            num += [c[j] + zj, c[j + 1] + dl + zj, d[j] - zj, d[j + 1] + g - zj]
        rhs = const * MBIntegral(names, num, prefactor=four ** (-(n - 1))).evaluate(quad)
        return complex(lhs), complex(rhs)
    if part == 2:
        if n < 2 or len(c) != n + 1 or len(d) != n:
            raise DomainError("part 2 needs n >= 2, n entries in c and n-1 in d")
        names, z = _vars("z", n - 1)
        num_l, num_r = [], []
        for j in range(1, n):
            zj = z[j - 1]
            num_l += [c[j] + zj, c[j + 1] + g + zj, d[j - 1] + dl - zj, d[j] - zj]
            num_r += [c[j] + zj, c[j + 1] + dl + zj, d[j - 1] + g - zj, d[j] - zj]
        lhs = MBIntegral(names, num_l, prefactor=four ** (-(n - 1))).evaluate(quad)
        const = _gr_prod([c[1] + dl, c[n] + d[n - 1] + g]) / \
            _gr_prod([c[1] + g, c[n] + d[n - 1] + dl])
        rhs = const * MBIntegral(names, num_r, prefactor=four ** (-(n - 1))).evaluate(quad)
        return complex(lhs), complex(rhs)
    raise DomainError("part is 1 or 2")


def verify_barnes_reduction(part: int, n: int, gamma, delta, c, d, quad=None,
                      threshold=1e-6) -> VerificationReport:
    t0 = time.perf_counter()
    lhs, rhs = barnes_reduction_sides(part, n, gamma, delta, c, d, quad)
    params = {"part": part, "n": n, "gamma": gamma, "delta": delta, "c": list(c), "d": list(d)}
    return complex_report(f"barnes_reduction/part{part}/n={n}", params, lhs, rhs, threshold, t0)


verify_lem_barnes = verify_barnes_reduction


def pieri_analog_sides(kind: str, params, sigma, p, quad: QuadPolicy | None = None):
    """Left side (the transform at p) and right side (integral over q, r) of
    the shift identities for U_{n,a} (kinds gl_1, gl_2) and V_{n,b} (kind so)."""
    quad = quad or QuadPolicy()
    sg = complex(sigma)
    p = [complex(x) for x in p]
    four = 4j * math.pi
    if kind in ("gl_1", "gl_2"):
        a = as_params_a(params)
        n = a.n
        if len(p) != n - 1:
            raise DomainError(f"p needs {n - 1} entries")
        lhs = u_transform(a, p, quad)
        names, q = _vars("q", n - 1)
        num = []
        if kind == "gl_1":
            pp = [0j] + p
            for j in range(1, n):
                num += [pp[j] - q[j - 1], pp[j - 1] - q[j - 1] + sg]
            const = _gr_prod([p[n - 2] + sg + a.trace()]) / _gr_prod([sg + x for x in a])
        else:
            pp = p + [-a.trace()]
            for j in range(1, n):
                num += [pp[j - 1] - q[j - 1], pp[j] - q[j - 1] + sg]
            const = _gr_prod([p[0] + sg]) / _gr_prod([sg - x for x in a])
        integral = nested_integral(names, num, prefactor=four ** (-(n - 1)), u=[(a, q)])
        rhs = const * integral.evaluate(quad)
        return complex(lhs), complex(rhs)
    if kind == "so":
        b = as_params_b(params)
        n = b.n
        if len(p) != n:
            raise DomainError(f"p needs {n} entries")
        lhs = v_transform(b, p, quad)
        qn, q = _vars("q", n - 1)
        rn, r = _vars("r", n)
        qq = [Affine(0.0)] + q
        num = []
        for j in range(1, n):
            num += [p[j - 1] - q[j - 1], q[j - 1] - r[j - 1]]
        for j in range(1, n + 1):
            num += [p[j - 1] - qq[j - 1] + sg, qq[j - 1] - r[j - 1] + sg]
        num.append(p[n - 1] - r[n - 1])
        const = 1.0 / _gr_prod([sg + x for x in b] + [sg - x for x in b])
        integral = nested_integral(qn + rn, num, prefactor=four ** (-(2 * n - 1)), v=[(b, r)])
        rhs = const * integral.evaluate(quad)
        return complex(lhs), complex(rhs)
    raise DomainError(f"unknown kind {kind!r}")


def verify_pieri_analog(kind: str, params, sigma, p, quad=None, threshold=None) -> VerificationReport:
    t0 = time.perf_counter()
    lhs, rhs = pieri_analog_sides(kind, params, sigma, p, quad)
    n = len(params.entries if hasattr(params, "entries") else params)
    if threshold is None:
        threshold = 1e-6 if n <= 2 else 1e-4
    prm = {"kind": kind, "params": params, "sigma": sigma, "p": list(p)}
    return complex_report(f"pieri_analog/{kind}/n={n}", prm, lhs, rhs, threshold, t0)
