"""Archimedean Rankin-Selberg zeta integrals for GL_n x GL_m and SO_{2n+1} x GL_m.

The integral side of every identity is a Mellin-Barnes integral built from
the unrolled transforms U_{n,a} and V_{n,b}; the closed side is a product of
Gamma_R values, possibly times a one-dimensional Barnes-type correction.

Naming: I_{n,m;a,a'} is the GL_n x GL_m integral, J_{l,n;a,b} the
SO_{2n+1} x GL_{n+l} one.
"""
from __future__ import annotations

import math
import time

import numpy as np

from .errors import DomainError, UnsupportedRank
from .mb import Affine, MBIntegral, QuadPolicy
from .mellin import MAX_GL_RANK, MAX_SO_RANK, nested_integral
from .params import SpectralParamsA, as_params_a, as_params_b
from .report import VerificationReport, complex_report
from .special import gamma_r_prod

TWO_PI_I = 2j * math.pi
FOUR_PI_I = 4j * math.pi


def _sa(x, size=None, what="a") -> SpectralParamsA:
    p = as_params_a(x)
    if size is not None and p.n != size:
        raise DomainError(f"{what} needs {size} entries, got {p.n}")
    return p


# ----------------------------------------------------------------------------
# GL_n x GL_m

def l_factor_gl(a, a_prime, s) -> complex:
    """prod_{j,k} Gamma_R(s + a_j + a'_k)."""
    s = complex(s)
    return gamma_r_prod([s + x + y for x in as_params_a(a) for y in as_params_a(a_prime)])


def zeta_gl_integral(n: int, m: int, a, a_prime, s) -> MBIntegral:
    """The Barnes form of I_{n,m;a,a'}(s) as an unevaluated integral.

    m = n:  Gamma_R(ns + |a| + |a'|) 2^{n-1} (2 pi i)^{1-n}
            int U_{n,a}(s - s_1, ..., (n-1)s - s_{n-1}) U_{n,a'}(s_1, ..., s_{n-1}) ds
    m < n:  2^m (2 pi i)^{2-n} int U_{n,a}(s - s_1, ..., (m-1)s - s_{m-1}, ms + |a'|,
            s_{m+1}, ..., s_{n-1}) U_{m,a'}(s_1, ..., s_{m-1}) ds
    """
    a = _sa(a, n)
    ap = _sa(a_prime, m, "a'")
    s = complex(s)
    if n > MAX_GL_RANK or m > n or m < 1 or (m == n and n > 3):
        raise UnsupportedRank(f"I_{{{n},{m}}} is not supported")
    if m == n:
        names = [f"s{j}" for j in range(1, n)]
        sv = [Affine.var(x) for x in names]
        left = [j * s - sv[j - 1] for j in range(1, n)]
        head = Affine(n * s + a.trace() + ap.trace())
        return nested_integral(names, [head], prefactor=2.0 ** (n - 1) / TWO_PI_I ** (n - 1),
                               u=[(a, left), (ap, sv)])
    inner = [f"s{j}" for j in range(1, m)]
    outer = [f"s{j}" for j in range(m + 1, n)]
    sv = {x: Affine.var(x) for x in inner + outer}
    args = [j * s - sv[f"s{j}"] for j in range(1, m)]
    args.append(Affine(m * s + ap.trace()))
    args += [sv[x] for x in outer]
    return nested_integral(inner + outer, [], prefactor=2.0 ** m / TWO_PI_I ** (n - 2),
                           u=[(a, args), (ap, [sv[x] for x in inner])])


def zeta_gl(n: int, m: int, a, a_prime, s, quad: QuadPolicy | None = None) -> complex:
    """I_{n,m;a,a'}(s) by numerical evaluation of its Barnes form.

    I_{1,0} is the empty integral and equals 1.

    >>> abs(zeta_gl(2, 1, (0, 0), (0,), 1.0) - 1.0) < 1e-14
    True
    """
    if n == 1 and m == 0:
        return 1.0 + 0j
    return complex(zeta_gl_integral(n, m, a, a_prime, s).evaluate(quad))


def barnes_correction_gl(a, a_prime, s, quad: QuadPolicy | None = None, sigma=None) -> complex:
    """(1/4 pi i) int prod_{j<=n} Gamma_R(w - a_j) / prod_{j<=n-2} Gamma_R(s + w + a'_j) dw."""
    a = as_params_a(a)
    ap = as_params_a(a_prime)
    if ap.n != a.n - 2:
        raise DomainError("a' needs n - 2 entries")
    s = complex(s)
    w = Affine.var("w")
    integral = MBIntegral(["w"], [w - x for x in a], [s + w + x for x in ap],
                          prefactor=1 / FOUR_PI_I)
    return complex(integral.evaluate(quad, sigma=None if sigma is None else [float(sigma)]))


def zeta_gl_dual(n: int, a, a_prime, s, quad: QuadPolicy | None = None) -> complex:
    """I^vee_{n,n-2;a,a'}(s) through its closed form

    prod Gamma_R(s - a_j - a'_k) * (1/4 pi i) int prod Gamma_R(w - a_j)
                                   / prod Gamma_R(1 - s + w + a'_j) dw.
    """
    a = _sa(a, n)
    ap = _sa(a_prime, n - 2, "a'")
    s = complex(s)
    lf = gamma_r_prod([s - x - y for x in a for y in ap])
    return lf * barnes_correction_gl(a, ap, 1 - s, quad)


def _dual_from_chain(n: int, a, a_prime, s, quad=None, prefactor=1 / FOUR_PI_I) -> complex:
    """I^vee_{n,n-2} as a w-integral of closed-form I_{n,n-1;-a,a^vee} values.

    I_{n,n-1;-a,a^vee}(x) / prod_{j=2}^{n-1} Gamma_R(a^vee_1 - a^vee_j + 1) with
    x = 3/2 + (w + |a'| - 1)/(n - 1), a^vee_1 = (n-2)(x - s) and
    a^vee_j = x - s - a'_{j-1}... written out below.  Used only to pin down
    the constant in front of the w-integral (1/4 pi i against 1/2 pi i).
    """
    a = _sa(a, n)
    ap = _sa(a_prime, n - 2, "a'")
    s = complex(s)
    w = Affine.var("w")
    x = 1.5 + (w + ap.trace() - 1) * (1.0 / (n - 1))
    av = [(n - 2) * (x - s)] + [-ap[j - 2] + s - x for j in range(2, n)]
    num = [x - aj + ak for aj in a for ak in av]
    den = [av[0] - av[j] + 1 for j in range(1, n - 1)]
    return complex(MBIntegral(["w"], num, den, prefactor=prefactor).evaluate(quad))


def verify_gl_l_factor(n, m, a, a_prime, s, quad=None, threshold=None) -> VerificationReport:
    """I_{n,m} (quadrature) against the L-factor, for m = n or m = n - 1."""
    t0 = time.perf_counter()
    threshold = threshold or (1e-7 if n <= 2 else 1e-6)
    lhs = zeta_gl(n, m, a, a_prime, s, quad)
    rhs = l_factor_gl(a, a_prime, s)
    return complex_report(f"gl_zeta_l_factor/n={n},m={m}", _gl_params(a, a_prime, s),
                          lhs, rhs, threshold, t0)


def verify_gl_barnes_correction(n, a, a_prime, s, quad=None, threshold=1e-5) -> VerificationReport:
    """I_{n,n-2} (quadrature) against L-factor times the correction integral."""
    t0 = time.perf_counter()
    lhs = zeta_gl(n, n - 2, a, a_prime, s, quad)
    rhs = l_factor_gl(a, a_prime, s) * barnes_correction_gl(a, a_prime, s, quad)
    return complex_report(f"gl_zeta_barnes_correction/n={n},m={n - 2}",
                          _gl_params(a, a_prime, s), lhs, rhs, threshold, t0)


def verify_gl_functional_equation(n, a, a_prime, s, quad=None, threshold=1e-5) -> VerificationReport:
    """I_{n,n-2}(s) / L(s) against I^vee_{n,n-2}(1-s) / prod Gamma_R(1 - s - a_j - a'_k)."""
    t0 = time.perf_counter()
    a = _sa(a, n)
    ap = _sa(a_prime, n - 2, "a'")
    s = complex(s)
    lhs = zeta_gl(n, n - 2, a, ap, s, quad) / l_factor_gl(a, ap, s)
    rhs = zeta_gl_dual(n, a, ap, 1 - s, quad) / gamma_r_prod([1 - s - x - y for x in a for y in ap])
    return complex_report(f"gl_functional_equation/n={n}", _gl_params(a, ap, s),
                          lhs, rhs, threshold, t0)


def verify_gl_recursion(which: str, n: int, a, a_prime, s, quad=None,
                        threshold=1e-5) -> VerificationReport:
    """Rank-lowering relations between the GL zeta integrals.

    nn_to_nm:      I_{n,n;a,a'}(s) = prod_j Gamma_R(s + a'_1 + a_j) I_{n,n-1;a,a~'}(s - a'_1/(n-1))
    nm_to_smaller: I_{n,n-1;a,a'}(s) = prod_j Gamma_R(s + a_1 + a'_j) I_{n-1,n-1;a~,a'}(s - a_1/(n-1))

    The smaller integral in the second relation has rank n-1 in both slots:
    a~ and a' both have n-1 entries.
    """
    t0 = time.perf_counter()
    s = complex(s)
    a = _sa(a, n)
    if which == "nn_to_nm":
        ap = _sa(a_prime, n, "a'")
        apt = as_params_a(tuple(x + ap[0] / (n - 1) for x in ap.entries[1:]))
        lhs = zeta_gl(n, n, a, ap, s, quad)
        rhs = gamma_r_prod([s + ap[0] + x for x in a]) * \
            zeta_gl(n, n - 1, a, apt, s - ap[0] / (n - 1), quad)
    elif which == "nm_to_smaller":
        ap = _sa(a_prime, n - 1, "a'")
        lhs = zeta_gl(n, n - 1, a, ap, s, quad)
        rhs = gamma_r_prod([s + a[0] + x for x in ap]) * \
            zeta_gl(n - 1, n - 1, a.reduce(), ap, s - a[0] / (n - 1), quad)
    else:
        raise DomainError(f"unknown relation {which!r}")
    return complex_report(f"gl_zeta_recursion/{which}/n={n}", _gl_params(a, ap, s),
                          lhs, rhs, threshold, t0)


def _gl_params(a, ap, s):
    return {"a": as_params_a(a).entries, "a_prime": as_params_a(ap).entries, "s": complex(s)}


# ----------------------------------------------------------------------------
# SO_{2n+1} x GL_m

def l_factor_so_r(a, b, s) -> complex:
    """L(s; a, b, r) = prod_{j,k} Gamma_R(s + a_j + b_k) Gamma_R(s + a_j - b_k)."""
    s = complex(s)
    a, b = as_params_a(a), as_params_b(b)
    return gamma_r_prod([s + x + e * y for x in a for y in b for e in (1, -1)])


def l_factor_wedge2(a, s) -> complex:
    """L(s; a, wedge^2) = prod_{j<k} Gamma_R(s + a_j + a_k)."""
    s = complex(s)
    e = as_params_a(a).entries
    return gamma_r_prod([s + e[j] + e[k] for j in range(len(e)) for k in range(j + 1, len(e))])


def l_factor_so(a, b, s) -> complex:
    """L(s; a, b, r) / L(2s; a, wedge^2)."""
    s = complex(s)
    return l_factor_so_r(a, b, s) / l_factor_wedge2(a, 2 * s)


def barnes_correction_so(a, b, s, quad: QuadPolicy | None = None, sigma=None) -> complex:
    """(1/4 pi i) int prod_k Gamma_R(w + b_k) Gamma_R(w - b_k)
                     / prod_j Gamma_R(1 - s + w - a_j) Gamma_R(s + w + a_j) dw."""
    a, b = as_params_a(a), as_params_b(b)
    if a.n != b.n - 1:
        raise DomainError("a needs n - 1 entries for b with n entries")
    s = complex(s)
    w = Affine.var("w")
    num = [w + e * y for y in b for e in (1, -1)]
    den = [d for x in a for d in (1 - s + w - x, s + w + x)]
    integral = MBIntegral(["w"], num, den, prefactor=1 / FOUR_PI_I)
    return complex(integral.evaluate(quad, sigma=None if sigma is None else [float(sigma)]))


def so_closed_form(ell: int, a, b, s, quad: QuadPolicy | None = None) -> complex:
    """Closed form of J_{l,n;a,b}(s); for l = -1 it includes the correction integral."""
    a, b = as_params_a(a), as_params_b(b)
    if a.n != b.n + ell or ell not in (-1, 0, 1):
        raise DomainError(f"l = {ell} needs a with n + l entries")
    val = l_factor_so(a, b, s)
    if ell == -1:
        val = val * barnes_correction_so(a, b, s, quad)
    return val


def zeta_so_integral(ell: int, n: int, a, b, s) -> MBIntegral:
    """Mellin pairing for J_{0,n} and J_{1,n}.

    J_{0,n} = 2^n (2 pi i)^{1-n} int U_{n,a}(s_1..s_{n-1})
              V_{n,b}(s - s_1, ..., (n-1)s - s_{n-1}, ns + |a|) ds
    J_{1,n} = 2^n (2 pi i)^{-n} int U_{n+1,a}(s_1..s_n) V_{n,b}(s - s_1, ..., ns - s_n) ds
    """
    b = as_params_b(b)
    if b.n != n:
        raise DomainError(f"b needs {n} entries")
    if n > MAX_SO_RANK:
        raise UnsupportedRank(f"the Mellin pairing is implemented for n <= {MAX_SO_RANK}")
    s = complex(s)
    if ell == 0:
        a = _sa(a, n)
        names = [f"s{j}" for j in range(1, n)]
        sv = [Affine.var(x) for x in names]
        vargs = [j * s - sv[j - 1] for j in range(1, n)] + [Affine(n * s + a.trace())]
        return nested_integral(names, [], prefactor=2.0 ** n / TWO_PI_I ** (n - 1),
                               u=[(a, sv)], v=[(b, vargs)])
    if ell == 1:
        a = _sa(a, n + 1)
        names = [f"s{j}" for j in range(1, n + 1)]
        sv = [Affine.var(x) for x in names]
        vargs = [j * s - sv[j - 1] for j in range(1, n + 1)]
        return nested_integral(names, [], prefactor=2.0 ** n / TWO_PI_I ** n,
                               u=[(a, sv)], v=[(b, vargs)])
    raise UnsupportedRank("the Mellin pairing covers l = 0 and l = 1")


def zeta_so(ell: int, n: int, a, b, s, quad: QuadPolicy | None = None) -> complex:
    """J_{l,n;a,b}(s).  l = 0, 1 by Mellin pairing; l = -1 by its closed form."""
    if ell == -1:
        a, b = as_params_a(a), as_params_b(b)
        if b.n != n or a.n != n - 1:
            raise DomainError("l = -1 needs a with n - 1 and b with n entries")
        return so_closed_form(-1, a, b, s, quad)
    return complex(zeta_so_integral(ell, n, a, b, s).evaluate(quad))


def verify_so_l_factor(ell, n, a, b, s, quad=None, threshold=1e-7) -> VerificationReport:
    """Mellin pairing against L(s; a, b, r) / L(2s; a, wedge^2)."""
    t0 = time.perf_counter()
    lhs = zeta_so(ell, n, a, b, s, quad)
    rhs = so_closed_form(ell, a, b, s)
    return complex_report(f"so_zeta_l_factor/l={ell}/n={n}", _so_params(a, b, s),
                          lhs, rhs, threshold, t0)


def verify_so_recursion(part: int, n: int, a, b, s, quad=None, route="closed",
                        threshold=1e-5) -> VerificationReport:
    """Rank-lowering relations between J_{0,n} and J_{1,n-1} (part 1) and between
    J_{1,n} and J_{0,n} (part 2).

    part 1: J_{0,n;a,b}(s) = prod_j Gamma_R(s + a_j + b_n) Gamma_R(s + a_j - b_n) J_{1,n-1;a,b~}(s)
    part 2: J_{1,n;a,b}(s) = prod_j Gamma_R(s + a_1 +/- b_j) / prod_j Gamma_R(2s + a_1 + a_{j+1})
                             * J_{0,n;a~,b}(s - a_1/n),  a~_j = a_{j+1} + a_1/n

    With route="closed" every J is its closed form; route="mellin" evaluates
    the left side by the Mellin pairing instead.
    """
    t0 = time.perf_counter()
    s = complex(s)
    a, b = as_params_a(a), as_params_b(b)

    def J(ell, nn, aa, bb, ss, left=False):
        if left and route == "mellin":
            return zeta_so(ell, nn, aa, bb, ss, quad)
        if nn == 0:
            return 1.0 + 0j
        return so_closed_form(ell, aa, bb, ss)

    if part == 1:
        if a.n != n or b.n != n:
            raise DomainError("part 1 needs a and b with n entries")
        lhs = J(0, n, a, b, s, left=True)
        bt = as_params_b(b.entries[:-1]) if n > 1 else None
        pre = gamma_r_prod([s + x + e * b[n - 1] for x in a for e in (1, -1)])
        rhs = pre * (J(1, n - 1, a, bt, s) if n > 1 else 1.0)
    elif part == 2:
        if a.n != n + 1 or b.n != n:
            raise DomainError("part 2 needs a with n + 1 and b with n entries")
        lhs = J(1, n, a, b, s, left=True)
        at = as_params_a(tuple(x + a[0] / n for x in a.entries[1:]))
        pre = gamma_r_prod([s + a[0] + e * y for y in b for e in (1, -1)]) / \
            gamma_r_prod([2 * s + a[0] + x for x in a.entries[1:]])
        rhs = pre * J(0, n, at, b, s - a[0] / n)
    else:
        raise DomainError("part is 1 or 2")
    return complex_report(f"so_zeta_recursion/part{part}/n={n}", _so_params(a, b, s),
                          lhs, rhs, threshold, t0)


def verify_so_functional_equation(n, a, b, s, quad=None, threshold=1e-6) -> VerificationReport:
    """J_{-1,n} / [L(s;a,b,r) / L(2s;a,wedge^2)] is unchanged by (s, a, b) -> (1-s, -a, -b)."""
    t0 = time.perf_counter()
    a, b = as_params_a(a), as_params_b(b)
    s = complex(s)
    lhs = zeta_so(-1, n, a, b, s, quad) / l_factor_so(a, b, s)
    rhs = zeta_so(-1, n, -a, -b, 1 - s, quad) / l_factor_so(-a, -b, 1 - s)
    return complex_report(f"so_functional_equation/n={n}", _so_params(a, b, s),
                          lhs, rhs, threshold, t0)


def _so_params(a, b, s):
    return {"a": as_params_a(a).entries, "b": as_params_b(b).entries, "s": complex(s)}
