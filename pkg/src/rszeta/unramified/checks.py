"""Exact verifications for the unramified computations.

Every check returns a VerificationReport whose lhs/rhs are sha256 digests of
the canonical JSON serialization, so reports are byte-stable across runs.
"""
from __future__ import annotations

import time
from fractions import Fraction

from ..report import VerificationReport, exact_report
from .characters import (complete_homogeneous, schur_char, schur_oracle_holds, symplectic_char,
                         symplectic_oracle_holds, alternant, symplectic_alternant)
from .partitions import (as_parts, interlace_above, interlace_above_r, interlace_below,
                         interlace_same, partitions_of)
from .poly import FormalSeries, LaurentPoly, var_names
from .series import euler_product_series, unramified_zeta_series


def _sum(polys, vars):
    out = LaurentPoly(vars)
    for p in polys:
        out = out + p
    return out


def _params(**kw):
    return {k: list(v) if isinstance(v, tuple) else v for k, v in kw.items()}


def pieri_sides(kind: str, lam, k: int):
    """Both sides of the Pieri rule for chi_lambda * h_k."""
    lam = as_parts(lam)
    n = len(lam)
    if kind == "A":
        lhs = schur_char(lam) * complete_homogeneous("A", k, n)
        rhs = _sum((schur_char(mu) for mu in interlace_above_r(lam, k)), var_names("a", n))
        return lhs, rhs
    if kind == "C":
        lhs = symplectic_char(lam) * complete_homogeneous("B", k, n)
        w = sum(lam)
        # mu ranges over partitions whose multiplicity can be nonzero: |mu| <= |lambda| + k
        rhs = LaurentPoly(var_names("b", n))
        same_lam = set(interlace_same(lam))
        for wm in range(max(0, w - k), w + k + 1):
            for mu in partitions_of(n, wm):
                mult = sum(1 for nu in interlace_same(mu)
                           if nu in same_lam and w + wm - 2 * sum(nu) == k)
                if mult:
                    rhs = rhs + symplectic_char(mu) * mult
        return lhs, rhs
    raise ValueError(f"kind is A or C, got {kind!r}")


def verify_pieri(kind: str, lam, k: int, n: int | None = None) -> VerificationReport:
    """Exact check of the Pieri rule (GL kind A, symplectic kind C)."""
    t0 = time.perf_counter()
    lam = as_parts(lam)
    if n is not None and len(lam) != n:
        raise ValueError(f"lambda must have {n} parts")
    lhs, rhs = pieri_sides(kind, lam, k)
    rep = exact_report(f"pieri/{kind}/n={len(lam)}", _params(lam=lam, k=k), lhs, rhs, t0)
    if not rep.passed:
        diff = lhs - rhs
        rep.extra["first_difference"] = [[list(e), str(c)] for e, c in diff.sorted_terms()[:3]]
    return rep


def generating_sides(kind: str, lam, N: int):
    """Both sides of the generating identity as FormalSeries to degree N.

    gl: sum over the bar-set of t^{|mu|-|lambda|} chi^A_mu against prod_j (1 - a_j t)^{-1} chi^A_lambda.
    so: sum_mu t^k N^mu chi^C_mu, with the counting multiplicities N^mu, against
        prod_j {(1 - b_j t)(1 - b_j^{-1} t)}^{-1} chi^C_lambda.
    """
    lam = as_parts(lam)
    n = len(lam)
    if kind == "gl":
        vars = var_names("a", n)
        coeffs = [LaurentPoly(vars) for _ in range(N + 1)]
        for mu in interlace_above(lam, N):
            coeffs[sum(mu) - sum(lam)] = coeffs[sum(mu) - sum(lam)] + schur_char(mu)
        lhs = FormalSeries(coeffs, N)
        rhs = FormalSeries([schur_char(lam)], N)
        for j in range(1, n + 1):
            rhs = rhs.times_geometric(LaurentPoly.var(f"a{j}", vars=vars))
        return lhs, rhs
    if kind == "so":
        vars = var_names("b", n)
        w = sum(lam)
        same_lam = set(interlace_same(lam))
        coeffs = [LaurentPoly(vars) for _ in range(N + 1)]
        for k in range(N + 1):
            for wm in range(max(0, w - k), w + k + 1):
                if (w + wm - k) % 2:
                    continue
                for mu in partitions_of(n, wm):
                    mult = sum(1 for nu in interlace_same(mu)
                               if nu in same_lam and w + wm - 2 * sum(nu) == k)
                    if mult:
                        coeffs[k] = coeffs[k] + symplectic_char(mu) * mult
        lhs = FormalSeries(coeffs, N)
        rhs = FormalSeries([symplectic_char(lam)], N)
        for j in range(1, n + 1):
            rhs = rhs.times_geometric(LaurentPoly.var(f"b{j}", vars=vars))
            rhs = rhs.times_geometric(LaurentPoly.var(f"b{j}", -1, vars=vars))
        return lhs, rhs
    raise ValueError(f"kind is gl or so, got {kind!r}")


def verify_generating_identity(kind: str, lam, n: int | None = None, N: int = 8) -> VerificationReport:
    if N < 1:
        raise ValueError("N >= 1 required")
    t0 = time.perf_counter()
    lam = as_parts(lam)
    if n is not None and len(lam) != n:
        raise ValueError(f"lambda must have {n} parts")
    lhs, rhs = generating_sides(kind, lam, N)
    rep = exact_report(f"generating/{kind}/n={len(lam)}", _params(lam=lam, N=N), lhs, rhs, t0)
    if not rep.passed:
        rep.extra["first_mismatch_degree"] = lhs.first_mismatch(rhs)
    return rep


def verify_zeta_series(ell: int, n: int, N: int = 8) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = unramified_zeta_series(ell, n, N)
    rhs = euler_product_series(ell, n, N)
    rep = exact_report(f"unramified_zeta/l={ell}/n={n}", _params(ell=ell, n=n, N=N), lhs, rhs, t0)
    if not rep.passed:
        rep.extra["first_mismatch_degree"] = lhs.first_mismatch(rhs)
    return rep


def verify_character_oracle(kind: str, lam) -> VerificationReport:
    """Branching character times the Weyl denominator against the Weyl numerator."""
    t0 = time.perf_counter()
    lam = as_parts(lam)
    n = len(lam)
    if kind == "A":
        delta = [n - 1 - i for i in range(n)]
        lhs = schur_char(lam) * alternant(delta)
        rhs = alternant([lam[i] + delta[i] for i in range(n)])
    elif kind == "C":
        delta = [n - i for i in range(n)]
        lhs = symplectic_char(lam) * symplectic_alternant(delta)
        rhs = symplectic_alternant([lam[i] + delta[i] for i in range(n)])
    else:
        raise ValueError(f"kind is A or C, got {kind!r}")
    return exact_report(f"character_oracle/{kind}/n={n}", _params(lam=lam), lhs, rhs, t0)


def verify_branching_specialization(lam) -> VerificationReport:
    """chi^A_lambda at a_n = 1 equals the sum of chi^A_mu over P_{n-1}^+(lambda)."""
    t0 = time.perf_counter()
    lam = as_parts(lam)
    n = len(lam)
    vars = var_names("a", n)
    lhs = schur_char(lam).set_var(f"a{n}", 1)
    rhs = _sum((schur_char(mu).embed(vars) if mu else LaurentPoly.const(1, vars)
                for mu in interlace_below(lam)), vars)
    return exact_report(f"branching_specialization/n={n}", _params(lam=lam), lhs, rhs, t0)


def dimension(lam) -> int:
    """chi^A_lambda at a = (1,...,1)."""
    lam = as_parts(lam)
    val = schur_char(lam).evaluate({f"a{j}": 1 for j in range(1, len(lam) + 1)})
    return int(Fraction(val))


def unramified_suite(max_char_weight: int = 6, max_pieri_weight: int = 5, max_k: int = 4,
                     N: int = 8) -> list:
    """The full exact suite: oracles, Pieri rules, generating identities, zeta series."""
    reports = []
    for n in range(1, 5):
        for w in range(max_char_weight + 1):
            for lam in partitions_of(n, w):
                reports.append(verify_character_oracle("A", lam))
                if n <= 3:
                    reports.append(verify_character_oracle("C", lam))
    for n in range(1, 4):
        for w in range(max_pieri_weight + 1):
            for lam in partitions_of(n, w):
                for k in range(max_k + 1):
                    reports.append(verify_pieri("A", lam, k))
                    reports.append(verify_pieri("C", lam, k))
                reports.append(verify_generating_identity("gl", lam, N=N))
                reports.append(verify_generating_identity("so", lam, N=N))
    for ell, n in ((0, 1), (1, 1), (0, 2), (1, 2), (0, 3)):
        reports.append(verify_zeta_series(ell, n, N))
    return reports


__all__ = [
    "dimension", "generating_sides", "pieri_sides", "schur_oracle_holds",
    "symplectic_oracle_holds", "unramified_suite", "verify_branching_specialization",
    "verify_character_oracle", "verify_generating_identity", "verify_pieri",
    "verify_zeta_series",
]
