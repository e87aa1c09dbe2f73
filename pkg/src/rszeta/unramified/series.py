"""Unramified SO_{2n+1} x GL_{n+l} zeta integrals as power series in t = q^{-s}.

Two routes:

* unramified_zeta_series sums characters over partitions,
      J_{0,n} = sum_lambda chi^A_lambda(a) chi^C_lambda(b) t^{|lambda|},
      J_{1,n} = sum_lambda chi^A_{(lambda,0)}(a) chi^C_lambda(b) t^{|lambda|};
* euler_product_series unrolls the two rank-lowering relations
      J_{0,n;a,b} = prod_{j<=n} {(1 - a_j b_n t)(1 - a_j b_n^{-1} t)}^{-1} J_{1,n-1;a,b~}
      J_{1,n;a,b} = prod_{j<=n} {(1 - a_{n+1} b_j t)(1 - a_{n+1} b_j^{-1} t)}^{-1}
                    * prod_{j<=n} (1 - a_j a_{n+1} t^2) J_{0,n;a~,b}
  down to J_{1,0} = 1.
"""
from __future__ import annotations

from ..errors import UnsupportedRank
from .characters import schur_char, symplectic_char
from .partitions import partitions_up_to
from .poly import FormalSeries, LaurentPoly, var_names

MAX_RANK = 3
MAX_DEGREE = 10


def _check(ell, n, N):
    if ell not in (0, 1):
        raise UnsupportedRank("l must be 0 or 1")
    if not 1 <= n <= MAX_RANK:
        raise UnsupportedRank(f"n must be in 1..{MAX_RANK}")
    if not 0 <= N <= MAX_DEGREE:
        raise UnsupportedRank(f"N must be in 0..{MAX_DEGREE}")


def _all_vars(ell, n):
    return var_names("a", n + ell) + var_names("b", n)


def unramified_zeta_series(ell: int, n: int, N: int = 8) -> FormalSeries:
    """The lambda-sum to degree N with exact coefficients."""
    _check(ell, n, N)
    vars = _all_vars(ell, n)
    coeffs = [dict() for _ in range(N + 1)]
    for lam in partitions_up_to(n, N):
        ga = schur_char(lam.parts + (0,) * ell)
        sb = symplectic_char(lam.parts)
        acc = coeffs[lam.weight]
        # the two characters live in disjoint variables: concatenate exponents
        for ea, ca in ga.terms.items():
            for eb, cb in sb.terms.items():
                key = ea + eb
                v = acc.get(key, 0) + ca * cb
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
    return FormalSeries([LaurentPoly(vars, c) for c in coeffs], N)


def _mono(vars, **powers):
    e = [0] * len(vars)
    for name, p in powers.items():
        e[vars.index(name)] += p
    return LaurentPoly.monomial(vars, e)


def euler_product_series(ell: int, n: int, N: int = 8) -> FormalSeries:
    """The unrolled Euler-factor product to degree N."""
    _check(ell, n, N)
    vars = _all_vars(ell, n)
    series = FormalSeries.one(N, vars)
    a_count = n + ell
    b_count = n
    level = ell
    # walk down: (l, n) = (0, n) -> (1, n-1) -> (0, n-1) -> ...; a shrinks only on l = 1 steps
    while b_count > 0 or level == 0:
        if level == 0:
            bn = f"b{b_count}"
            for j in range(1, a_count + 1):
                aj = f"a{j}"
                series = series.times_geometric(_mono(vars, **{aj: 1, bn: 1}))
                series = series.times_geometric(_mono(vars, **{aj: 1, bn: -1}))
            b_count -= 1
            level = 1
        else:
            top = f"a{a_count}"
            for j in range(1, b_count + 1):
                bj = f"b{j}"
                series = series.times_geometric(_mono(vars, **{top: 1, bj: 1}))
                series = series.times_geometric(_mono(vars, **{top: 1, bj: -1}))
            for j in range(1, a_count):
                series = series.times_linear(_mono(vars, **{f"a{j}": 1, top: 1}), step=2)
            a_count -= 1
            level = 0
        if level == 1 and b_count == 0:
            break  # J_{1,0} = 1
    return series
