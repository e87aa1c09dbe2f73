"""Characters of GL_n(C) and Sp_n(C) by branching, plus Weyl-formula oracles.

The branching recursions are

    chi^A_lambda(a_1..a_n) = sum_{mu in P_{n-1}^+(lambda)} a_n^{|lambda|-|mu|} chi^A_mu(a_1..a_{n-1})

    chi^C_lambda(b_1..b_n) = sum_{nu in P_n^+(lambda)} sum_{mu in P_{n-1}^+(nu)}
                             b_n^{2|nu|-|lambda|-|mu|} chi^C_mu(b_1..b_{n-1})

and the oracles are the Weyl character formulas, checked in multiplied-out
form (character times denominator equals numerator) so that no polynomial
division is needed.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from ..errors import InvalidPartition
from .partitions import as_parts, interlace_below, interlace_same
from .poly import LaurentPoly, var_names


def _poly(vars, terms):
    p = LaurentPoly(vars)
    p.terms = terms
    return p


@lru_cache(maxsize=None)
def _schur_terms(lam: tuple) -> dict:
    n = len(lam)
    if n == 0:
        return {(): 1}
    w = sum(lam)
    out = {}
    for mu in interlace_below(lam):
        extra = w - sum(mu)
        for e, c in _schur_terms(mu).items():
            key = e + (extra,)
            out[key] = out.get(key, 0) + c
    return {e: c for e, c in out.items() if c}


def schur_char(lam, n: int | None = None) -> LaurentPoly:
    """chi^A_lambda as a Laurent polynomial in a_1..a_n.

    A negative last part is handled by the central twist
    chi_lambda = (a_1...a_n)^{lambda_n} chi_{lambda - lambda_n (1,...,1)}.

    >>> schur_char((1, 0)) == schur_char((1, 0), 2)
    True
    """
    lam = as_parts(lam)
    if n is not None and len(lam) != n:
        raise InvalidPartition(f"expected {n} parts, got {lam}")
    n = len(lam)
    vars = var_names("a", n)
    if n == 0:
        return LaurentPoly.const(1)
    shift = min(lam[-1], 0)
    base = tuple(x - shift for x in lam)
    terms = _schur_terms(base)
    if shift:
        terms = {tuple(x + shift for x in e): c for e, c in terms.items()}
    return _poly(vars, dict(terms))


@lru_cache(maxsize=None)
def _symp_terms(lam: tuple) -> dict:
    n = len(lam)
    if n == 0:
        return {(): 1}
    w = sum(lam)
    # collect the b_n-polynomial multiplying each chi_mu
    weights = {}
    for nu in interlace_same(lam):
        wn = sum(nu)
        for mu in interlace_below(nu):
            k = 2 * wn - w - sum(mu)
            d = weights.setdefault(mu, {})
            d[k] = d.get(k, 0) + 1
    out = {}
    for mu, powers in weights.items():
        inner = _symp_terms(mu)
        for k, m in powers.items():
            for e, c in inner.items():
                key = e + (k,)
                out[key] = out.get(key, 0) + m * c
    return {e: c for e, c in out.items() if c}


def symplectic_char(lam, n: int | None = None) -> LaurentPoly:
    """chi^C_lambda as a Laurent polynomial in b_1..b_n, for lambda in P_n^+."""
    lam = as_parts(lam)
    if n is not None and len(lam) != n:
        raise InvalidPartition(f"expected {n} parts, got {lam}")
    if lam and lam[-1] < 0:
        raise InvalidPartition(f"symplectic characters need nonnegative parts: {lam}")
    n = len(lam)
    if n == 0:
        return LaurentPoly.const(1)
    return _poly(var_names("b", n), dict(_symp_terms(lam)))


def complete_homogeneous(kind: str, k: int, n: int) -> LaurentPoly:
    """h_k(a_1..a_n) for kind "A", h_k(b_1..b_n, b_1^{-1}..b_n^{-1}) for kind "B"."""
    if k < 0:
        raise ValueError("k >= 0 required")
    if kind == "A":
        vars = var_names("a", n)
        terms = {}
        for e in _compositions(k, n):
            terms[e] = 1
        return _poly(vars, terms)
    if kind == "B":
        vars = var_names("b", n)
        terms = {}
        for e in _compositions(k, 2 * n):
            key = tuple(e[j] - e[n + j] for j in range(n))
            terms[key] = terms.get(key, 0) + 1
        return _poly(vars, terms)
    raise ValueError(f"kind is A or B, got {kind!r}")


def _compositions(k, parts):
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def _sign(perm) -> int:
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def alternant(exps, letter: str = "a") -> LaurentPoly:
    """det(x_j^{e_i})."""
    n = len(exps)
    vars = var_names(letter, n)
    terms = {}
    for perm in permutations(range(n)):
        e = [0] * n
        for i in range(n):
            e[perm[i]] = exps[i]
        key = tuple(e)
        terms[key] = terms.get(key, 0) + _sign(perm)
    return _poly(vars, {e: c for e, c in terms.items() if c})


def symplectic_alternant(exps) -> LaurentPoly:
    """det(b_j^{e_i} - b_j^{-e_i})."""
    n = len(exps)
    vars = var_names("b", n)
    terms = {}
    for perm in permutations(range(n)):
        sg = _sign(perm)
        for signs in product((1, -1), repeat=n):
            e = [0] * n
            c = sg
            for i in range(n):
                e[perm[i]] = signs[i] * exps[i]
                if signs[i] < 0:
                    c = -c
            key = tuple(e)
            terms[key] = terms.get(key, 0) + c
    return _poly(vars, {e: c for e, c in terms.items() if c})


def schur_oracle_holds(lam) -> bool:
    """chi^A_lambda * det(a_j^{n-i}) == det(a_j^{lambda_i+n-i})."""
    lam = as_parts(lam)
    n = len(lam)
    delta = [n - 1 - i for i in range(n)]
    lhs = schur_char(lam) * alternant(delta)
    rhs = alternant([lam[i] + delta[i] for i in range(n)])
    return lhs == rhs


def symplectic_oracle_holds(lam) -> bool:
    """chi^C_lambda * det(b_j^{n-i+1} - b_j^{-(n-i+1)}) == det(b_j^{l_i} - b_j^{-l_i}),
    l_i = lambda_i + n - i + 1."""
    lam = as_parts(lam)
    n = len(lam)
    delta = [n - i for i in range(n)]
    lhs = symplectic_char(lam) * symplectic_alternant(delta)
    rhs = symplectic_alternant([lam[i] + delta[i] for i in range(n)])
    return lhs == rhs
