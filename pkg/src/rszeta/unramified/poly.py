"""Sparse Laurent polynomials and truncated power series with exact coefficients.

Coefficients are Python ints or fractions.Fraction; both are exact, and ints
are kept where possible because they are much faster.  Variables are named
"a1", "a2", ..., "b1", ...; a polynomial carries the tuple of its variable
names and maps exponent tuples (negative entries allowed) to coefficients.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

_VAR = re.compile(r"^([a-z]+)(\d+)$")


def var_key(name: str):
    m = _VAR.match(name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    return (m.group(1), int(m.group(2)))


def var_names(letter: str, n: int) -> tuple:
    return tuple(f"{letter}{j}" for j in range(1, n + 1))


def _union(v1, v2):
    return tuple(sorted(set(v1) | set(v2), key=var_key))


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = {}
        for e, c in (terms or {}).items():
            if c != 0:
                if len(e) != len(self.vars):
                    raise ValueError("exponent length does not match the variables")
                self.terms[tuple(e)] = _clean(c)

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c, vars=()):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars, exps, c=1):
        return cls(vars, {tuple(exps): c})

    @classmethod
    def var(cls, name, power=1, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        e = [0] * len(vars)
        e[vars.index(name)] = power
        return cls(vars, {tuple(e): 1})

    # structure ------------------------------------------------------------
    def embed(self, vars) -> "LaurentPoly":
        """Same polynomial over a larger variable tuple."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        out = {}
        k = len(vars)
        for e, c in self.terms.items():
            ne = [0] * k
            for p, x in zip(pos, e):
                ne[p] = x
            out[tuple(ne)] = c
        p = LaurentPoly(vars)
        p.terms = out
        return p

    def _align(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        vs = _union(self.vars, other.vars)
        return self.embed(vs), other.embed(vs)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        x, y = self._align(other)
        out = dict(x.terms)
        for e, c in y.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = LaurentPoly(x.vars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = LaurentPoly(self.vars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        x, y = self._align(other)
        return x + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if other == 0:
                return LaurentPoly(self.vars)
            p = LaurentPoly(self.vars)
            p.terms = {e: _clean(c * other) for e, c in self.terms.items()}
            return p
        x, y = self._align(other)
        out = {}
        for e1, c1 in x.terms.items():
            for e2, c2 in y.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = LaurentPoly(x.vars)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.vars)
        x, y = self._align(other)
        return x.terms == y.terms

    def __hash__(self):
        return hash(self.digest())

    def substitute_inverse(self, name) -> "LaurentPoly":
        """The polynomial with `name` replaced by its reciprocal."""
        i = self.vars.index(name)
        p = LaurentPoly(self.vars)
        p.terms = {e[:i] + (-e[i],) + e[i + 1:]: c for e, c in self.terms.items()}
        return p

    def permute(self, perm) -> "LaurentPoly":
        """Exponent slots reordered: new slot j takes old slot perm[j]."""
        p = LaurentPoly(self.vars)
        p.terms = {tuple(e[k] for k in perm): c for e, c in self.terms.items()}
        return p

    def set_var(self, name, value) -> "LaurentPoly":
        """Substitute a number for one variable (the variable is kept with exponent 0)."""
        i = self.vars.index(name)
        out = LaurentPoly(self.vars)
        for e, c in self.terms.items():
            x = Fraction(value) ** e[i]
            out = out + LaurentPoly(self.vars, {e[:i] + (0,) + e[i + 1:]: c * x})
        return out

    def evaluate(self, point: dict):
        total = 0
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, x in zip(self.vars, e):
                term *= Fraction(point[v]) ** x
            total += term
        return _clean(total)

    # serialization --------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            f = Fraction(c)
            terms.append({"exps": list(e), "num": str(f.numerator), "den": str(f.denominator)})
        return {"vars": list(self.vars), "terms": terms}

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{v}^{x}" if x != 1 else v for v, x in zip(self.vars, e) if x)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


class FormalSeries:
    """sum_{k <= N} c_k t^k with LaurentPoly coefficients, truncated at degree N."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs, N: int):
        self.N = int(N)
        cs = list(coeffs)[: self.N + 1]
        vars = ()
        for c in cs:
            if isinstance(c, LaurentPoly):
                vars = _union(vars, c.vars)
        cs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c, vars) for c in cs]
        cs = [c.embed(_union(c.vars, vars)) for c in cs]
        while len(cs) < self.N + 1:
            cs.append(LaurentPoly(vars))
        self.coeffs = cs

    @property
    def vars(self):
        return self.coeffs[0].vars if self.coeffs else ()

    @classmethod
    def one(cls, N, vars=()):
        return cls([LaurentPoly.const(1, vars)], N)

    @classmethod
    def geometric(cls, x: LaurentPoly, N: int, step: int = 1) -> "FormalSeries":
        """(1 - x t^step)^{-1} = sum_k x^k t^{k step}."""
        cs = [LaurentPoly(x.vars) for _ in range(N + 1)]
        p = LaurentPoly.const(1, x.vars)
        for k in range(0, N + 1, step):
            cs[k] = p
            p = p * x
        return cls(cs, N)

    @classmethod
    def linear(cls, x: LaurentPoly, N: int, step: int = 1) -> "FormalSeries":
        """1 - x t^step."""
        cs = [LaurentPoly.const(1, x.vars)]
        if step <= N:
            cs += [LaurentPoly(x.vars)] * (step - 1) + [-x]
        return cls(cs, N)

    def times_geometric(self, x: LaurentPoly, step: int = 1) -> "FormalSeries":
        """self * (1 - x t^step)^{-1}, by T_k = S_k + x T_{k-step}."""
        vs = _union(self.vars, x.vars)
        x = x.embed(vs)
        out = []
        for k, c in enumerate(self.coeffs):
            c = c.embed(vs)
            out.append(c + x * out[k - step] if k >= step else c)
        return FormalSeries(out, self.N)

    def times_linear(self, x: LaurentPoly, step: int = 1) -> "FormalSeries":
        """self * (1 - x t^step)."""
        vs = _union(self.vars, x.vars)
        x = x.embed(vs)
        cs = [c.embed(vs) for c in self.coeffs]
        out = [c - x * cs[k - step] if k >= step else c for k, c in enumerate(cs)]
        return FormalSeries(out, self.N)

    def __add__(self, other):
        N = min(self.N, other.N)
        return FormalSeries([a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs[: N + 1])], N)

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return FormalSeries([c * other for c in self.coeffs], self.N)
        N = min(self.N, other.N)
        vs = _union(self.vars, other.vars)
        x = [c.embed(vs) for c in self.coeffs]
        y = [c.embed(vs) for c in other.coeffs]
        out = [LaurentPoly(vs) for _ in range(N + 1)]
        for i in range(N + 1):
            if x[i].is_zero():
                continue
            for j in range(N + 1 - i):
                if not y[j].is_zero():
                    out[i + j] = out[i + j] + x[i] * y[j]
        return FormalSeries(out, N)

    __rmul__ = __mul__

    def embed(self, vars):
        return FormalSeries([c.embed(vars) for c in self.coeffs], self.N)

    def __eq__(self, other):
        if not isinstance(other, FormalSeries) or self.N != other.N:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def first_mismatch(self, other):
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        return None

    def to_json(self) -> dict:
        vs = self.vars
        return {"N": self.N, "vars": list(vs),
                "coefficients": [c.embed(vs).to_json()["terms"] for c in self.coeffs]}

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def __repr__(self):
        return f"FormalSeries(N={self.N}, terms={[len(c) for c in self.coeffs]})"
