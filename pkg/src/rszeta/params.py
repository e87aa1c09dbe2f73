"""Spectral parameters and torus points."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def _cvec(entries):
    out = tuple(complex(x) for x in entries)
    for x in out:
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise DomainError("spectral parameters must be finite")
    return out


@dataclass(frozen=True)
class SpectralParamsA:
    """GL_n spectral parameter a = (a_1, ..., a_n)."""
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _cvec(self.entries))
        if len(self.entries) < 1:
            raise DomainError("need n >= 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def trace(self) -> complex:
        return sum(self.entries, 0j)

    def reduce(self) -> "SpectralParamsA":
        """a~_j = a_{j+1} + a_1/(n-1), j = 1..n-1 (same trace as a)."""
        n = self.n
        if n < 2:
            raise DomainError("reduce() needs n >= 2")
        a1 = self.entries[0]
        return SpectralParamsA(tuple(x + a1 / (n - 1) for x in self.entries[1:]))

    def __neg__(self):
        return SpectralParamsA(tuple(-x for x in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class SpectralParamsB:
    """SO_{2n+1} spectral parameter b = (b_1, ..., b_n)."""
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _cvec(self.entries))
        if len(self.entries) < 1:
            raise DomainError("need n >= 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def reduce(self) -> "SpectralParamsB":
        """b~ = (b_1, ..., b_{n-1})."""
        if self.n < 2:
            raise DomainError("reduce() needs n >= 2")
        return SpectralParamsB(self.entries[:-1])

    def __neg__(self):
        return SpectralParamsB(tuple(-x for x in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return self.n


def as_params_a(a) -> SpectralParamsA:
    return a if isinstance(a, SpectralParamsA) else SpectralParamsA(tuple(a))


def as_params_b(b) -> SpectralParamsB:
    return b if isinstance(b, SpectralParamsB) else SpectralParamsB(tuple(b))


@dataclass(frozen=True)
class TorusPoint:
    """Positive torus coordinates y = (y_1, ..., y_n).

    For GL_n the point stands for alpha[y] = diag(y_1...y_n, ..., y_{n-1} y_n, y_n),
    for SO_{2n+1} for the matching beta[y].
    """
    coords: tuple
    group_kind: str = "GL"

    def __post_init__(self):
        c = tuple(float(y) for y in self.coords)
        if not c or any(not (y > 0 and math.isfinite(y)) for y in c):
            raise DomainError("torus coordinates must be positive and finite")
        if self.group_kind not in ("GL", "SO"):
            raise DomainError("group_kind is GL or SO")
        object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return len(self.coords)

    def rho_shift(self) -> float:
        """y^{rho,A} = prod y_j^{j(n-j)/2} or y^{rho,B} = prod y_j^{j(n-j/2)}."""
        n = self.n
        logs = np.log(self.coords)
        if self.group_kind == "GL":
            e = [j * (n - j) / 2 for j in range(1, n + 1)]
        else:
            e = [j * (n - j / 2) for j in range(1, n + 1)]
        return float(np.exp(np.dot(e, logs)))
