"""Integer partitions with at most n parts and the interlacing sets used by the
branching and Pieri rules."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..errors import InvalidPartition


@dataclass(frozen=True, order=True)
class Partition:
    """lambda_1 >= ... >= lambda_n; a negative last part needs signed_last=True."""
    parts: tuple
    signed_last: bool = False

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", p)
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise InvalidPartition(f"parts must be weakly decreasing: {p}")
        if p and p[-1] < 0 and not self.signed_last:
            raise InvalidPartition(f"negative last part needs signed_last=True: {p}")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def is_nonneg(self) -> bool:
        return not self.parts or self.parts[-1] >= 0


def as_parts(lam) -> tuple:
    if isinstance(lam, Partition):
        return lam.parts
    p = tuple(int(x) for x in lam)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidPartition(f"parts must be weakly decreasing: {p}")
    return p


def _check_plus(lam):
    if lam and lam[-1] < 0:
        raise InvalidPartition(f"expected nonnegative parts: {lam}")


@lru_cache(maxsize=None)
def _parts_of(n: int, w: int, top: int) -> tuple:
    """Weakly decreasing n-tuples of nonnegative ints with sum w, first part <= top."""
    if n == 0:
        return ((),) if w == 0 else ()
    out = []
    for first in range(min(w, top), -1, -1):
        if first * n < w:
            break
        for rest in _parts_of(n - 1, w - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, w: int) -> list:
    """All lambda in P_n^+ with |lambda| = w, lexicographically increasing."""
    return sorted(_parts_of(n, w, w))


def partitions_up_to(n: int, N: int) -> list:
    """All lambda in P_n^+ with |lambda| <= N, by weight and then lexicographically.

    >>> [p.parts for p in partitions_up_to(2, 2)]
    [(0, 0), (1, 0), (1, 1), (2, 0)]
    """
    if n < 1 or N < 0:
        raise ValueError("need n >= 1 and N >= 0")
    return [Partition(p) for w in range(N + 1) for p in partitions_of(n, w)]


def interlace_below(lam) -> list:
    """P_{n-1}^+(lambda): lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n."""
    lam = as_parts(lam)
    n = len(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]
    return [tuple(m) for m in product(*ranges)]


def interlace_same(lam) -> list:
    """P_n^+(lambda): lambda_1 >= mu_1 >= ... >= lambda_n >= mu_n >= 0."""
    lam = as_parts(lam)
    _check_plus(lam)
    n = len(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)] + [range(0, lam[-1] + 1)]
    return [tuple(m) for m in product(*ranges)]


def interlace_above(lam, max_extra: int) -> list:
    """Elements of the bar-set of lambda (mu_1 >= lambda_1 >= mu_2 >= ... >= mu_n >= lambda_n)
    with |mu| - |lambda| <= max_extra.  The full set is infinite because mu_1 is
    unbounded, so a weight cap is required."""
    lam = as_parts(lam)
    _check_plus(lam)
    n = len(lam)
    rest = [range(lam[i], lam[i - 1] + 1) for i in range(1, n)]
    out = []
    w0 = sum(lam)
    for tail in product(*rest):
        extra_tail = sum(tail) - sum(lam[1:])
        for m1 in range(lam[0], lam[0] + max_extra - extra_tail + 1):
            mu = (m1,) + tuple(tail)
            if sum(mu) - w0 <= max_extra:
                out.append(mu)
    return sorted(out)


def interlace_same_r(lam, r: int) -> list:
    """P_{n,r}^+(lambda): elements of P_n^+(lambda) with |lambda| - |mu| = r."""
    w = sum(as_parts(lam))
    return [m for m in interlace_same(lam) if w - sum(m) == r]


def interlace_above_r(lam, r: int) -> list:
    """Bar-set elements with |mu| - |lambda| = r."""
    w = sum(as_parts(lam))
    return [m for m in interlace_above(lam, r) if sum(m) - w == r]


def in_interlace_same(mu, lam) -> bool:
    mu, lam = as_parts(mu), as_parts(lam)
    if len(mu) != len(lam):
        return False
    n = len(lam)
    ok = all(lam[i] >= mu[i] >= lam[i + 1] for i in range(n - 1))
    return ok and lam[-1] >= mu[-1] >= 0


def in_interlace_below(mu, lam) -> bool:
    mu, lam = as_parts(mu), as_parts(lam)
    return len(mu) == len(lam) - 1 and all(lam[i] >= mu[i] >= lam[i + 1] for i in range(len(mu)))


def count_partitions(n: int, w: int) -> int:
    """Number of partitions of w into at most n parts (independent recursion)."""
    @lru_cache(maxsize=None)
    def p(k, m):
        # partitions of m with parts of size at most k (conjugate to at most k parts)
        if m == 0:
            return 1
        if k == 0:
            return 0
        return p(k - 1, m) + (p(k, m - k) if m >= k else 0)
    return p(n, w)
