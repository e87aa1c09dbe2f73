"""Seeded verification suites.

A suite is a list of Task objects.  Each task builds one VerificationReport;
tasks are independent, so the runner may execute them in a thread pool and
sorts the results afterwards, which keeps the output independent of the
completion order.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import mellin, whittaker, zeta
from .errors import RSZetaError
from .mb import QuadPolicy
from .report import VerificationReport, failure_report
from .unramified import checks

# feasibility box for random draws
SPECTRAL_RE = 0.45
SPECTRAL_IM = 0.5
S_RE = (0.8, 2.5)
S_IM = 1.0
BARNES_RE = (0.2, 1.5)

SUITES = ("barnes", "barnes_reduction", "pieri_analog", "contragredient", "whittaker",
          "jacquet", "gl_theorems", "so_theorems", "unramified")


@dataclass
class Task:
    identity_id: str
    run: Callable[[], VerificationReport]
    params: dict = field(default_factory=dict)
    order: int = 0


class Draws:
    """Reproducible parameter draws from the documented feasibility box."""

    def __init__(self, seed: int):
        self.rng = np.random.default_rng(seed)

    def _c(self, lo, hi, im, k):
        re = self.rng.uniform(lo, hi, k)
        ims = self.rng.uniform(-im, im, k)
        return [complex(round(x, 6), round(y, 6)) for x, y in zip(re, ims)]

    def spectral(self, n: int) -> list:
        return self._c(-SPECTRAL_RE, SPECTRAL_RE, SPECTRAL_IM, n)

    def s(self) -> complex:
        return self._c(S_RE[0], S_RE[1], S_IM, 1)[0]

    def positive(self, k: int, lo=BARNES_RE[0], hi=BARNES_RE[1], im=1.0) -> list:
        return self._c(lo, hi, im, k)


def _task(tasks, identity_id, fn, **params):
    shown = {k: v for k, v in params.items() if k != "quad"}
    tasks.append(Task(identity_id, lambda: fn(**params), shown, len(tasks)))


def barnes_suite(dr: Draws, quad: QuadPolicy, count: int = 20) -> list:
    tasks = []
    for _ in range(count):
        a, b, c, d = dr.positive(4)
        _task(tasks, "barnes_first_lemma", mellin.verify_barnes_first_lemma,
              a=a, b=b, c=c, d=d, quad=quad)
    return tasks


def barnes_reduction_suite(dr: Draws, quad: QuadPolicy, count: int = 2) -> list:
    tasks = []
    for part in (1, 2):
        for _ in range(count):
            g, dl = dr.positive(2, 0.3, 1.0, 0.5)
            c = dr.positive(2, 0.3, 1.0, 0.5)
            d = dr.positive(2 if part == 1 else 1, 0.3, 1.0, 0.5)
            _task(tasks, f"barnes_reduction/part{part}/n=2", mellin.verify_barnes_reduction,
                  part=part, n=2, gamma=g, delta=dl, c=c, d=d, quad=quad)
    return tasks


def pieri_analog_suite(dr: Draws, quad: QuadPolicy) -> list:
    tasks = []
    for kind in ("gl_1", "gl_2"):
        for n in (2, 3):
            a = dr.spectral(n)
            sigma = dr.s()
            p = [dr.s() for _ in range(n - 1)]
            _task(tasks, f"pieri_analog/{kind}/n={n}", mellin.verify_pieri_analog,
                  kind=kind, params=a, sigma=sigma, p=p, quad=quad)
    b = dr.spectral(1)
    _task(tasks, "pieri_analog/so/n=1", mellin.verify_pieri_analog,
          kind="so", params=b, sigma=dr.s(), p=[dr.s()], quad=quad)
    return tasks


def contragredient_suite(dr: Draws, quad: QuadPolicy, count: int = 10) -> list:
    tasks = []
    for _ in range(count):
        a = dr.spectral(3)
        s = [dr.s(), dr.s()]
        _task(tasks, "contragredient/n=3", mellin.verify_contragredient, a=a, s=s, quad=quad)
    return tasks


GRID = (0.5, 1.0, 1.5)


def whittaker_suite(dr: Draws, quad: QuadPolicy) -> list:
    tasks = []
    for kind, n in (("GL", 2), ("GL", 3), ("SO", 1), ("SO", 2)):
        p = dr.spectral(n)
        for y1 in GRID:
            for y2 in GRID:
                if kind == "SO" and n == 1:
                    y = (y1 * y2,)
                else:
                    y = (y1, y2, 1.0)[:n]
                _task(tasks, f"whittaker_routes/{kind}/n={n}", whittaker.whittaker_routes_report,
                      kind=kind, params=p, y=y, quad=quad)
    return tasks


JACQUET_POINTS = ((1.0, 1.0, 1.0), (2.0, 0.5, 1.0), (0.8, 1.2, 1.1))


def jacquet_suite(dr: Draws, quad: QuadPolicy) -> list:
    tasks = []
    a = dr.spectral(3)
    for y in JACQUET_POINTS:
        _task(tasks, "jacquet/n=3", whittaker.verify_jacquet_recursion, a=a, y=y, quad=quad)
    return tasks


def gl_theorems_suite(dr: Draws, quad: QuadPolicy) -> list:
    tasks = []
    for n, m in ((2, 1), (3, 2), (2, 2)):
        _task(tasks, f"gl_zeta_l_factor/n={n},m={m}", zeta.verify_gl_l_factor,
              n=n, m=m, a=dr.spectral(n), a_prime=dr.spectral(m), s=dr.s(), quad=quad)
    for n in (2, 3):
        _task(tasks, f"gl_zeta_recursion/nn_to_nm/n={n}", zeta.verify_gl_recursion,
              which="nn_to_nm", n=n, a=dr.spectral(n), a_prime=dr.spectral(n), s=dr.s(), quad=quad)
        _task(tasks, f"gl_zeta_recursion/nm_to_smaller/n={n}", zeta.verify_gl_recursion,
              which="nm_to_smaller", n=n, a=dr.spectral(n), a_prime=dr.spectral(n - 1),
              s=dr.s(), quad=quad)
    _task(tasks, "gl_zeta_barnes_correction/n=3,m=1", zeta.verify_gl_barnes_correction,
          n=3, a=dr.spectral(3), a_prime=dr.spectral(1), s=dr.s(), quad=quad)
    _task(tasks, "gl_functional_equation/n=3", zeta.verify_gl_functional_equation,
          n=3, a=dr.spectral(3), a_prime=dr.spectral(1), s=dr.s(), quad=quad)
    return tasks


def so_theorems_suite(dr: Draws, quad: QuadPolicy, fe_count: int = 5) -> list:
    tasks = []
    _task(tasks, "so_zeta_l_factor/l=0/n=1", zeta.verify_so_l_factor,
          ell=0, n=1, a=dr.spectral(1), b=dr.spectral(1), s=dr.s(), quad=quad)
    _task(tasks, "so_zeta_l_factor/l=1/n=1", zeta.verify_so_l_factor,
          ell=1, n=1, a=dr.spectral(2), b=dr.spectral(1), s=dr.s(), quad=quad)
    _task(tasks, "so_zeta_recursion/part1/n=2", zeta.verify_so_recursion,
          part=1, n=2, a=dr.spectral(2), b=dr.spectral(2), s=dr.s(), quad=quad)
    _task(tasks, "so_zeta_recursion/part2/n=2", zeta.verify_so_recursion,
          part=2, n=2, a=dr.spectral(3), b=dr.spectral(2), s=dr.s(), quad=quad)
    for _ in range(fe_count):
        n = 2
        _task(tasks, f"so_functional_equation/n={n}", zeta.verify_so_functional_equation,
              n=n, a=dr.spectral(n - 1), b=dr.spectral(n), s=dr.s(), quad=quad)
    return tasks


def unramified_tasks(dr: Draws, quad: QuadPolicy) -> list:
    # one task: the exact suite is fast and benefits from shared memo tables
    return [Task("unramified", checks.unramified_suite, {}, 0)]


BUILDERS = {
    "barnes": barnes_suite,
    "barnes_reduction": barnes_reduction_suite,
    "pieri_analog": pieri_analog_suite,
    "contragredient": contragredient_suite,
    "whittaker": whittaker_suite,
    "jacquet": jacquet_suite,
    "gl_theorems": gl_theorems_suite,
    "so_theorems": so_theorems_suite,
    "unramified": unramified_tasks,
}


@dataclass
class SuiteResult:
    reports: list
    infeasible: bool

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def exit_code(self) -> int:
        if self.infeasible:
            return 3
        return 0 if self.all_passed else 1


def _execute(task: Task) -> list:
    t0 = time.perf_counter()
    try:
        out = task.run()
    except RSZetaError as exc:
        rep = failure_report(task.identity_id, task.params, exc, t0)
        rep.extra["infeasible"] = True
        return [rep]
    return out if isinstance(out, list) else [out]


def _retune(rep: VerificationReport, tol: float | None) -> VerificationReport:
    if tol is not None and isinstance(rep.rel_error, float) and rep.threshold is not None:
        rep.threshold = tol
        rep.passed = bool(np.isfinite(rep.rel_error) and rep.rel_error <= tol)
    return rep


def run_suites(names, seed: int = 0, quad: QuadPolicy | None = None, jobs: int = 1,
               tol: float | None = None) -> SuiteResult:
    """Run the named suites; each suite draws from its own seeded stream."""
    quad = quad or QuadPolicy(check=True)
    names = list(SUITES) if "all" in names else list(names)
    tasks = []
    for i, name in enumerate(names):
        if name not in BUILDERS:
            raise ValueError(f"unknown suite {name!r}")
        dr = Draws([seed, SUITES.index(name)])
        for t in BUILDERS[name](dr, quad):
            tasks.append((i, t))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda it: _execute(it[1]), tasks))
    else:
        results = [_execute(t) for _, t in tasks]
    keyed = []
    for (i, t), reps in zip(tasks, results):
        for j, r in enumerate(reps):
            r.extra["seed"] = seed
            keyed.append(((r.identity_id, i, t.order, j), _retune(r, tol)))
    keyed.sort(key=lambda kv: kv[0])
    reports = [r for _, r in keyed]
    infeasible = any(r.extra.get("infeasible") for r in reports)
    return SuiteResult(reports, infeasible)
