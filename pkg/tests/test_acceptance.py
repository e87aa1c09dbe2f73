"""Acceptance criteria, one test per criterion.

All numeric criteria share one seeded run of every suite (seed 42); each test
then checks its slice of the reports against the stated tolerance, instance
count and time budget.  Each test prints a single PASS/FAIL line, and the
lines are repeated in the terminal summary.  Running this file directly with
python prints the same lines without pytest.
"""
import time

import pytest

from rszeta.cli import run_capture
from rszeta.suites import run_suites
from rszeta.unramified.partitions import partitions_of

SEED = 42


@pytest.fixture(scope="module")
def run():
    t0 = time.perf_counter()
    res = run_suites(["all"], seed=SEED)
    res.wall_s = time.perf_counter() - t0
    return res


def pick(res, prefix):
    return [r for r in res.reports if r.identity_id.startswith(prefix)]


def check(reports, tol, count=None, max_ms=None):
    """(ok, detail) for a group of numeric reports."""
    if count is not None and len(reports) != count:
        return False, f"{len(reports)} instances, expected {count}"
    if not reports:
        return False, "no instances"
    errs = [r.rel_error for r in reports]
    worst = max(e if e is not None else float("inf") for e in errs)
    ok = all(r.passed for r in reports) and worst <= tol
    slow = max(r.runtime_ms for r in reports)
    if max_ms is not None and slow > max_ms:
        ok = False
    return ok, f"n={len(reports)}, max rel err {worst:.2e} <= {tol:g}, slowest {slow} ms"


def judge(record, number, name, parts):
    ok = all(p[0] for p in parts)
    record(number, name, ok, "; ".join(p[1] for p in parts))
    assert ok


def test_criterion_01_barnes_first_lemma(run, record_criterion):
    reps = pick(run, "barnes_first_lemma")
    in_box = all(0.2 <= z["re"] <= 1.5 for r in reps for z in r.to_dict()["parameters"]["abcd"])
    judge(record_criterion, 1, "Barnes first lemma, 20 draws",
          [check(reps, 1e-8, 20, 1000), (in_box, "draws in Re [0.2, 1.5]")])


def test_criterion_02_barnes_reduction(run, record_criterion):
    judge(record_criterion, 2, "Barnes-type reduction parts 1 and 2 at n=2",
          [check(pick(run, "barnes_reduction/part1/n=2"), 1e-6, max_ms=30_000),
           check(pick(run, "barnes_reduction/part2/n=2"), 1e-6, max_ms=30_000)])


def test_criterion_03_pieri_analogues(run, record_criterion):
    parts = []
    for kind in ("gl_1", "gl_2"):
        parts.append(check(pick(run, f"pieri_analog/{kind}/n=2"), 1e-6, max_ms=120_000))
        parts.append(check(pick(run, f"pieri_analog/{kind}/n=3"), 1e-4, max_ms=120_000))
    parts.append(check(pick(run, "pieri_analog/so/n=1"), 1e-6, max_ms=120_000))
    judge(record_criterion, 3, "Pieri-type Mellin identities (GL n=2,3; SO n=1)", parts)


def test_criterion_04_contragredient(run, record_criterion):
    judge(record_criterion, 4, "contragredient symmetry at n=3",
          [check(pick(run, "contragredient/n=3"), 1e-6, 10)])


def test_criterion_05_whittaker_routes(run, record_criterion):
    parts = [check(pick(run, f"whittaker_routes/{k}/n={n}"), 1e-4, 9)
             for k, n in (("GL", 2), ("GL", 3), ("SO", 1), ("SO", 2))]
    judge(record_criterion, 5, "Whittaker direct vs Mellin inversion on a 3x3 grid", parts)


def test_criterion_06_jacquet(run, record_criterion):
    judge(record_criterion, 6, "x-integral recursion at n=3, 3 torus points",
          [check(pick(run, "jacquet/n=3"), 1e-3, 3)])


def test_criterion_07_gl_l_factor(run, record_criterion):
    judge(record_criterion, 7, "GL zeta integral vs L-factor at (2,1) and (3,2)",
          [check(pick(run, "gl_zeta_l_factor/n=2,m=1"), 1e-7, 1, 60_000),
           check(pick(run, "gl_zeta_l_factor/n=3,m=2"), 1e-6, 1, 60_000)])


def test_criterion_08_gl_equal_rank(run, record_criterion):
    judge(record_criterion, 8, "GL zeta integral vs L-factor at (2,2)",
          [check(pick(run, "gl_zeta_l_factor/n=2,m=2"), 1e-7, 1)])


def test_criterion_09_gl_recursion(run, record_criterion):
    judge(record_criterion, 9, "GL zeta recursions at n=2,3",
          [check(pick(run, "gl_zeta_recursion/nn_to_nm"), 1e-5, 2),
           check(pick(run, "gl_zeta_recursion/nm_to_smaller"), 1e-5, 2)])


def test_criterion_10_gl_barnes_correction(run, record_criterion):
    judge(record_criterion, 10, "GL (3,1) Barnes form vs L-factor times correction",
          [check(pick(run, "gl_zeta_barnes_correction/n=3,m=1"), 1e-5, 1, 120_000)])


def test_criterion_11_gl_functional_equation(run, record_criterion):
    judge(record_criterion, 11, "GL functional equation at n=3",
          [check(pick(run, "gl_functional_equation/n=3"), 1e-5, 1)])


def test_criterion_12_so_closed_forms(run, record_criterion):
    judge(record_criterion, 12, "SO Mellin pairing vs closed form, and recursion at n=2",
          [check(pick(run, "so_zeta_l_factor/l=0/n=1"), 1e-7, 1),
           check(pick(run, "so_zeta_l_factor/l=1/n=1"), 1e-7, 1),
           check(pick(run, "so_zeta_recursion/"), 1e-5, 2)])


def test_criterion_13_so_functional_equation(run, record_criterion):
    judge(record_criterion, 13, "SO l=-1 closed form invariance, 5 draws",
          [check(pick(run, "so_functional_equation/"), 1e-6, 5)])


def test_criterion_14_unramified_exact(record_criterion):
    t0 = time.perf_counter()
    res = run_suites(["unramified"], seed=SEED)
    wall = time.perf_counter() - t0
    reps = res.reports
    groups = {g: [r for r in reps if r.identity_id.startswith(g)]
              for g in ("character_oracle/", "pieri/", "generating/", "unramified_zeta/")}
    want_chars = sum(len(partitions_of(n, w)) for n in range(1, 5) for w in range(7)) \
        + sum(len(partitions_of(n, w)) for n in range(1, 4) for w in range(7))
    want_pieri = 2 * 5 * sum(len(partitions_of(n, w)) for n in range(1, 4) for w in range(6))
    want_gen = 2 * sum(len(partitions_of(n, w)) for n in range(1, 4) for w in range(6))
    pairs = sorted((r.parameters["ell"], r.parameters["n"], r.parameters["N"])
                   for r in groups["unramified_zeta/"])
    parts = [
        (all(r.passed and r.rel_error == "exact" for r in reps), f"{len(reps)} exact reports"),
        (len(groups["character_oracle/"]) == want_chars, f"{want_chars} character oracles"),
        (len(groups["pieri/"]) == want_pieri, f"{want_pieri} Pieri checks"),
        (len(groups["generating/"]) == want_gen, f"{want_gen} generating identities"),
        (pairs == sorted([(0, 1, 8), (1, 1, 8), (0, 2, 8), (1, 2, 8), (0, 3, 8)]), "5 series pairs to degree 8"),
        (wall < 300, f"{wall:.1f} s"),
    ]
    judge(record_criterion, 14, "unramified exact suite", parts)


def test_criterion_15_determinism(record_criterion):
    c1, out1 = run_capture(["verify", "all", "--seed", str(SEED)])
    c2, out2 = run_capture(["verify", "all", "--seed", str(SEED)])
    same = out1.encode() == out2.encode()
    judge(record_criterion, 15, "verify all --seed 42 twice is byte-identical",
          [(same and c1 == c2 == 0, f"{len(out1.splitlines())} lines, exit {c1}/{c2}")])


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
