import math

import numpy as np
import pytest

from rszeta import mellin
from rszeta.errors import DomainError, UnsupportedRank
from rszeta.mb import QuadPolicy
from rszeta.special import gamma_r, gamma_r_prod

import oracles


def test_u2_unit_point():
    assert abs(mellin.u_transform([0, 0], [1]) - 0.5) < 1e-15


def test_u2_closed_form():
    a, s = (0.3 + 0.2j, -0.1), 1.2 - 0.4j
    want = 0.5 * gamma_r(s + a[0]) * gamma_r(s + a[1])
    assert abs(mellin.u_transform(a, [s]) - want) < 1e-14


def test_u3_stable_under_refinement():
    base = mellin.u_transform([0, 0, 0], [1, 1])
    fine = mellin.u_transform([0, 0, 0], [1, 1], QuadPolicy(T=(80.0, 60.0, 50.0), nodes=(4096, 2048, 2048)))
    assert abs(base - fine) <= 1e-8 * abs(fine)


def test_u3_symmetric_in_a():
    s = [1.1 + 0.2j, 0.9 - 0.1j]
    v1 = mellin.u_transform([0.3, 0.1, -0.4], s)
    v2 = mellin.u_transform([-0.4, 0.3, 0.1], s)
    assert abs(v1 - v2) <= 1e-9 * abs(v1)


def test_v1_closed_form():
    assert abs(mellin.v_transform([0], [1]) - 0.5) < 1e-15
    b, s = 0.25 - 0.1j, 1.3 + 0.3j
    want = 0.5 * gamma_r(s + b) * gamma_r(s - b)
    assert abs(mellin.v_transform([b], [s]) - want) < 1e-14


def test_v2_contour_shift():
    parts = mellin.v_parts([0.2, -0.1], [1.1, 0.9])
    integral = parts.integral()
    sigma = integral.abscissas()
    cons, _ = integral.constraints()
    # move along a direction that keeps every Gamma argument feasible
    shifted = None
    for step in (0.05, -0.05, 0.03, -0.03):
        trial = sigma + step
        if all(c.slack(trial) > 0 for c in cons):
            shifted = trial
            break
    assert shifted is not None
    v1 = integral.evaluate(sigma=sigma)
    v2 = integral.evaluate(sigma=shifted)
    assert abs(v1 - v2) <= 1e-7 * abs(v1)


def test_u_batched_values_match_pointwise():
    s = np.array([1.0, 1.2 + 0.3j])
    vals = mellin.u_values([0.1, -0.1], [s])
    for k in range(2):
        assert abs(vals[k] - mellin.u_transform([0.1, -0.1], [s[k]])) < 1e-14


def test_u_rank_and_arity_checks():
    with pytest.raises(DomainError):
        mellin.u_transform([0, 0, 0], [1])
    with pytest.raises(UnsupportedRank):
        mellin.u_transform([0] * 9, [1] * 8)


def test_barnes_first_lemma_against_mpmath():
    a, b, c, d = oracles.BARNES_ABCD
    got = mellin.barnes_first_lemma_lhs(a, b, c, d)
    assert abs(got - oracles.BARNES_LHS) <= 1e-12 * abs(oracles.BARNES_LHS)
    rep = mellin.verify_barnes_first_lemma(a, b, c, d)
    assert rep.passed and rep.rel_error < 1e-12


def test_contragredient_rank_two_exact():
    rep = mellin.verify_contragredient([0.3, -0.2 + 0.1j], [1.1])
    assert rep.passed and rep.rel_error < 1e-13


@pytest.mark.parametrize("a", [(0.3, 0.1, -0.4), (0.2j, -0.1j, 0.35j)])
def test_contragredient_rank_three(a):
    rep = mellin.verify_contragredient(list(a), [1.0, 1.2])
    assert rep.passed


def test_barnes_reduction_degenerate_case():
    rep = mellin.verify_barnes_reduction(1, 1, 0.6, 0.8, [0.5], [0.7], threshold=1e-8)
    assert rep.passed


def test_barnes_reduction_rank_two():
    rep = mellin.verify_barnes_reduction(1, 2, 0.7, 0.7, [0.4, 0.6], [0.5, 0.3])
    assert rep.passed


def test_pieri_analog_examples():
    rep = mellin.verify_pieri_analog("gl_1", [0, 0], 1.0, [1.0], threshold=1e-9)
    assert rep.passed
    assert mellin.verify_pieri_analog("so", [0.3], 1.2, [1.0]).passed
    assert mellin.verify_pieri_analog("gl_2", [0.1, -0.2], 1.1, [0.9]).passed


def test_old_name_alias():
    assert mellin.verify_lem_barnes is mellin.verify_barnes_reduction
