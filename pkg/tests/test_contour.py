import math

import numpy as np
import pytest

from rszeta.contour import (ContourSpec, GammaArgConstraint, barnes_first_lemma_rhs,
                            choose_abscissa, integrate_vertical)
from rszeta.errors import InfeasibleContour, NonConvergence, PoleError
from rszeta.special import gamma_r_array


def test_symmetric_constraints_center():
    cons = [GammaArgConstraint((1.0,), 0.0), GammaArgConstraint((-1.0,), 1.0)]
    sigma = choose_abscissa(cons, 1)
    assert abs(sigma[0] - 0.5) < 1e-9


def test_contradictory_constraints():
    cons = [GammaArgConstraint((1.0,), -2.0), GammaArgConstraint((-1.0,), -2.0)]
    with pytest.raises(InfeasibleContour) as info:
        choose_abscissa(cons, 1)
    assert sorted(info.value.binding) == [0, 1]


def test_u3_constraints_have_slack():
    from rszeta.mellin import u_parts
    from rszeta.mb import MBIntegral
    parts = u_parts([0.3, 0.1, -0.4], [1.0, 1.0])
    integral = MBIntegral(parts.variables, parts.num, parts.den)
    cons, order = integral.constraints()
    sigma = integral.abscissas()
    assert all(c.slack(sigma) >= -1e-9 for c in cons)


def test_zero_integrand():
    spec = ContourSpec((0.0,), 10.0, 64)
    assert integrate_vertical(lambda z: 0 * z, spec) == 0


def test_barnes_unit_point():
    f = lambda z: gamma_r_array(z + 1) ** 2 * gamma_r_array(1 - z) ** 2
    val = integrate_vertical(f, ContourSpec((0.0,), 40.0, 2048), 1 / (4j * math.pi))
    assert abs(val - math.pi ** -2) < 1e-12
    assert abs(barnes_first_lemma_rhs(1, 1, 1, 1) - math.pi ** -2) < 1e-15


def test_separable_two_dimensional():
    g = lambda z: gamma_r_array(z + 0.6) * gamma_r_array(1.2 - z)
    h = lambda z: gamma_r_array(z + 0.3) ** 2 * gamma_r_array(0.9 - z)
    one_g = integrate_vertical(g, ContourSpec((0.2,), 40.0, 2048))
    one_h = integrate_vertical(h, ContourSpec((0.1,), 40.0, 2048))
    two = integrate_vertical(lambda z1, z2: g(z1) * h(z2), ContourSpec((0.2, 0.1), 40.0, 1024))
    assert abs(two - one_g * one_h) <= 1e-9 * abs(one_g * one_h)


def test_doubling_check_flags_starved_grid():
    f = lambda z: gamma_r_array(z + 1) ** 2 * gamma_r_array(1 - z) ** 2
    with pytest.raises(NonConvergence):
        integrate_vertical(f, ContourSpec((0.0,), 1.0, 16), tol=1e-9)


def test_gauss_legendre_rule_agrees():
    f = lambda z: gamma_r_array(z + 1) ** 2 * gamma_r_array(1 - z) ** 2
    val = integrate_vertical(f, ContourSpec((0.0,), 40.0, 1024, "gauss_legendre_panels"),
                             1 / (4j * math.pi))
    assert abs(val - math.pi ** -2) < 1e-10


def test_barnes_rhs_pole():
    with pytest.raises(PoleError):
        barnes_first_lemma_rhs(0.5, 1.0, -0.5, 1.0)


@pytest.mark.parametrize("kw", [dict(abscissas=()), dict(abscissas=(0.0,), truncation_height=0),
                                dict(abscissas=(0.0,), nodes_per_axis=4),
                                dict(abscissas=(0.0,), rule="simpson")])
def test_contour_spec_validation(kw):
    with pytest.raises(ValueError):
        ContourSpec(**kw)
