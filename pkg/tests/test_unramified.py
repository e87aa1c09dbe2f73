from fractions import Fraction

import pytest

from rszeta.errors import InvalidPartition, UnsupportedRank
from rszeta.unramified import (FormalSeries, LaurentPoly, complete_homogeneous,
                               euler_product_series, partitions_up_to, schur_char,
                               symplectic_char, unramified_zeta_series)
from rszeta.unramified import checks
from rszeta.unramified.poly import var_names


def poly(vars, terms):
    return LaurentPoly(vars, terms)


A2 = var_names("a", 2)
B1 = var_names("b", 1)
B2 = var_names("b", 2)


def test_partition_enumeration():
    assert [p.parts for p in partitions_up_to(2, 2)] == [(0, 0), (1, 0), (1, 1), (2, 0)]
    assert [p.parts for p in partitions_up_to(1, 3)] == [(0,), (1,), (2,), (3,)]


def test_invalid_partition():
    with pytest.raises(InvalidPartition):
        schur_char((1, 2))


def test_schur_small_cases():
    assert schur_char((1, 0)) == poly(A2, {(1, 0): 1, (0, 1): 1})
    assert schur_char((2, 1)) == poly(A2, {(2, 1): 1, (1, 2): 1})
    assert schur_char((1, 1)) == poly(A2, {(1, 1): 1})


def test_symplectic_small_cases():
    assert symplectic_char((1,)) == poly(B1, {(1,): 1, (-1,): 1})
    assert symplectic_char((1, 0)) == poly(B2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1})
    assert symplectic_char((0, 0, 0)) == LaurentPoly.const(1, var_names("b", 3))


def test_symplectic_weyl_symmetry():
    chi = symplectic_char((3, 1, 0))
    for name in chi.vars:
        assert chi.substitute_inverse(name) == chi
    assert chi.permute((1, 0, 2)) == chi


def test_complete_homogeneous():
    assert complete_homogeneous("A", 0, 2) == LaurentPoly.const(1, A2)
    assert complete_homogeneous("A", 2, 2) == poly(A2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert complete_homogeneous("B", 1, 2) == symplectic_char((1, 0))


def test_dimensions():
    assert checks.dimension((1, 0, 0)) == 3
    assert checks.dimension((2, 1, 0)) == 8
    assert checks.dimension((1, 1)) == 1


@pytest.mark.parametrize("kind,lam", [("A", (2, 1, 0)), ("A", (3, 3, 1, 0)), ("C", (2, 1)), ("C", (1, 1, 1))])
def test_character_oracles(kind, lam):
    assert checks.verify_character_oracle(kind, lam).passed


def test_pieri_examples():
    lhs, rhs = checks.pieri_sides("A", (1, 0), 1)
    assert lhs == schur_char((2, 0)) + schur_char((1, 1))
    assert checks.verify_pieri("A", (2, 1, 0), 2).passed
    assert checks.verify_pieri("C", (1,), 1).passed


def test_generating_identities():
    assert checks.verify_generating_identity("gl", (0, 0), N=4).passed
    assert checks.verify_generating_identity("so", (0,), N=5).passed


def test_branching_specialization():
    assert checks.verify_branching_specialization((2, 1, 0)).passed


def test_euler_product_rank_one():
    a1b1 = LaurentPoly(("a1", "b1"), {(1, 1): 1})
    a1b1inv = LaurentPoly(("a1", "b1"), {(1, -1): 1})
    want = FormalSeries.one(5, ("a1", "b1")).times_geometric(a1b1).times_geometric(a1b1inv)
    assert euler_product_series(0, 1, 5) == want


@pytest.mark.parametrize("ell,n,N", [(0, 1, 4), (1, 1, 6), (0, 2, 8), (1, 2, 6)])
def test_zeta_series_equals_euler_product(ell, n, N):
    assert unramified_zeta_series(ell, n, N) == euler_product_series(ell, n, N)


def test_degree_zero_series_is_one():
    s = unramified_zeta_series(0, 1, 0)
    assert s == euler_product_series(0, 1, 0)
    assert s.coeffs[0] == LaurentPoly.const(1, s.vars)


def test_unsupported_rank():
    with pytest.raises(UnsupportedRank):
        unramified_zeta_series(0, 4, 2)
    with pytest.raises(UnsupportedRank):
        euler_product_series(2, 1, 2)


def test_exact_arithmetic_and_digest():
    p = LaurentPoly(A2, {(1, -1): Fraction(1, 3)})
    q = p * 3
    assert q.terms == {(1, -1): 1} and isinstance(q.terms[(1, -1)], int)
    assert (p - p).is_zero()
    assert p.digest() == LaurentPoly(A2, {(1, -1): Fraction(2, 6)}).digest()


def test_series_product_and_geometric():
    x = LaurentPoly.var("a1")
    g = FormalSeries.geometric(x, 6)
    assert g * FormalSeries.linear(x, 6) == FormalSeries.one(6, ("a1",))
    assert FormalSeries.one(6, ("a1",)).times_geometric(x, 2) == FormalSeries.geometric(x, 6, step=2)
