import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlacing import recurrence as rc
from interlacing.errors import DegreeOutOfRangeError, InvalidTableError, NumericalFailureError
from interlacing.families import jacobi_recurrence
from interlacing.interlace import strict_interlace

TABLE2_Z6 = [-0.72289, -0.475502, -0.197106, 0.0958548, 0.384919, 0.653855]


@pytest.fixture
def legendre():
    return jacobi_recurrence(0.0, 0.0, 12)


def random_table(draw_c, draw_lam):
    return rc.RecurrenceTable(np.asarray(draw_c), np.asarray(draw_lam))


tables = st.integers(1, 12).flatmap(
    lambda N: st.tuples(
        st.lists(st.floats(-5, 5), min_size=N, max_size=N),
        st.lists(st.floats(0.05, 10), min_size=N - 1, max_size=N - 1),
    )
).map(lambda cl: random_table(*cl))


# -- tables -----------------------------------------------------------------


def test_table_validation():
    with pytest.raises(InvalidTableError):
        rc.RecurrenceTable([0.0, 0.0], [1.0, 2.0])
    with pytest.raises(InvalidTableError, match="lam_3"):
        rc.RecurrenceTable([0.0, 0.0, 0.0], [1.0, 0.0])
    with pytest.raises(InvalidTableError):
        rc.RecurrenceTable([0.0, np.nan], [1.0])
    t = rc.RecurrenceTable([1.0, 2.0, 3.0], [0.5, 0.25])
    assert t.max_degree == 3
    assert t.truncated(2).max_degree == 2
    with pytest.raises(ValueError):
        t.c[0] = 5.0


def test_zero_set_invariants():
    zs = rc.ZeroSet.from_values([-1.0, 0.0, 2.0])
    assert len(zs) == 3 and zs[1] == 0.0 and list(zs) == [-1.0, 0.0, 2.0]
    with pytest.raises(ValueError):
        rc.ZeroSet(2, (1.0, 1.0))
    with pytest.raises(ValueError):
        rc.ZeroSet(3, (1.0, 2.0))


# -- evaluation -------------------------------------------------------------


def test_eval_low_degrees(legendre):
    assert rc.eval_monic(legendre, 0, 3.7) == 1.0
    t = rc.RecurrenceTable([0.3, -1.0], [2.0])
    assert rc.eval_monic(t, 1, 1.25) == pytest.approx(1.25 - 0.3)


def test_eval_legendre_p2(legendre):
    # monic P_2 = x^2 - 1/3
    assert abs(rc.eval_monic(legendre, 2, 1 / math.sqrt(3))) < 1e-12
    x = np.linspace(-1, 1, 7)
    np.testing.assert_allclose(rc.eval_monic(legendre, 2, x), x**2 - 1 / 3, atol=1e-15)


def test_index_mapping():
    # c[0] drives the degree-1 step, lam[0] the degree-2 step
    t = rc.RecurrenceTable([2.0, 5.0], [3.0])
    x = 0.7
    assert rc.eval_monic(t, 2, x) == pytest.approx((x - 5.0) * (x - 2.0) - 3.0)


def test_degree_out_of_range(legendre):
    with pytest.raises(DegreeOutOfRangeError):
        rc.eval_monic(legendre, 13, 0.0)
    with pytest.raises(DegreeOutOfRangeError):
        rc.zeros(legendre, -1)
    with pytest.raises(IndexError):
        rc.eval_monic(legendre, 40, 0.0)


def test_derivative_matches_finite_difference(legendre):
    x, h = 0.3, 1e-6
    p, d = rc.eval_monic_with_derivative(legendre, 7, x)
    fd = (rc.eval_monic(legendre, 7, x + h) - rc.eval_monic(legendre, 7, x - h)) / (2 * h)
    assert p == pytest.approx(rc.eval_monic(legendre, 7, x))
    assert d == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("n", range(1, 9))
def test_leading_coefficient(legendre, n):
    x = 1e6
    assert rc.eval_monic(legendre, n, x) / x**n == pytest.approx(1.0, rel=1e-3)


# -- zeros ------------------------------------------------------------------


def test_zeros_examples(legendre):
    assert rc.zeros(legendre, 0).degree == 0
    np.testing.assert_allclose(rc.zeros(legendre, 2).array, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-13)
    z = rc.zeros(jacobi_recurrence(6.0, 5.0, 7), 6)
    np.testing.assert_allclose(z.array, TABLE2_Z6, atol=1e-5)
    assert rc.zeros(jacobi_recurrence(2.5, 2.5, 3), 1).zeros == pytest.approx((0.0,), abs=1e-15)


def test_zeros_against_dense_eigensolver():
    t = jacobi_recurrence(1.5, -0.3, 20)
    J = np.diag(t.c) + np.diag(np.sqrt(t.lam), 1) + np.diag(np.sqrt(t.lam), -1)
    np.testing.assert_allclose(rc.zeros(t, 20).array, np.linalg.eigvalsh(J), atol=1e-12)


def test_sturm_count_brackets(legendre):
    z = rc.zeros(legendre, 5).array
    probes = np.concatenate([[z[0] - 1], (z[:-1] + z[1:]) / 2, [z[-1] + 1]])
    assert rc.sturm_count(legendre, 5, probes).tolist() == [0, 1, 2, 3, 4, 5]


@settings(max_examples=150, deadline=None)
@given(tables)
def test_zeros_residual_and_interlacing(table):
    N = table.max_degree
    lo, hi = rc.gershgorin_bounds(table, N)
    grid = np.linspace(lo, hi, 41)
    prev = None
    for n in range(1, N + 1):
        z = rc.zeros(table, n)
        assert len(z) == n
        scale = max(1.0, float(np.max(np.abs(rc.eval_monic(table, n, grid)))))
        # local scale: product of distances to the other zeros bounds |P'| |dz|
        for k, zk in enumerate(z.array):
            others = np.delete(z.array, k)
            local = np.prod(np.abs(zk - others)) if n > 1 else 1.0
            assert abs(rc.eval_monic(table, n, zk)) <= 1e-9 * max(scale, local)
        if prev is not None:
            assert strict_interlace(prev, z) or np.min(np.abs(prev.array[:, None] - z.array)) < 1e-9
        prev = z


def test_refine_zero_examples(legendre):
    target = 1 / math.sqrt(3)
    assert rc.refine_zero(legendre, 2, 0.58) == pytest.approx(target, abs=1e-12)
    assert rc.refine_zero(legendre, 2, target) == pytest.approx(target, abs=1e-15)
    t = jacobi_recurrence(6.0, 5.0, 7)
    assert rc.refine_zero(t, 6, 0.654) == pytest.approx(0.653855, abs=1e-5)


def test_refine_zero_reduces_residual(legendre):
    z0 = 0.55
    r0 = abs(rc.eval_monic(legendre, 2, z0))
    z = rc.refine_zero(legendre, 2, z0)
    assert abs(rc.eval_monic(legendre, 2, z)) <= max(r0 * 1e-3, 1e-16)


def test_refine_zero_divergence():
    # P_2 = x^2 - 1; starting at the critical point's neighbour throws Newton far away
    t = rc.RecurrenceTable([0.0, 0.0], [1.0])
    with pytest.raises(NumericalFailureError):
        rc.refine_zero(t, 2, 1e-9)
    with pytest.raises(NumericalFailureError):
        rc.refine_zero(t, 2, np.inf)
    assert rc.refine_zero(t, 2, 1e-9, max_iter=60) == pytest.approx(1.0)
