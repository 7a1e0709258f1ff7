import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from interlacing import families as fm
from interlacing import interlace as il
from interlacing.errors import ArityError, DegenerateConfigurationError, OrderingError
from interlacing.recurrence import zeros
from interlacing.scan import run_draw

V = il.Verdict


def _jacobi_pair(n, al, be, shift=1):
    p = zeros(fm.jacobi_recurrence(al, be, n), n)
    g = zeros(fm.jacobi_recurrence(al + shift, be + shift, n + 1), n + 1)
    return p, g


# -- predicates ----------------------------------------------------------------


def test_strict_interlace_examples():
    assert il.strict_interlace([0.0], [-1.0, 1.0])
    assert not il.strict_interlace([-1.0, 1.0], [-1.0, 0.0, 1.0])
    assert il.strict_interlace(*_jacobi_pair(6, 7.0, 6.0, shift=0))
    with pytest.raises(ArityError):
        il.strict_interlace([0.0], [1.0])


def test_alternate_examples():
    assert il.alternate([0.0], [1.0])
    assert not il.alternate([1.0], [0.0])
    assert il.alternate([-1.0, 0.0], [-0.5, 0.5])
    with pytest.raises(ArityError):
        il.alternate([0.0], [1.0, 2.0])


def test_precedes_separation():
    assert not il.precedes([0.0, 1.0], [0.5 * 1e-12])
    assert il.precedes([], [])
    assert il.strict_interlace([], [3.0])


def test_place_point_examples():
    grid = [-1.0, 0.0, 1.0]
    assert il.place_point(-2, grid) == il.LEFT
    assert il.place_point(0.5, grid) == il.Gap(2)
    assert il.place_point(5.0, grid) == il.RIGHT
    assert il.place_point(1e-11, grid) == il.Placement("zero", 2)
    g = zeros(fm.jacobi_recurrence(6.0, 5.0, 7), 7)
    assert il.place_point(0.86505, g) == il.RIGHT
    with pytest.raises(ValueError):
        il.place_point(0.0, [])


@pytest.mark.parametrize("pl", [il.LEFT, il.RIGHT, il.Gap(3), il.Placement("zero", 2)])
def test_placement_round_trip(pl):
    assert il.Placement.parse(str(pl)) == pl


# -- sign table for h_k(E1) h_k(E2) -----------------------------------------


def test_hk_sign_examples():
    assert il.hk_sign(-3, -2, 0, 1) == 1
    assert il.hk_sign(0.5, 2, 0, 1) == -1
    assert il.hk_sign(0.0, 2, 0, 1) == 0
    assert il.table1_sign("L", "L") == 1
    assert il.table1_sign("M", "R") == -1
    assert il.table1_sign("M", "M") == 1


def test_hk_sign_brute_force():
    rng = np.random.default_rng(20240611)
    cell = {"left": "L", "gap": "M", "right": "R"}
    for _ in range(10_000):
        yk, yk1 = np.sort(rng.uniform(-10, 10, 2))
        e1, e2 = rng.uniform(-12, 12, 2)
        direct = np.sign((yk - e1) * (yk1 - e1) * (yk - e2) * (yk1 - e2))
        s = il.hk_sign(e1, e2, yk, yk1)
        assert s == direct
        c1 = cell[il.place_point(e1, [yk, yk1]).kind]
        c2 = cell[il.place_point(e2, [yk, yk1]).kind]
        assert c1 == il.table1_cell(e1, yk, yk1)
        assert il.table1_sign(c1, c2) == s


# -- classify ----------------------------------------------------------------------


def test_classify_jacobi_table2():
    rec = run_draw(fm.Jacobi(6.0, 5.0), 6)
    rep = rec.report
    assert rep.variant is il.Variant.MINUS
    assert (rep.placement_e1, rep.placement_e2) == (il.LEFT, il.RIGHT)
    assert rep.verdict is V.G_FULLY_INTERLACES_P and rep.checked
    assert rep.chains["(x-E1)(x-E2)P ≺ G"]
    assert rep.statements == ("E_1<y_{1,7}", "E_2>y_{7,7}")
    assert il.verify_chain(rep, rec.p_zeros, rec.g_zeros, rec.extra.e1, rec.extra.e2)


def test_classify_mp_table3_bottom_row():
    rec = run_draw(fm.MeixnerPollaczek(2.0, math.pi / 4), 7)
    rep = rec.report
    assert rep.verdict is V.CROSS_AUGMENTED_II and rep.checked
    assert rep.chain == "(x-E2)G ≺ (x-E1)P"
    assert rep.statements[1] == "y_{6,8}<z_{5,7}<E_2<z_{6,7}<y_{7,8}"


def test_classify_mp_table3_left_block():
    rec = run_draw(fm.MeixnerPollaczek(0.12, 7 * math.pi / 9), 6)
    rep = rec.report
    assert rep.verdict is V.CROSS_AUGMENTED_I
    assert rep.statements[0] == "y_{1,7}<z_{1,6}<E_1<z_{2,6}<y_{2,7}"
    assert il.verify_chain(rep, rec.p_zeros, rec.g_zeros, rec.extra.e1, rec.extra.e2)


def test_classify_plus_outer_is_impossible():
    rep = il.classify("plus", [0.0], [-1.0, 1.0], -2.0, 2.0)
    assert rep.verdict is V.IMPOSSIBLE_CONFIG and not rep.checked
    with pytest.raises(ValueError):
        il.verify_chain(rep, [0.0], [-1.0, 1.0], -2.0, 2.0)


def test_classify_minus_same_interval_is_impossible():
    rep = il.classify("minus", [0.0], [-1.0, 1.0], 0.2, 0.4)
    assert rep.verdict is V.IMPOSSIBLE_CONFIG


def test_classify_plus_cases_synthetic():
    g = [-1.0, 1.0]
    assert il.classify("plus", [0.0], g, 0.3, 0.6).verdict is V.G_FULLY_INTERLACES_P
    # case (a): the zero of P sits left of y_1 and E2 fills the gap
    assert il.classify("plus", [-2.0], g, -3.0, 0.5).verdict is V.ONE_POINT_LEFT
    assert il.classify("plus", [2.0], g, -0.5, 3.0).verdict is V.ONE_POINT_RIGHT


def test_classify_plus_mismatch_is_flagged():
    # chain (x-E2)P ≺ G needs E2 < z_1 here, so E2 = 0.5 contradicts it
    rep = il.classify("plus", [0.0], [-1.0, 1.0], -3.0, 0.5)
    assert rep.verdict is V.INCONCLUSIVE and rep.mismatch
    assert "theorem-mismatch" in rep.detail


def test_classify_errors():
    with pytest.raises(OrderingError):
        il.classify("minus", [0.0], [-1.0, 1.0], 2.0, -2.0)
    with pytest.raises(ArityError):
        il.classify("minus", [0.0], [1.0], -2.0, 2.0)
    with pytest.raises(DegenerateConfigurationError):
        il.classify("minus", [0.0], [-1.0, 1.0], -1.0, 2.0)
    with pytest.raises(DegenerateConfigurationError):
        il.classify("plus", [1.0], [-1.0, 1.0], -2.0, 0.5)


def test_verify_chain_shared_point_false():
    rep = il.classify("minus", [0.0], [-1.0, 1.0], -2.0, 2.0)
    assert rep.verdict is V.G_FULLY_INTERLACES_P
    assert not il.verify_chain(rep, [0.0], [0.0, 1.0], -2.0, 2.0)
    assert not il.chain_holds("G ≺ P", [1.0], [-1.0, 1.0], 0, 0)


# -- properties -----------------------------------------------------------------------

jacobi_params = st.tuples(st.integers(2, 10), st.floats(-0.9, 8), st.floats(-0.9, 8))


@settings(max_examples=150, deadline=None)
@given(jacobi_params)
def test_merge_consistency(params):
    n, al, be = params
    p, g = _jacobi_pair(n, al, be)
    ep = fm.jacobi_extra_points(n, al, be)
    try:
        rep = il.classify("minus", p, g, ep.e1, ep.e2)
    except DegenerateConfigurationError:
        assume(False)
    merged = il.precedes(il.merge(p, [ep.e1, ep.e2]), g)
    completed = rep.verdict in (V.TWO_POINT_COMPLETED, V.G_FULLY_INTERLACES_P) and rep.checked
    assert completed == merged
    assert not rep.mismatch


@settings(max_examples=150, deadline=None)
@given(jacobi_params)
def test_one_point_sufficiency(params):
    n, al, be = params
    p, g = _jacobi_pair(n, al, be)
    ep = fm.jacobi_extra_points(n, al, be)
    pl1, pl2 = il.place_point(ep.e1, g), il.place_point(ep.e2, g)
    if pl1 == il.LEFT and pl2.kind == "gap":
        assert il.chain_holds("G ≺ (x-E2)P", p, g, ep.e1, ep.e2)
    if pl1.kind == "gap" and pl2 == il.RIGHT:
        assert il.chain_holds("(x-E1)P ≺ G", p, g, ep.e1, ep.e2)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9), st.floats(0.05, 8), st.floats(0.02, 0.98), st.booleans())
def test_plus_variant_never_outer(n, lam, frac, upper):
    theta = fm.mp_window_theta(n, lam)
    phi = math.pi - frac * theta if upper else frac * theta
    rec = run_draw(fm.MeixnerPollaczek(lam, phi), n)
    rep = rec.report
    assert rep.verdict is not V.IMPOSSIBLE_CONFIG
    assert not rep.mismatch
    if rep.placement_e1 == rep.placement_e2:
        assert rep.verdict is V.G_FULLY_INTERLACES_P
        assert il.strict_interlace(rec.p_zeros, rec.g_zeros)
