"""Closed-form sums and distributions against direct-summation oracles."""

import numpy as np
import pytest

from towercodes.codes import brute_weight_distribution, build_defining_set, \
    puncture, zero_trace_counts
from towercodes.cyclotomic import CycloInt, MultChar, gauss_sum
from towercodes.field import TowerSpec, get_field
from towercodes.theory import (
    TheoryReport,
    code_length,
    coset_of,
    coset_sums,
    count_both_conditions,
    delta_closed,
    delta_direct,
    delta_grouped,
    dist_binary_cubic,
    dist_nonzero_shift,
    dist_zero_shift_f2,
    dist_zero_shift_f2_punctured,
    dmin_bound_nonzero_shift,
    dmin_bound_zero_shift,
    dmin_bound_zero_shift_punctured,
    griesmer_min_length,
    griesmer_verdict,
    lambda_closed,
    lambda_direct,
    lambda_grouped,
    lambda_value_pairs_f2,
    predicted_distribution,
    quad_power_trace,
    secret_sharing_check,
    singleton_slack,
    walsh_spectrum,
    walsh_weight_distribution,
    weight_nonzero_shift,
    weight_zero_shift,
)


# -- exponential sums: three routes, one answer -------------------------------


def test_delta_routes_agree_pointwise():
    tower = TowerSpec(2, 1, 2, 4)
    field = tower.field()
    ds = build_defining_set(tower, 0)
    zeros = zero_trace_counts(ds)
    grouped = delta_grouped(ds, zeros)
    q, f, k = tower.q, tower.f, tower.k
    N = (q ** f - 1) // (q - 1)
    for b in field.nonzero():
        want = int(grouped[b])
        assert delta_direct(field, tower, b) == want
        assert delta_closed(tower, coset_of(tower, b)) == want
        # solution count of the paired conditions, rearranged
        lhs = q * q * (q ** f - 1) * count_both_conditions(tower, 0, b)
        rhs = q ** k * (q ** f - 1) + (q - 1) * (q ** f - q ** k) \
            + (q ** f - 1) * want
        assert lhs == rhs
    assert coset_of(tower, N + 2) == 2


def test_lambda_routes_agree_pointwise():
    tower = TowerSpec(2, 1, 2, 4)
    field = tower.field()
    ds = build_defining_set(tower, 1)
    grouped = lambda_grouped(ds)
    q, f, k = tower.q, tower.f, tower.k
    for b in field.nonzero():
        want = int(grouped[b])
        assert lambda_direct(field, tower, b, 1) == want
        assert lambda_closed(tower, coset_of(tower, b)) == want
        lhs = q * q * (q ** f - 1) * count_both_conditions(tower, 1, b)
        rhs = q ** k * (q ** f - 1) + (q ** k - q ** f) \
            + (q ** f - 1) * want
        assert lhs == rhs


def test_grouped_regime_guards():
    with pytest.raises(ValueError):
        delta_grouped(build_defining_set(TowerSpec(2, 1, 2, 4), 1))
    with pytest.raises(ValueError):
        lambda_grouped(build_defining_set(TowerSpec(2, 1, 2, 4), 0))
    with pytest.raises(ValueError):
        lambda_direct(TowerSpec(2, 1, 2, 4).field(), TowerSpec(2, 1, 2, 4),
                      0, 0)


def test_lambda_collapses_to_minus_q_when_f_is_1():
    for spec in [(2, 1, 1, 3), (3, 1, 1, 3), (2, 2, 1, 2)]:
        tower = TowerSpec(*spec)
        assert tower.gcd_condition()
        for c in range(1):
            assert lambda_closed(tower, c) == -tower.q


def test_gcd_violation_refuses_closed_form_only():
    tower = TowerSpec(3, 1, 1, 2)  # gcd(2, 2) = 2
    field = tower.field()
    with pytest.raises(ValueError, match="gcd"):
        lambda_closed(tower, 0)
    with pytest.raises(ValueError, match="gcd"):
        weight_nonzero_shift(tower, 0)
    # the direct and grouped sums still exist
    ds = build_defining_set(tower, 1)
    grouped = lambda_grouped(ds)
    for b in field.nonzero():
        assert lambda_direct(field, tower, b, 1) == int(grouped[b])


def test_lambda_value_pairs_f2():
    for spec in [(2, 1, 2, 4), (3, 1, 2, 6)]:
        tower = TowerSpec(*spec)
        ds = build_defining_set(tower, 1)
        vals = lambda_grouped(ds)
        freq = {}
        for v in vals.tolist():
            freq[v] = freq.get(v, 0) + 1
        assert sorted(lambda_value_pairs_f2(tower)) == sorted(freq.items())
    with pytest.raises(ValueError):
        lambda_value_pairs_f2(TowerSpec(2, 1, 3, 6))


def test_coset_sums_shortcut_matches_generic_loop():
    # k = f evaluates T_c without Gauss sums; redo it the long way
    tower = TowerSpec(3, 1, 2, 2)
    field = tower.field()
    q, f = tower.q, tower.f
    N = (q ** f - 1) // (q - 1)
    minus_one = field.neg(field.one)
    want = []
    for c in range(N):
        acc = CycloInt.integer(N, 0)
        for j in range(1, N):
            psi = MultChar(field, j * (q - 1))
            g = gauss_sum(field, j * (q - 1))
            acc = acc + (g ** 0 * psi.value(minus_one)).lift(
                N * field.p) * CycloInt.root(N, (-j * c) % N)
        want.append(acc.as_int())
    assert list(coset_sums(tower)) == want
    assert coset_sums(TowerSpec(2, 1, 1, 3)) == (0,)


# -- per-codeword weights ------------------------------------------------------


def test_weight_formulas_match_enumeration():
    tower = TowerSpec(2, 2, 2, 4)
    ds0 = build_defining_set(tower, 0)
    z0 = zero_trace_counts(ds0)
    ds1 = build_defining_set(tower, 1)
    z1 = zero_trace_counts(ds1)
    for s in tower.field().nonzero():
        assert weight_zero_shift(tower, s) == len(ds0) - int(z0[s])
        assert weight_nonzero_shift(tower, s) == len(ds1) - int(z1[s])


def test_weight_zero_shift_guard():
    with pytest.raises(ValueError, match="k > f > 1"):
        weight_zero_shift(TowerSpec(2, 1, 1, 3), 0)
    with pytest.raises(ValueError, match="k > f > 1"):
        weight_zero_shift(TowerSpec(2, 1, 2, 2), 0)


def test_code_length_matches_sets():
    for spec, a_index in [((2, 2, 2, 4), 0), ((2, 2, 2, 4), 1),
                          ((3, 1, 2, 6), 0), ((2, 1, 3, 6), 1),
                          ((2, 1, 1, 4), 1)]:
        tower = TowerSpec(*spec)
        assert code_length(tower, a_index) == \
            len(build_defining_set(tower, a_index))


# -- predicted and family distributions ----------------------------------------


def test_predicted_matches_brute():
    cases = [((2, 2, 2, 4), 0), ((3, 1, 2, 6), 0), ((2, 1, 2, 4), 1),
             ((2, 2, 2, 4), 1), ((2, 1, 3, 6), 1), ((2, 1, 1, 4), 1)]
    for spec, a_index in cases:
        tower = TowerSpec(*spec)
        brute = brute_weight_distribution(build_defining_set(tower, a_index))
        assert predicted_distribution(tower, a_index) == brute


def test_predicted_punctured():
    tower = TowerSpec(2, 2, 2, 4)
    brute = brute_weight_distribution(puncture(build_defining_set(tower, 0)))
    assert predicted_distribution(tower, 0, punctured=True) == brute
    with pytest.raises(ValueError):
        predicted_distribution(tower, 1, punctured=True)


def test_family_f2_zero_shift():
    d = dist_zero_shift_f2(4, 4)
    assert d.params() == (51, 4, 36)
    assert d.pairs() == [(0, 1), (36, 204), (48, 51)]
    d = dist_zero_shift_f2(3, 6)
    assert d.params() == (182, 6, 108)
    assert d.pairs() == [(0, 1), (108, 182), (126, 546)]
    p = dist_zero_shift_f2_punctured(4, 4)
    assert p.params() == (17, 4, 12)
    assert p.pairs() == [(0, 1), (12, 204), (16, 51)]
    with pytest.raises(ValueError):
        dist_zero_shift_f2(4, 5)
    with pytest.raises(ValueError):
        dist_zero_shift_f2(4, 2)


def test_family_nonzero_shift():
    d, bound = dist_nonzero_shift(2, 2, 4)
    assert d.pairs() == [(0, 1), (4, 5), (6, 10)]
    assert bound == 4
    d, _ = dist_nonzero_shift(2, 2, 6)
    assert d.pairs() == [(0, 1), (20, 42), (24, 21)]
    d, _ = dist_nonzero_shift(4, 2, 4)
    assert d.pairs() == [(0, 1), (48, 51), (52, 204)]
    # f = 1 gives the one-weight family
    d, bound = dist_nonzero_shift(2, 1, 3)
    assert d.pairs() == [(0, 1), (4, 7)]
    assert d.params() == (7, 3, 4) and bound == 4
    # f >= 3: only the bound
    d, bound = dist_nonzero_shift(2, 3, 6)
    assert d is None and bound == 13
    with pytest.raises(ValueError):
        dist_nonzero_shift(3, 1, 2)  # gcd(2, 2) = 2
    with pytest.raises(ValueError):
        dist_nonzero_shift(2, 2, 5)


def test_quad_power_trace_against_exact_surd():
    # (1 + sqrt(-7))^m tracked as a + b sqrt(-7) with exact integers
    a, b = 1, 1
    for m in range(1, 13):
        assert quad_power_trace(m) == 2 * a
        a, b = a - 7 * b, a + b
    assert quad_power_trace(0) == 2
    with pytest.raises(ValueError):
        quad_power_trace(-1)


def test_binary_cubic_family():
    d = dist_binary_cubic(6)
    assert d.params() == (36, 6, 16)
    assert d.pairs() == [(0, 1), (16, 27), (20, 36)]
    # k = 9 against both the enumerator and the spectrum route
    tower = TowerSpec(2, 1, 3, 9)
    brute = brute_weight_distribution(build_defining_set(tower, 1))
    assert dist_binary_cubic(9) == brute
    assert walsh_weight_distribution(get_field(2, 9), 3) == brute
    with pytest.raises(ValueError):
        dist_binary_cubic(7)
    with pytest.raises(ValueError):
        dist_binary_cubic(3)


def test_walsh_spectrum_parseval():
    F = get_field(2, 6)
    spec = walsh_spectrum(F, 3)
    assert spec.shape == (63,)
    n = (2 ** 2) * (2 ** 6 - 1) // (2 ** 3 - 1)
    at_zero = 2 ** 6 - 2 * n
    assert at_zero ** 2 + int((spec.astype(object) ** 2).sum()) == 4 ** 6
    with pytest.raises(ValueError):
        walsh_spectrum(get_field(3, 2), 1)
    with pytest.raises(ValueError):
        walsh_spectrum(F, 4)


# -- bounds and verdicts --------------------------------------------------------


def test_distance_bounds_frozen():
    assert dmin_bound_zero_shift(4, 2, 4) == 28
    assert dmin_bound_nonzero_shift(2, 2, 4) == 4
    assert dmin_bound_zero_shift_punctured(4, 2, 4) == 9
    assert dmin_bound_zero_shift(2, 3, 6) == 8  # odd k + f, exact sqrt floor
    assert dmin_bound_nonzero_shift(2, 1, 3) == 4
    assert dmin_bound_nonzero_shift(2, 3, 9) == 132


def test_bounds_hold_on_goldens():
    assert 36 >= dmin_bound_zero_shift(4, 2, 4)
    assert 108 >= dmin_bound_zero_shift(3, 2, 6)
    assert 4 >= dmin_bound_nonzero_shift(2, 2, 4)
    assert 48 >= dmin_bound_nonzero_shift(4, 2, 4)
    assert 16 >= dmin_bound_nonzero_shift(2, 3, 6)
    assert 12 >= dmin_bound_zero_shift_punctured(4, 2, 4)


def test_griesmer():
    assert griesmer_min_length(4, 4, 12) == 17
    assert griesmer_verdict(4, 17, 4, 12) == "optimal"
    # length exceeds the sum but no better distance fits
    assert griesmer_min_length(2, 4, 4) == 8
    assert griesmer_min_length(2, 4, 5) == 11  # rules out [10, 4, 5]
    assert griesmer_verdict(2, 10, 4, 4) == "optimal"
    assert griesmer_verdict(2, 42, 6, 20) == "optimal"
    assert griesmer_verdict(4, 68, 4, 48) == "unknown"
    assert griesmer_verdict(2, 6, 2, 3) == "almost_optimal_checked"
    with pytest.raises(ValueError):
        griesmer_verdict(2, 5, 4, 3)
    with pytest.raises(ValueError):
        griesmer_min_length(2, 0, 3)


def test_singleton_slack():
    assert singleton_slack(17, 4, 12) == 2
    assert singleton_slack(7, 3, 4) == 1
    assert singleton_slack(5, 4, 2) == 0  # MDS


def test_secret_sharing_check():
    full = dist_zero_shift_f2(4, 4)
    assert secret_sharing_check(full, 4) == (False, 36, 48)  # exact boundary
    assert secret_sharing_check(dist_zero_shift_f2(3, 6), 3) == \
        (True, 108, 126)
    d, _ = dist_nonzero_shift(2, 2, 4)
    assert secret_sharing_check(d, 2) == (True, 4, 6)
    from towercodes.codes import WeightDistribution
    with pytest.raises(ValueError):
        secret_sharing_check(WeightDistribution(5, 0, {0: 1}, 2), 2)


# -- report aggregation ----------------------------------------------------------


def test_report_applicable():
    tower = TowerSpec(2, 1, 2, 4)
    rep = TheoryReport(tower, 1)
    assert rep.applicable and rep.reason == ""
    brute = brute_weight_distribution(build_defining_set(tower, 1))
    assert rep.matches(brute) is True
    assert rep.bound == 4
    v = rep.verdicts(brute)
    assert v == {"griesmer_met": False, "griesmer_verdict": "optimal",
                 "singleton_slack": 3, "ss_ok": True,
                 "w_min": 4, "w_max": 6}


def test_report_not_applicable():
    rep = TheoryReport(TowerSpec(2, 1, 1, 3), 0)
    assert not rep.applicable and "k > f > 1" in rep.reason
    assert rep.predicted is None and rep.bound is None
    brute = brute_weight_distribution(build_defining_set(TowerSpec(2, 1, 1, 3),
                                                         1))
    assert rep.matches(brute) is None
    rep = TheoryReport(TowerSpec(5, 1, 2, 4), 1)
    assert not rep.applicable and "gcd" in rep.reason


def test_report_punctured():
    rep = TheoryReport(TowerSpec(2, 2, 2, 4), 0, punctured=True)
    assert rep.applicable
    assert rep.bound == 9
    brute = brute_weight_distribution(
        puncture(build_defining_set(TowerSpec(2, 2, 2, 4), 0)))
    assert rep.matches(brute) is True
    assert rep.verdicts(brute)["griesmer_met"] is True


# -- shift invariance -------------------------------------------------------------


def test_nonzero_shifts_share_one_distribution():
    tower = TowerSpec(3, 1, 2, 2)
    field = tower.field()
    q, kf = tower.q, tower.k // tower.f
    M = field.mult_order
    sets = {a: build_defining_set(tower, a) for a in (1, 2)}
    dists = {a: brute_weight_distribution(sets[a]) for a in (1, 2)}
    assert dists[1] == dists[2]
    # pointwise, the zero-count arrays are rotations of each other:
    # D_{u^(k/f) a} = u D_a for the right subfield unit u
    z1 = zero_trace_counts(sets[1])
    z2 = zero_trace_counts(sets[2])
    u = next(t for t in range(0, M, M // (q - 1))
             if field.mul(field.pow(t, kf), sets[1].a) == sets[2].a)
    assert np.array_equal(z2, np.roll(z1, -u))
