"""Clearance bricks and entropy-style bounds for finite sets."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickentropy import (
    NormTag,
    TruncationSchedule,
    Verdict,
    basis_radius,
    c0_entropy,
    clearance_brick,
    clearances,
    contains,
    entropy_bounds,
    norm,
    standard_c0,
    standard_lp,
    summing_c,
    synthesize,
)

SCHED = TruncationSchedule()


def test_clearances_are_coefficient_sups():
    basis = summing_c()
    # ambient vectors with summing coefficients (1, 1) and (2, -3)
    v1 = synthesize(basis, [1.0, 1.0]).data
    v2 = synthesize(basis, [2.0, -3.0]).data
    prof = clearances([v1, v2], basis)
    assert prof.values == (2.0, 3.0)
    assert prof.level == 2


def test_clearances_loop_oracle():
    rng = np.random.default_rng(9)
    vecs = [rng.uniform(-2.0, 2.0, size=6) for _ in range(7)]
    prof = clearances(vecs, standard_c0())
    # identity system: clearances are plain coordinate maxima
    stacked = np.stack(vecs)
    expect = np.max(np.abs(stacked), axis=0)
    np.testing.assert_array_equal(np.asarray(prof.values), expect)
    with pytest.raises(ValueError):
        clearances([], standard_c0())


def test_clearance_brick_contains_the_family():
    rng = np.random.default_rng(2)
    for basis in (standard_lp(1), standard_lp(2), standard_c0(), summing_c()):
        vecs = [rng.uniform(-1.0, 1.0, size=5) for _ in range(6)]
        brick = clearance_brick(clearances(vecs, basis))
        assert all(contains(brick, v, tol=1e-12) for v in vecs)
        assert brick.label().startswith("clearance[")


def test_basis_radius_is_analytic_and_finite():
    rng = np.random.default_rng(3)
    vecs = [rng.normal(size=6) for _ in range(4)]
    rep = basis_radius(vecs, standard_lp(2), SCHED)
    assert rep.verdict is Verdict.FINITE_ESTIMATE
    assert rep.method == "analytic-tail"
    prof = clearances(vecs, standard_lp(2))
    assert rep.estimate == pytest.approx(
        float(np.sqrt(np.sum(np.square(prof.values)))), abs=1e-12
    )


def test_c0_entropy_equals_clearance_radius_exactly():
    rng = np.random.default_rng(7)
    for _ in range(100):
        count = int(rng.integers(1, 6))
        dim = int(rng.integers(1, 9))
        vecs = [rng.uniform(-3.0, 3.0, size=dim) for _ in range(count)]
        rep = basis_radius(vecs, standard_c0(), SCHED)
        # same float path (coordinate max) on both sides: exact equality
        assert c0_entropy(vecs) == rep.estimate


def test_c0_entropy_hand_value():
    assert c0_entropy([[0.5, -2.0], [1.0, 0.0]]) == 2.0
    with pytest.raises(ValueError):
        c0_entropy([])


def test_entropy_upper_dominates_member_sup():
    rng = np.random.default_rng(1)
    vecs = [rng.normal(size=7) for _ in range(5)]
    rep = entropy_bounds(vecs, [standard_lp(2)], SCHED)
    assert rep.entropy_upper is not None
    assert rep.entropy_upper >= rep.member_sup - 1e-9
    # orthonormal columns: squared clearances reported, radius is their root
    assert rep.sum_of_squares
    name, ssq = rep.sum_of_squares[0]
    assert rep.entropy_upper == pytest.approx(np.sqrt(ssq), abs=1e-12)


def test_entropy_min_max_combination():
    vecs = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    rep = entropy_bounds(vecs, [standard_c0(), summing_c()], SCHED)
    names = [name for name, _ in rep.per_basis]
    assert names == ["standard_c0", "summing_c"]
    finite = [
        r.estimate
        for _, r in rep.per_basis
        if r.verdict is Verdict.FINITE_ESTIMATE and r.estimate is not None
    ]
    assert rep.entropy_upper == min(finite)
    assert rep.sudakov_lower == max(finite)
    # the summing system is conditional: only c0 feeds the sign-stable bound
    assert rep.one_unconditional_upper is not None
    c0_rep = dict(rep.per_basis)["standard_c0"]
    assert rep.one_unconditional_upper == c0_rep.estimate


def test_entropy_rejects_mixed_norms_and_empty_lists():
    vecs = [np.array([1.0])]
    with pytest.raises(ValueError, match="share one ambient norm"):
        entropy_bounds(vecs, [standard_c0(), standard_lp(2)], SCHED)
    with pytest.raises(ValueError):
        entropy_bounds(vecs, [], SCHED)


@settings(max_examples=40, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    dim=st.integers(min_value=1, max_value=8),
)
def test_entropy_upper_monotone_under_set_inclusion(seed, dim):
    """A subset never has a larger clearance radius than its superset."""
    rng = np.random.default_rng(seed)
    big = [rng.uniform(-1.0, 1.0, size=dim) for _ in range(6)]
    small = big[:3]
    for make in (standard_c0, lambda: standard_lp(2)):
        up_small = entropy_bounds(small, [make()], SCHED).entropy_upper
        up_big = entropy_bounds(big, [make()], SCHED).entropy_upper
        assert up_small <= up_big + 1e-12


def test_scaling_a_family_scales_its_bounds():
    rng = np.random.default_rng(12)
    vecs = [rng.normal(size=5) for _ in range(4)]
    base = entropy_bounds(vecs, [standard_lp(2)], SCHED)
    doubled = entropy_bounds([2.0 * v for v in vecs], [standard_lp(2)], SCHED)
    assert doubled.entropy_upper == pytest.approx(2.0 * base.entropy_upper, rel=1e-12)
    assert doubled.member_sup == pytest.approx(2.0 * base.member_sup, rel=1e-12)


def test_c0_entropy_norm_identity():
    # in c0 the entropy *is* the member sup: no brick can do better
    rng = np.random.default_rng(8)
    vecs = [rng.uniform(-1.0, 1.0, size=6) for _ in range(5)]
    member_sup = max(norm(v, NormTag.SUP) for v in vecs)
    assert c0_entropy(vecs) == member_sup
