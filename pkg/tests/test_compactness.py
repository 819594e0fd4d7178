"""Compactness verdicts, witnesses, nets, and signed-sum enumeration."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickentropy import (
    Brick,
    BudgetError,
    CapExceededError,
    CompactnessKind,
    ConstantTail,
    CustomTail,
    HalfHeights,
    NormTag,
    PowerLawTail,
    PreconditionError,
    TruncationSchedule,
    ZeroTail,
    brick_compactness,
    contains,
    epsilon_net,
    gelfand_set,
    make_uncompact_basis,
    norm,
    precompact_test,
    reciprocal_sqrt_tail,
    reciprocal_tail,
    standard_c0,
    standard_lp,
    summing_c,
    synthesize,
    tail_radius_bound,
    truncated_sign_radius,
    verify_window_witness,
    windowed_sign_max,
)

SCHED = TruncationSchedule()


# -- dichotomy --------------------------------------------------------------


def test_compactness_dichotomy_four_cases():
    cases = [
        (standard_lp(2), reciprocal_tail(), CompactnessKind.COMPACT_EVIDENCE),
        (standard_lp(2), reciprocal_sqrt_tail(), CompactnessKind.NONCOMPACT_EVIDENCE),
        (standard_c0(), reciprocal_tail(), CompactnessKind.COMPACT_EVIDENCE),
        (standard_c0(), ConstantTail(1.0), CompactnessKind.NONCOMPACT_EVIDENCE),
    ]
    for basis, tail, expect in cases:
        rep = brick_compactness(Brick(basis, HalfHeights(tail=tail)), SCHED)
        assert rep.verdict is expect, basis.name
        if expect is CompactnessKind.NONCOMPACT_EVIDENCE:
            assert rep.witness is not None
            assert verify_window_witness(Brick(basis, HalfHeights(tail=tail)), rep.witness)
        else:
            assert rep.witness is None


def test_uncompact_blocks_witness_is_a_block_window():
    brick = Brick(make_uncompact_basis(), HalfHeights(tail=reciprocal_tail()))
    sched = TruncationSchedule(levels=(2, 7, 20))
    rep = brick_compactness(brick, sched)
    assert rep.verdict is CompactnessKind.NONCOMPACT_EVIDENCE
    assert (rep.witness.lo, rep.witness.hi) == (2, 7)
    # the witness value is the second harmonic block's reciprocal sum
    expect = sum(1.0 / k for k in range(3, 8))
    assert rep.witness.value == pytest.approx(expect, abs=1e-12)
    assert verify_window_witness(brick, rep.witness)


def test_analytic_divergence_with_flat_windows_is_reported_honestly():
    # heights vanish up to coordinate 48, then turn constant: the rule says
    # divergent but no window within the schedule can exhibit it
    heights = HalfHeights(prefix=(0.0,) * 48, tail=ConstantTail(1.0))
    rep = brick_compactness(Brick(standard_c0(), heights), SCHED)
    assert rep.verdict is CompactnessKind.INCONCLUSIVE
    assert rep.witness is None
    assert "no window" in rep.notes


def test_numeric_compactness_for_custom_rules():
    fast = Brick(summing_c(), HalfHeights(tail=CustomTail(fn=lambda n: 4.0**-n)))
    assert brick_compactness(fast, SCHED).verdict is CompactnessKind.COMPACT_EVIDENCE
    flat = Brick(summing_c(), HalfHeights(tail=CustomTail(fn=lambda n: 1.0)))
    rep = brick_compactness(flat, SCHED)
    assert rep.verdict is CompactnessKind.NONCOMPACT_EVIDENCE
    assert verify_window_witness(flat, rep.witness)


def test_witness_tampering_is_detected():
    brick = Brick(standard_c0(), HalfHeights(tail=ConstantTail(1.0)))
    rep = brick_compactness(brick, SCHED)
    w = rep.witness
    assert verify_window_witness(brick, w)
    from brickentropy import WindowMax

    forged = WindowMax(lo=w.lo, hi=w.hi, value=w.value + 0.5, signs=w.signs, method=w.method)
    assert not verify_window_witness(brick, forged)


# -- uniform tail decay -------------------------------------------------------


def test_precompact_family_with_decaying_tails():
    basis = standard_lp(2)
    vecs = [synthesize(basis, 2.0 ** -np.arange(1.0, k + 1.0)).data for k in (3, 6, 20)]
    rep = precompact_test(vecs, basis, SCHED)
    assert rep.verdict is CompactnessKind.COMPACT_EVIDENCE
    assert rep.tail_sups[-1] <= SCHED.cauchy_tol
    # tail sups shrink monotonically with the level
    assert all(b <= a + 1e-12 for a, b in zip(rep.tail_sups, rep.tail_sups[1:]))


def test_precompact_flags_the_heavy_member():
    basis = standard_c0()
    flat = np.ones(60)
    small = np.zeros(60)
    small[0] = 1.0
    rep = precompact_test([small, flat], basis, SCHED)
    assert rep.verdict is CompactnessKind.NONCOMPACT_EVIDENCE
    assert rep.witness_index == 1  # the flat vector refuses to flatten
    assert rep.witness_value == 1.0
    with pytest.raises(ValueError):
        precompact_test([], basis, SCHED)


# -- exact tail bounds ---------------------------------------------------------


def test_tail_radius_bound_closed_forms():
    rec2 = HalfHeights(tail=PowerLawTail(alpha=2.0))
    # l1: plain tail sum
    l1 = Brick(standard_lp(1), rec2)
    n = np.arange(11.0, 300_011.0)
    partial = float(np.sum(n**-2))
    bound = tail_radius_bound(l1, 10)
    assert partial <= bound <= partial + 1.0 / 300_000
    # l2 with reciprocal heights: root of the squared tail sum
    l2 = Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail()))
    sq = tail_radius_bound(l2, 10) ** 2
    assert partial <= sq <= partial + 1.0 / 300_000
    # c0: height sup past the level
    c0 = Brick(standard_c0(), HalfHeights(tail=reciprocal_tail()))
    assert tail_radius_bound(c0, 10) == pytest.approx(1.0 / 11.0)
    # summing system: height tail sum again
    cs = Brick(summing_c(), rec2)
    assert tail_radius_bound(cs, 10) == pytest.approx(bound, abs=1e-15)


def test_tail_radius_bound_none_when_unknown():
    brick = Brick(summing_c(), HalfHeights(tail=reciprocal_tail()))
    assert tail_radius_bound(brick, 10) is None  # not summable
    custom = Brick(standard_lp(2), HalfHeights(tail=CustomTail(fn=lambda n: 0.0)))
    assert tail_radius_bound(custom, 10) is None  # rule carries no facts


def test_tail_bound_dominates_actual_window_maxima():
    bricks = [
        Brick(standard_lp(1), HalfHeights(tail=PowerLawTail(alpha=2.0))),
        Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail())),
        Brick(standard_c0(), HalfHeights(tail=reciprocal_tail())),
    ]
    for brick in bricks:
        for lo in (4, 8, 16):
            bound = tail_radius_bound(brick, lo)
            seen = windowed_sign_max(brick, lo, lo + 12).value
            assert seen <= bound + 1e-12


# -- explicit nets ---------------------------------------------------------------


def test_dyadic_net_counts_and_coverage():
    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0, 0.5, 0.25), tail=ZeroTail()))
    net = epsilon_net(brick, eps=0.3)
    assert net.level == 3
    assert net.grid_counts == (7, 4, 2)
    assert len(net) == 56
    assert all(contains(brick, p.data) for p in net.points)
    # every member is within eps of some net point (midpoint grids: the
    # coefficient deviation per axis is at most eps_i / counts_i <= delta)
    rng = np.random.default_rng(0)
    pts = np.stack([p.data for p in net.points])
    samples = rng.uniform(-1.0, 1.0, size=(3000, 3)) * np.array([1.0, 0.5, 0.25])
    dists = np.min(np.max(np.abs(samples[:, None, :] - pts[None, :, :]), axis=2), axis=1)
    assert float(np.max(dists)) <= 0.3


def test_net_size_nonincreasing_in_eps():
    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0, 0.5, 0.25), tail=ZeroTail()))
    sizes = [len(epsilon_net(brick, eps)) for eps in (0.2, 0.3, 0.8, 2.1)]
    assert sizes == sorted(sizes, reverse=True)
    # a huge eps needs only the zero point
    assert sizes[-1] == 1


def test_net_level_search_handles_infinite_tails():
    brick = Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail()))
    net = epsilon_net(brick, eps=1.2)
    assert net.tail_bound <= 0.6
    assert all(contains(brick, p.data, tol=1e-12) for p in net.points)


def test_net_rejects_noncompact_and_tiny_budgets():
    flat = Brick(standard_c0(), HalfHeights(tail=ConstantTail(1.0)))
    with pytest.raises(PreconditionError):
        epsilon_net(flat, eps=0.5)
    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0,) * 6, tail=ZeroTail()))
    with pytest.raises(BudgetError):
        epsilon_net(brick, eps=0.05, budget=100)
    with pytest.raises(ValueError):
        epsilon_net(brick, eps=0.0)


def test_net_explicit_level_must_meet_tail_budget():
    brick = Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail()))
    with pytest.raises(PreconditionError):
        epsilon_net(brick, eps=0.5, level=2)  # tail past 2 is way above 0.25


@settings(max_examples=20, deadline=None)
@given(
    eps=st.floats(min_value=0.25, max_value=3.0),
    seed=st.integers(min_value=0, max_value=500),
)
def test_net_coverage_property(eps, seed):
    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0, 0.6), tail=ZeroTail()))
    net = epsilon_net(brick, eps)
    raw = np.stack([p.data for p in net.points])
    dim = max(raw.shape[1], 2)  # the big-eps net is the 1-D zero point
    pts = np.zeros((raw.shape[0], dim))
    pts[:, : raw.shape[1]] = raw
    rng = np.random.default_rng(seed)
    samples = np.zeros((200, dim))
    samples[:, :2] = rng.uniform(-1.0, 1.0, size=(200, 2)) * np.array([1.0, 0.6])
    dists = np.min(np.max(np.abs(samples[:, None, :] - pts[None, :, :]), axis=2), axis=1)
    assert float(np.max(dists)) <= eps + 1e-12


# -- signed sums --------------------------------------------------------------


def test_gelfand_enumerates_all_sign_patterns():
    vecs = [np.eye(3)[k] * (k + 1.0) for k in range(3)]
    rep = gelfand_set(vecs, NormTag.L1)
    assert rep.count == 8
    assert rep.max_norm == 6.0  # disjoint supports: every pattern sums the sizes
    assert rep.diameter == 12.0


def test_gelfand_max_matches_brick_radius_exactly():
    m = 10
    vecs = [np.eye(m)[k] * 2.0 ** -(k + 1) for k in range(m)]
    rep = gelfand_set(vecs, NormTag.L2)
    heights = tuple(2.0 ** -(k + 1) for k in range(m))
    brick = Brick(standard_lp(2), HalfHeights(prefix=heights, tail=ZeroTail()))
    # same float path on both sides: equality is exact, not approximate
    assert rep.max_norm == truncated_sign_radius(brick, m)
    assert rep.diameter == 2.0 * rep.max_norm


def test_gelfand_diameter_is_attained():
    rng = np.random.default_rng(4)
    vecs = [rng.normal(size=5) for _ in range(6)]
    for tag in NormTag:
        rep = gelfand_set(vecs, tag)
        # the diameter is realised by a pair of opposite signed sums
        dists = [
            norm(rep.points[i] - rep.points[j], tag)
            for i in range(rep.count)
            for j in range(i, rep.count)
        ]
        assert max(dists) == pytest.approx(rep.diameter, abs=1e-12)


def test_gelfand_cap_and_empty_family():
    with pytest.raises(CapExceededError):
        gelfand_set([np.ones(2)] * 21, NormTag.L2)
    with pytest.raises(ValueError):
        gelfand_set([], NormTag.L2)
