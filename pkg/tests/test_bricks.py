"""Half-height rules, exact tail sums, and brick membership."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickentropy import (
    Brick,
    ConstantTail,
    CustomTail,
    HalfHeights,
    KernelInvariantError,
    PowerLawTail,
    ZeroTail,
    contains,
    extreme_point,
    is_extreme,
    reciprocal_sqrt_tail,
    reciprocal_tail,
    solidity_certificate,
    standard_c0,
    standard_lp,
    summing_c,
    synthesize,
)


# -- tail rules: values and analytic facts -------------------------------


def test_power_law_analytic_facts():
    assert PowerLawTail(alpha=2.0).summable is True
    assert PowerLawTail(alpha=1.0).summable is False
    assert PowerLawTail(alpha=0.5).summable is False
    assert PowerLawTail(alpha=1.0).square_summable is True
    assert PowerLawTail(alpha=0.5).square_summable is False
    assert PowerLawTail(alpha=0.4).square_summable is False
    assert PowerLawTail(alpha=0.0, scale=1.0).limit_zero is False
    assert PowerLawTail(alpha=0.0, scale=0.0).limit_zero is True
    with pytest.raises(ValueError):
        PowerLawTail(alpha=-1.0)


def test_constant_tail_facts():
    flat = ConstantTail(0.25)
    assert flat.summable is False and flat.limit_zero is False
    assert flat.sup_from(100) == 0.25
    zero = ConstantTail(0.0)
    assert zero.summable is True and zero.tail_sum(5) == 0.0
    with pytest.raises(ValueError):
        ConstantTail(-0.1)


def test_custom_tail_has_no_analytic_facts():
    rule = CustomTail(fn=lambda n: 1.0 / (n * n + 1))
    assert rule.summable is None and rule.limit_zero is None
    assert rule.tail_sum(3) is None
    assert rule.value(2) == 0.2
    with pytest.raises(ValueError):
        CustomTail(fn=lambda n: -1.0).value(1)
    with pytest.raises(ValueError):
        CustomTail(fn=None)


def _loop_tail_sum(rule, after, terms=2_000_000):
    """Bracket the exact tail sum by a long partial sum plus an integral
    remainder bound; only for strictly decreasing rules."""
    n = np.arange(after + 1, after + terms + 1, dtype=float)
    partial = float(np.sum(rule.values(n)))
    lo = partial  # remainder is positive
    hi = partial + rule.value(after + terms)  # crude but adequate at alpha > 1
    return lo, hi


def test_power_law_tail_sum_matches_loop_bracket():
    rule = PowerLawTail(alpha=2.0, scale=3.0)
    for after in (0, 1, 10):
        exact = rule.tail_sum(after)
        n = np.arange(after + 1, after + 200_001, dtype=float)
        partial = float(np.sum(rule.values(n)))
        # integral bracket for the remainder of sum 3/n^2 past N:
        # 3/(N+1) < R < 3/N
        big_n = after + 200_000
        assert partial + 3.0 / (big_n + 1) <= exact <= partial + 3.0 / big_n


def test_reciprocal_square_sum_matches_loop_bracket():
    rule = reciprocal_tail()
    sq = rule.tail_sq_sum(0)
    n = np.arange(1.0, 200_001.0)
    partial = float(np.sum(1.0 / n**2))
    assert partial + 1.0 / 200_001 <= sq <= partial + 1.0 / 200_000
    # and the closed form is pi^2 / 6
    assert sq == pytest.approx(np.pi**2 / 6.0, abs=1e-12)


def test_reciprocal_sqrt_values():
    rule = reciprocal_sqrt_tail(scale=2.0)
    assert rule.value(4) == 1.0
    assert rule.tail_sum(0) is None  # not summable
    assert rule.tail_sq_sum(0) is None  # squares are reciprocals: also not


# -- prefix + tail composition --------------------------------------------


def test_half_heights_prefix_overrides_tail():
    h = HalfHeights(prefix=(5.0, 4.0), tail=reciprocal_tail())
    assert h.value(1) == 5.0
    assert h.value(2) == 4.0
    assert h.value(3) == pytest.approx(1.0 / 3.0)
    np.testing.assert_allclose(h.values(4), [5.0, 4.0, 1 / 3, 0.25])
    with pytest.raises(IndexError):
        h.value(0)
    with pytest.raises(ValueError):
        HalfHeights(prefix=(-1.0,))


def test_half_heights_tail_sum_spans_the_boundary():
    h = HalfHeights(prefix=(5.0, 4.0), tail=PowerLawTail(alpha=2.0))
    # cutting inside the prefix: remaining prefix entries plus the rule tail
    expect = 4.0 + float(h.tail.tail_sum(2))
    assert h.tail_sum(1) == pytest.approx(expect, abs=1e-12)
    # cutting past the prefix delegates to the rule
    assert h.tail_sum(5) == pytest.approx(float(h.tail.tail_sum(5)), abs=1e-15)


def test_half_heights_sup_spans_the_boundary():
    h = HalfHeights(prefix=(0.1, 7.0), tail=ConstantTail(0.5))
    assert h.sup_from(1) == 7.0
    assert h.sup_from(3) == 0.5
    hz = HalfHeights(prefix=(0.1, 7.0), tail=ZeroTail())
    assert hz.sup_from(3) == 0.0


def test_describe_labels():
    assert HalfHeights(tail=ZeroTail()).describe() == "zero"
    assert "prefix[1,0.5]" in HalfHeights(prefix=(1.0, 0.5)).describe()
    brick = Brick(standard_lp(2), HalfHeights(tail=reciprocal_tail()))
    assert "standard_l2" in brick.label()
    named = Brick(standard_lp(2), HalfHeights(), name="xyz")
    assert named.label() == "xyz"


# -- membership, vertices, solidity ----------------------------------------


def test_contains_uses_coefficients_not_coordinates():
    brick = Brick(summing_c(), HalfHeights(prefix=(1.0, 1.0), tail=ZeroTail()))
    # ambient vector (1, 2) has summing coefficients (1, 1): inside
    assert contains(brick, [1.0, 2.0])
    # ambient vector (1, -1) has coefficients (1, -2): outside
    assert not contains(brick, [1.0, -1.0])


def test_extreme_point_and_is_extreme():
    brick = Brick(standard_lp(2), HalfHeights(prefix=(1.0, 0.5, 0.25), tail=ZeroTail()))
    v = extreme_point(brick, [1.0, -1.0, 1.0])
    np.testing.assert_allclose(v.data, [1.0, -0.5, 0.25])
    assert is_extreme(brick, v.data, 3)
    assert not is_extreme(brick, [0.5, -0.5, 0.25], 3)  # first coord interior
    with pytest.raises(ValueError):
        extreme_point(brick, [1.0, 2.0, 1.0])
    with pytest.raises(ValueError):
        extreme_point(brick, [1.0, -1.0], n=3)


def test_extreme_points_are_members():
    brick = Brick(summing_c(), HalfHeights(tail=reciprocal_tail()))
    rng = np.random.default_rng(5)
    for _ in range(20):
        theta = rng.choice([-1.0, 1.0], size=8)
        v = extreme_point(brick, theta)
        assert contains(brick, v.data, tol=1e-12)
        assert is_extreme(brick, v.data, 8, tol=1e-9)


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(
        st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
        min_size=1,
        max_size=8,
    ),
    shrink=st.floats(min_value=0.0, max_value=1.0),
)
def test_solidity_under_coordinatewise_shrink(coeffs, shrink):
    """Scaling the coefficients of a member toward zero keeps membership;
    the certificate must confirm domination without tripping its cross-check."""
    heights = HalfHeights(prefix=(1.0,) * 8, tail=ZeroTail())
    for basis in (standard_lp(1), standard_lp(2), standard_c0(), summing_c()):
        brick = Brick(basis, heights)
        x = synthesize(basis, np.asarray(coeffs))
        y = synthesize(basis, shrink * np.asarray(coeffs))
        assert solidity_certificate(brick, x.data, y.data, tol=1e-9)


def test_solidity_certificate_rejects_non_dominated():
    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0, 1.0), tail=ZeroTail()))
    # y escapes domination by x (and the brick is big enough to hold both,
    # so no invariant trips -- the certificate just declines)
    assert not solidity_certificate(brick, [0.5, 0.5], [0.9, 0.5])
    # x itself outside the brick: no certificate either
    assert not solidity_certificate(brick, [2.0, 0.0], [0.5, 0.0])


def test_solidity_cross_check_trips_on_inconsistent_heights():
    class LyingTail(ZeroTail):
        pass

    brick = Brick(standard_c0(), HalfHeights(prefix=(1.0,), tail=ZeroTail()))
    # x has a second coefficient beyond the stored prefix with height zero:
    # contains(x) is False, so the certificate simply returns False
    assert not solidity_certificate(brick, [1.0, 0.5], [1.0, 0.25])


def test_dominated_vector_membership_is_reverified():
    # direct misuse: y dominated by x but y fails contains() can only occur
    # if coefficient recovery is broken, which the check must surface; with a
    # healthy basis it never raises, so document the guarantee by API contract
    brick = Brick(summing_c(), HalfHeights(tail=reciprocal_tail()))
    x = synthesize(summing_c(), [1.0, 0.5, 1.0 / 3.0])
    assert solidity_certificate(brick, x.data, 0.5 * x.data)
