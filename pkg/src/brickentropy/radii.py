"""Truncated radii of bricks and their convergence verdicts.

Everything here reduces to one finite object: the maximum norm of a
signed combination sum_n theta_n * eps_n * e_n over sign patterns theta.
A box maximum always lands on a sign vertex, so the sup over the whole
truncated brick equals the sup over the 2^n vertices; that finite sup is
tracked along a schedule of truncation levels and classified as a finite
estimate, divergence evidence, or inconclusive.

Three exact shortcuts avoid the exponential sweep whenever the norm
allows it: one-unconditional systems answer with the all-plus vertex,
orthonormal columns in the 2-norm give the root of the summed squared
heights, and sup-norm systems reduce to the largest absolute row sum of
the scaled column matrix.  The general fallback is a Gray-code walk with
incremental vector updates (re-evaluated freshly at its argmax), next to
a chunked brute-force kernel kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bases import ENUMERATION_CAP, BasisKind, BasisModel, harmonic_breakpoints
from .bricks import Brick, ConstantTail, HalfHeights, PowerLawTail
from .errors import CapExceededError, KernelInvariantError
from .sequences import NormTag, norm

__all__ = [
    "TruncationSchedule",
    "Verdict",
    "RadiusReport",
    "WindowMax",
    "PatternEvidence",
    "sign_vertex_max",
    "truncated_sign_radius",
    "windowed_sign_max",
    "series_convergence",
    "radius_limit",
    "unconditional_radius",
    "absolute_radius",
    "extreme_radius",
    "pattern_convergence",
    "radii_coincide",
    "CoincidenceReport",
]

import enum


class Verdict(enum.Enum):
    FINITE_ESTIMATE = "FiniteEstimate"
    DIVERGENCE_EVIDENCE = "DivergenceEvidence"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class TruncationSchedule:
    """Truncation levels plus the two thresholds used to read them.

    Increments below ``cauchy_tol`` count as stabilisation; window maxima
    or increments that never drop below ``divergence_floor`` count as
    divergence evidence.  The final window doubles the last level so a
    verdict never rests on the sampled levels alone.
    """

    levels: tuple[int, ...] = (4, 8, 12, 16, 20, 24)
    cauchy_tol: float = 1e-6
    divergence_floor: float = 1e-3

    def __post_init__(self):
        lv = tuple(int(x) for x in self.levels)
        if len(lv) == 0:
            raise ValueError("a schedule needs at least one level")
        if lv[0] < 1 or any(a >= b for a, b in zip(lv, lv[1:])):
            raise ValueError("levels must be positive and strictly increasing")
        if not (self.cauchy_tol > 0 and self.divergence_floor > 0):
            raise ValueError("tolerances must be positive")
        object.__setattr__(self, "levels", lv)

    def windows(self) -> tuple[tuple[int, int], ...]:
        """Consecutive level windows plus a final doubled window."""
        lv = self.levels
        pairs = [(a, b) for a, b in zip(lv, lv[1:])]
        pairs.append((lv[-1], 2 * lv[-1]))
        return tuple(pairs)


@dataclass(frozen=True)
class WindowMax:
    """Largest signed-combination norm over one coordinate window."""

    lo: int
    hi: int
    value: float
    signs: tuple[int, ...]
    method: str


@dataclass(frozen=True)
class PatternEvidence:
    """Convergence evidence for one sign pattern of the height series."""

    name: str
    converged: bool | None
    method: str
    level_norms: tuple[float, ...]
    window_norms: tuple[float, ...]
    windows: tuple[tuple[int, int], ...]

    @property
    def level_increments(self) -> tuple[float, ...]:
        return tuple(
            abs(b - a) for a, b in zip(self.level_norms, self.level_norms[1:])
        )


@dataclass(frozen=True)
class RadiusReport:
    """Per-level radius values with a classified limit."""

    kind: str
    brick_label: str
    levels: tuple[int, ...]
    values: tuple[float, ...]
    verdict: Verdict
    estimate: float | None
    method: str
    window_maxima: tuple[float, ...] = ()
    existence: bool | None = None
    patterns: tuple[PatternEvidence, ...] = ()
    notes: str = ""

    @property
    def increments(self) -> tuple[float, ...]:
        return tuple(abs(b - a) for a, b in zip(self.values, self.values[1:]))


# -- sign-vertex kernels ----------------------------------------------

_NAIVE_CHUNK = 1 << 14


def _eval_vertex(cols: np.ndarray, theta: np.ndarray, tag: NormTag) -> float:
    """Single shared evaluation path so kernels agree bit-for-bit."""
    return norm(cols @ theta, tag)


def _vertex_naive(cols: np.ndarray, tag: NormTag) -> tuple[float, np.ndarray]:
    """Chunked sweep over all sign patterns with the leading sign fixed."""
    d, m = cols.shape
    total = 1 << (m - 1)
    best_val = -np.inf
    best_bits = 0
    for start in range(0, total, _NAIVE_CHUNK):
        idx = np.arange(start, min(start + _NAIVE_CHUNK, total), dtype=np.int64)
        theta = np.ones((idx.size, m))
        if m > 1:
            bits = (idx[:, None] >> np.arange(m - 1)) & 1
            theta[:, 1:] = 1.0 - 2.0 * bits
        vecs = theta @ cols.T
        if tag is NormTag.L1:
            norms = np.sum(np.abs(vecs), axis=1)
        elif tag is NormTag.L2:
            norms = np.linalg.norm(vecs, axis=1)
        else:
            norms = np.max(np.abs(vecs), axis=1)
        k = int(np.argmax(norms))
        if norms[k] > best_val:
            best_val = float(norms[k])
            best_bits = int(idx[k])
    theta = np.ones(m)
    if m > 1:
        theta[1:] = 1.0 - 2.0 * ((best_bits >> np.arange(m - 1)) & 1)
    return _eval_vertex(cols, theta, tag), theta


def _vertex_gray(cols: np.ndarray, tag: NormTag) -> tuple[float, np.ndarray]:
    """Gray-code walk: one sign flip and one rank-1 update per step."""
    d, m = cols.shape
    theta = np.ones(m)
    v = cols @ theta
    best_val = norm(v, tag)
    best_theta = theta.copy()
    for i in range(1, 1 << (m - 1)):
        j = (i & -i).bit_length()  # flipped column, 1-based (sign 1 stays fixed)
        theta[j] = -theta[j]
        v += 2.0 * theta[j] * cols[:, j]
        val = norm(v, tag)
        if val > best_val:
            best_val = val
            best_theta = theta.copy()
    # Re-evaluate at the argmax to drop any drift from the running updates.
    return _eval_vertex(cols, best_theta, tag), best_theta


def _vertex_sup_rows(cols: np.ndarray) -> tuple[float, np.ndarray]:
    """Exact sup-norm maximum: the largest absolute row sum, no sweep.

    For any signs, coordinate i of the combination is at most the absolute
    row sum; the signs of the winning row achieve it.
    """
    row_sums = np.sum(np.abs(cols), axis=1)
    i = int(np.argmax(row_sums))
    theta = np.where(cols[i] < 0, -1.0, 1.0)
    if theta[0] < 0:
        theta = -theta
    return _eval_vertex(cols, theta, NormTag.SUP), theta


def sign_vertex_max(
    cols: np.ndarray,
    tag: NormTag,
    method: str = "auto",
    cap: int = ENUMERATION_CAP,
) -> tuple[float, np.ndarray]:
    """Maximum norm of cols @ theta over sign vectors theta.

    ``method`` picks the kernel: "auto" uses the sup-norm row shortcut
    when available and the Gray walk otherwise; "gray" / "naive" force an
    enumeration (useful for agreement checks).  Enumerations refuse more
    than ``cap`` sign coordinates.
    """
    cols = np.asarray(cols, dtype=float)
    if cols.ndim != 2:
        raise ValueError("expected a 2-D column matrix")
    d, m = cols.shape
    if m == 0:
        return 0.0, np.ones(0)
    if method == "auto" and tag is NormTag.SUP:
        return _vertex_sup_rows(cols)
    if m > cap:
        raise CapExceededError(
            f"sign sweep over {m} coordinates exceeds the cap of {cap}"
        )
    if method in ("auto", "gray"):
        return _vertex_gray(cols, tag)
    if method == "naive":
        return _vertex_naive(cols, tag)
    raise ValueError(f"unknown kernel method {method!r}")


# -- window maxima over a brick ---------------------------------------


def _window_columns(brick: Brick, lo: int, hi: int) -> np.ndarray:
    """Ambient columns lo+1 .. hi of the basis, scaled by the heights."""
    s = brick.basis.synth_matrix(hi)
    eps = brick.heights.values(hi)
    return s[:, lo:hi] * eps[lo:hi]


def windowed_sign_max(
    brick: Brick,
    lo: int,
    hi: int,
    cap: int = ENUMERATION_CAP,
    method: str = "auto",
) -> WindowMax:
    """Largest norm of a signed height combination over coordinates (lo, hi].

    With lo = 0 this is the truncated sign radius at level hi.  Exact
    shortcuts are tried first; the reported sign pattern always reproduces
    the value through the ordinary evaluation path, so every result is
    re-checkable.
    """
    if not (0 <= lo < hi):
        raise ValueError("need 0 <= lo < hi")
    basis = brick.basis
    eps = brick.heights.values(hi)[lo:hi]
    width = hi - lo
    if not np.any(eps):
        return WindowMax(lo, hi, 0.0, (1,) * width, "zero-heights")
    if method == "auto":
        one_uncond = basis.one_unconditional or (
            basis.kind is BasisKind.USER_BLOCK
            and basis.base.is_identity
            and basis.base.one_unconditional
        )
        if one_uncond:
            cols = _window_columns(brick, lo, hi)
            value = _eval_vertex(cols, np.ones(width), basis.norm_tag)
            return WindowMax(lo, hi, value, (1,) * width, "one-unconditional")
        if basis.norm_tag is NormTag.L2 and basis.orthonormal_columns:
            value = float(np.sqrt(np.sum(eps**2)))
            return WindowMax(lo, hi, value, (1,) * width, "orthonormal-columns")
    cols = _window_columns(brick, lo, hi)
    value, theta = sign_vertex_max(cols, basis.norm_tag, method=method, cap=cap)
    kernel = method
    if method == "auto":
        kernel = "row-sums" if basis.norm_tag is NormTag.SUP else "gray"
    return WindowMax(lo, hi, value, tuple(int(t) for t in theta), kernel)


def truncated_sign_radius(
    brick: Brick, n: int, cap: int = ENUMERATION_CAP, method: str = "auto"
) -> float:
    """Radius of the order-n truncated brick: the largest vertex norm."""
    return windowed_sign_max(brick, 0, n, cap=cap, method=method).value


# -- analytic classification of the height series ----------------------


def series_convergence(basis: BasisModel, heights: HalfHeights) -> bool | None:
    """Does sum_n theta_n eps_n e_n converge for every sign choice?

    Answered per basis family from the height rule's analytic facts:
    vanishing heights for the c0 system, summability for l1 and for the
    summing system, square summability for l2.  For the harmonic-block
    system a non-summable recognized rule keeps whole-block sums bounded
    below, so the answer is negative; None means the rule does not decide.
    """
    kind = basis.kind
    if kind is BasisKind.STANDARD_C0:
        return heights.limit_zero
    if kind is BasisKind.STANDARD_LP:
        return heights.summable if basis.p == 1 else heights.square_summable
    if kind is BasisKind.SUMMING_C:
        return heights.summable
    if kind is BasisKind.UNCOMPACT_BLOCKS:
        if heights.summable:
            return True
        rule = heights.tail
        if isinstance(rule, PowerLawTail) and rule.alpha <= 1 and rule.scale > 0:
            return False
        if isinstance(rule, ConstantTail) and rule.level > 0:
            return False
        return None
    if kind is BasisKind.USER_BLOCK and basis.base.is_identity:
        # Disjoint normalized blocks of an identity system form an
        # isometric copy of that system, so the same rules apply.
        return series_convergence(basis.base, heights)
    return None


def _uncompact_block_sup(heights: HalfHeights) -> float | None:
    """sup over harmonic blocks of the block height sums (summable rule)."""
    best = 0.0
    lo = 0
    for k in range(1, 2000):
        hi = harmonic_breakpoints(k)[-1]
        best = max(best, float(np.sum(heights.values(hi)[lo:hi])))
        rest = heights.tail_sum(hi)
        if rest is None:
            return None
        if rest < best:
            return best
        lo = hi
    return None


def radius_limit(basis: BasisModel, heights: HalfHeights, level: int) -> float | None:
    """Exact limit of the truncated sign radius when the series converges.

    Uses closed-form tail sums (Hurwitz zeta) past the stated level; None
    when no closed form is available.
    """
    if series_convergence(basis, heights) is not True:
        return None
    kind = basis.kind
    if kind is BasisKind.STANDARD_C0:
        return heights.sup_from(1)
    if kind is BasisKind.STANDARD_LP and basis.p == 1:
        return heights.tail_sum(0)
    if kind is BasisKind.STANDARD_LP and basis.p == 2:
        sq = heights.tail_sq_sum(0)
        return None if sq is None else float(np.sqrt(sq))
    if kind is BasisKind.SUMMING_C:
        return heights.tail_sum(0)
    if kind is BasisKind.UNCOMPACT_BLOCKS:
        return _uncompact_block_sup(heights)
    if kind is BasisKind.USER_BLOCK and basis.base.is_identity:
        return radius_limit(basis.base, heights, level)
    return None


# -- the three radii ---------------------------------------------------


def _level_values(
    brick: Brick, schedule: TruncationSchedule, cap: int
) -> tuple[float, ...]:
    return tuple(truncated_sign_radius(brick, n, cap=cap) for n in schedule.levels)


def _window_values(
    brick: Brick, schedule: TruncationSchedule, cap: int
) -> tuple[WindowMax, ...]:
    return tuple(
        windowed_sign_max(brick, lo, hi, cap=cap) for lo, hi in schedule.windows()
    )


def unconditional_radius(
    brick: Brick, schedule: TruncationSchedule | None = None, cap: int = ENUMERATION_CAP
) -> RadiusReport:
    """Radius over all sign patterns, classified along the schedule.

    A recognized height rule settles the verdict analytically (with an
    exact tail-corrected estimate); otherwise the decision falls to the
    level increments and the windowed maxima, including the doubled final
    window.
    """
    schedule = schedule or TruncationSchedule()
    values = _level_values(brick, schedule, cap)
    wins = _window_values(brick, schedule, cap)
    wvals = tuple(w.value for w in wins)
    analytic = series_convergence(brick.basis, brick.heights)
    incs = tuple(abs(b - a) for a, b in zip(values, values[1:]))
    if analytic is True:
        est = radius_limit(brick.basis, brick.heights, schedule.levels[-1])
        return RadiusReport(
            kind="unconditional",
            brick_label=brick.label(),
            levels=schedule.levels,
            values=values,
            verdict=Verdict.FINITE_ESTIMATE,
            estimate=est if est is not None else values[-1],
            method="analytic-tail" if est is not None else "analytic",
            window_maxima=wvals,
        )
    if analytic is False:
        return RadiusReport(
            kind="unconditional",
            brick_label=brick.label(),
            levels=schedule.levels,
            values=values,
            verdict=Verdict.DIVERGENCE_EVIDENCE,
            estimate=None,
            method="analytic-tail",
            window_maxima=wvals,
        )
    tol, floor = schedule.cauchy_tol, schedule.divergence_floor
    if wvals[-1] <= tol and (not incs or incs[-1] <= tol):
        verdict, est, how = Verdict.FINITE_ESTIMATE, values[-1], "cauchy-window"
    elif all(w >= floor for w in wvals) or (incs and all(i >= floor for i in incs)):
        verdict, est, how = Verdict.DIVERGENCE_EVIDENCE, None, "window-floor"
    else:
        verdict, est, how = Verdict.INCONCLUSIVE, None, "numeric"
    return RadiusReport(
        kind="unconditional",
        brick_label=brick.label(),
        levels=schedule.levels,
        values=values,
        verdict=verdict,
        estimate=est,
        method=how,
        window_maxima=wvals,
    )


def absolute_radius(
    brick: Brick,
    schedule: TruncationSchedule | None = None,
    cap: int = ENUMERATION_CAP,
    samples: int = 2000,
    seed: int = 0,
) -> RadiusReport:
    """sup of member norms along the schedule.

    At each truncation the sup over the solid box equals the vertex
    maximum, which the kernels deliver exactly; random box members then
    re-verify the bound (an internal cross-check, not the estimate).  The
    sup can stabilise even when the sign series diverges, so the verdict
    reads the values, not the windows.
    """
    schedule = schedule or TruncationSchedule()
    values = _level_values(brick, schedule, cap)
    n = schedule.levels[-1]
    rng = np.random.default_rng(seed)
    eps = brick.heights.values(n)
    coeffs = rng.uniform(-1.0, 1.0, size=(samples, n)) * eps
    ambient = coeffs @ brick.basis.synth_matrix(n).T
    tag = brick.basis.norm_tag
    if tag is NormTag.L1:
        norms = np.sum(np.abs(ambient), axis=1)
    elif tag is NormTag.L2:
        norms = np.linalg.norm(ambient, axis=1)
    else:
        norms = np.max(np.abs(ambient), axis=1)
    if norms.size and float(np.max(norms)) > values[-1] + 1e-9:
        raise KernelInvariantError(
            "a sampled box member beat the vertex maximum; kernels disagree"
        )
    analytic = series_convergence(brick.basis, brick.heights)
    basis = brick.basis
    if analytic is True:
        est = radius_limit(basis, brick.heights, n)
        verdict, est, how = (
            Verdict.FINITE_ESTIMATE,
            est if est is not None else values[-1],
            "analytic-tail",
        )
    elif basis.kind is BasisKind.STANDARD_C0 or (
        basis.kind is BasisKind.USER_BLOCK
        and basis.base is not None
        and basis.base.kind is BasisKind.STANDARD_C0
    ):
        # Identity system under the sup norm: the member sup is the height
        # sup, finite for any bounded rule even when the series diverges.
        sup = brick.heights.sup_from(1)
        if sup is not None:
            verdict, est, how = Verdict.FINITE_ESTIMATE, sup, "height-sup"
        else:
            verdict, est, how = Verdict.INCONCLUSIVE, None, "numeric"
    else:
        incs = tuple(abs(b - a) for a, b in zip(values, values[1:]))
        tol, floor = schedule.cauchy_tol, schedule.divergence_floor
        if incs and max(incs[-2:]) <= tol:
            verdict, est, how = Verdict.FINITE_ESTIMATE, values[-1], "value-cauchy"
        elif incs and all(i >= floor for i in incs):
            verdict, est, how = Verdict.DIVERGENCE_EVIDENCE, None, "value-growth"
        else:
            verdict, est, how = Verdict.INCONCLUSIVE, None, "numeric"
    return RadiusReport(
        kind="absolute",
        brick_label=brick.label(),
        levels=schedule.levels,
        values=values,
        verdict=verdict,
        estimate=est,
        method=how,
        notes=f"verified against {samples} sampled members",
    )


# -- sign patterns and the extreme radius ------------------------------


def _pattern_signs(name: str, n: int, seed: int) -> np.ndarray:
    if name == "all-plus":
        return np.ones(n)
    if name == "alternating":
        out = np.ones(n)
        out[1::2] = -1.0
        return out
    if name.startswith("random-"):
        k = int(name.split("-", 1)[1])
        rng = np.random.default_rng(seed * 7919 + k)
        return rng.choice([-1.0, 1.0], size=n)
    raise ValueError(f"unknown pattern {name!r}")


def _pattern_analytic(basis: BasisModel, heights: HalfHeights, name: str) -> bool | None:
    """Closed-form convergence of one sign pattern, where a rule decides it."""
    overall = series_convergence(basis, heights)
    if overall is True:
        return True
    kind = basis.kind
    if kind in (BasisKind.STANDARD_C0, BasisKind.STANDARD_LP):
        # Identity systems: convergence ignores signs entirely.
        return overall
    if kind is BasisKind.USER_BLOCK and basis.base.is_identity:
        return overall
    rule = heights.tail
    decaying = bool(rule.nonincreasing) and rule.limit_zero is True
    if kind is BasisKind.SUMMING_C:
        if name == "all-plus":
            return heights.summable
        if name == "alternating" and decaying:
            # Alternating partial sums over a window never exceed the first
            # height in it, so the windowed sups vanish with the level.
            return True
        return None
    if kind is BasisKind.UNCOMPACT_BLOCKS:
        if name == "all-plus":
            return overall if overall is not None else heights.summable
        if name == "alternating" and decaying:
            return True
        return None
    return None


def pattern_convergence(
    brick: Brick,
    name: str,
    schedule: TruncationSchedule | None = None,
    seed: int = 0,
    cap: int = ENUMERATION_CAP,
) -> PatternEvidence:
    """Convergence evidence for one sign pattern of the height series.

    Analytic classification is used when the height rule decides it; the
    numeric fallback reads the windowed partial-sum norms: vanishing tails
    certify convergence, tails pinned above the divergence floor certify
    the opposite, anything else stays undecided.
    """
    schedule = schedule or TruncationSchedule()
    basis, heights = brick.basis, brick.heights
    top = 2 * schedule.levels[-1]
    theta = _pattern_signs(name, top, seed)
    eps = heights.values(top)
    s = basis.synth_matrix(top)
    scaled = s * (theta * eps)
    level_norms = tuple(
        norm(np.sum(scaled[:, :n], axis=1), basis.norm_tag) for n in schedule.levels
    )
    window_norms = tuple(
        norm(np.sum(scaled[:, lo:hi], axis=1), basis.norm_tag)
        for lo, hi in schedule.windows()
    )
    verdict = _pattern_analytic(basis, heights, name)
    method = "analytic"
    if verdict is None:
        method = "numeric-window"
        tol, floor = schedule.cauchy_tol, schedule.divergence_floor
        nonincreasing = all(b <= a + tol for a, b in zip(window_norms, window_norms[1:]))
        incs = tuple(abs(b - a) for a, b in zip(level_norms, level_norms[1:]))
        growing = bool(incs) and all(i >= floor for i in incs)
        pinned = all(w >= floor for w in window_norms) and (
            window_norms[-1] >= 0.9 * max(window_norms)
        )
        if window_norms[-1] <= tol:
            verdict = True
        elif nonincreasing and window_norms[-1] <= window_norms[0] / 4.0:
            verdict = True
            method = "numeric-decay"
        elif growing or pinned:
            # only steady growth of the partial-sum norms, or windows that
            # refuse to decay at all, count against a pattern; oscillation
            # stays undecided
            verdict = False
        else:
            verdict = None
    return PatternEvidence(
        name=name,
        converged=verdict,
        method=method,
        level_norms=level_norms,
        window_norms=window_norms,
        windows=schedule.windows(),
    )


def extreme_radius(
    brick: Brick,
    schedule: TruncationSchedule | None = None,
    cap: int = ENUMERATION_CAP,
    random_patterns: int = 3,
    seed: int = 0,
) -> RadiusReport:
    """sup of vertex norms, gated on evidence that vertices exist at all.

    Sampled sign patterns (all-plus, alternating, a few seeded random
    ones) provide the existence evidence.  When none converges the sup
    runs over an empty set and the verdict is divergence.  Otherwise the
    per-level vertex maxima are classified: an analytically convergent
    series gives the exact tail-corrected limit; stabilised values give a
    finite estimate even when the full sign series diverges (the sup of
    member norms can be finite regardless); steadily growing values give
    divergence evidence.
    """
    schedule = schedule or TruncationSchedule()
    names = ["all-plus", "alternating"] + [
        f"random-{k}" for k in range(1, random_patterns + 1)
    ]
    evidence = tuple(
        pattern_convergence(brick, nm, schedule, seed=seed, cap=cap) for nm in names
    )
    existence = any(ev.converged is True for ev in evidence)
    values = _level_values(brick, schedule, cap)
    incs = tuple(abs(b - a) for a, b in zip(values, values[1:]))
    label = brick.label()
    if not existence:
        undecided = any(ev.converged is None for ev in evidence)
        return RadiusReport(
            kind="extreme",
            brick_label=label,
            levels=schedule.levels,
            values=values,
            verdict=Verdict.INCONCLUSIVE if undecided else Verdict.DIVERGENCE_EVIDENCE,
            estimate=None,
            method="no-convergent-pattern",
            existence=False,
            patterns=evidence,
        )
    analytic = series_convergence(brick.basis, brick.heights)
    tol, floor = schedule.cauchy_tol, schedule.divergence_floor
    if analytic is True:
        est = radius_limit(brick.basis, brick.heights, schedule.levels[-1])
        verdict, est, how = (
            Verdict.FINITE_ESTIMATE,
            est if est is not None else values[-1],
            "analytic-tail",
        )
    elif incs and max(incs[-2:]) <= tol:
        verdict, est, how = Verdict.FINITE_ESTIMATE, values[-1], "value-cauchy"
    elif incs and all(i >= floor for i in incs):
        verdict, est, how = Verdict.DIVERGENCE_EVIDENCE, None, "value-growth"
    else:
        verdict, est, how = Verdict.INCONCLUSIVE, None, "numeric"
    return RadiusReport(
        kind="extreme",
        brick_label=label,
        levels=schedule.levels,
        values=values,
        verdict=verdict,
        estimate=est,
        method=how,
        existence=True,
        patterns=evidence,
    )


# -- coincidence of the three radii ------------------------------------


@dataclass(frozen=True)
class CoincidenceReport:
    """Outcome of comparing the three radius estimates."""

    coincide: bool | None
    unconditional: RadiusReport
    extreme: RadiusReport
    absolute: RadiusReport
    spread: float | None = None
    notes: str = ""


def radii_coincide(
    brick: Brick,
    schedule: TruncationSchedule | None = None,
    tol: float = 1e-9,
    cap: int = ENUMERATION_CAP,
    seed: int = 0,
) -> CoincidenceReport:
    """Check the collapse of the three radii behind a finite sign radius.

    When the radius over all sign patterns is finite the extreme and
    member sups must agree with it; the report carries the spread.  When
    it is not finite nothing is claimed (the member sup may stay bounded
    on its own), so ``coincide`` is None.
    """
    schedule = schedule or TruncationSchedule()
    unc = unconditional_radius(brick, schedule, cap=cap)
    ext = extreme_radius(brick, schedule, cap=cap, seed=seed)
    absr = absolute_radius(brick, schedule, cap=cap, seed=seed)
    if unc.verdict is not Verdict.FINITE_ESTIMATE:
        return CoincidenceReport(
            coincide=None,
            unconditional=unc,
            extreme=ext,
            absolute=absr,
            notes="sign radius not finite; coincidence not asserted",
        )
    ests = [r.estimate for r in (unc, ext, absr)]
    if any(e is None for e in ests):
        return CoincidenceReport(
            coincide=False,
            unconditional=unc,
            extreme=ext,
            absolute=absr,
            notes="a radius failed to produce a finite estimate",
        )
    spread = float(max(ests) - min(ests))
    return CoincidenceReport(
        coincide=spread <= tol,
        unconditional=unc,
        extreme=ext,
        absolute=absr,
        spread=spread,
    )
