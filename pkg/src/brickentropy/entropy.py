"""Entropy-style bounds for finite sets via covering bricks.

The smallest brick that contains a set in a given coordinate system has
half-heights equal to the set's clearances: the per-coordinate sups of
the coefficient magnitudes.  Its radius is an upper bound for any
brick-based entropy of the set in that system; scanning several systems
tightens the bound (and, over sign-stable systems only, bounds the
sign-stable variant).  The largest clearance-brick radius across systems
is a lower bound for the dual characteristic that takes a sup instead of
an inf.  In c0 everything collapses to the largest coordinate magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import BasisKind, BasisModel, analyze
from .bricks import Brick, HalfHeights, ZeroTail, contains
from .errors import KernelInvariantError
from .radii import RadiusReport, TruncationSchedule, Verdict, unconditional_radius
from .sequences import NormTag, as_array, norm, pad_to

__all__ = [
    "ClearanceProfile",
    "clearances",
    "clearance_brick",
    "basis_radius",
    "EntropyReport",
    "entropy_bounds",
    "c0_entropy",
]


@dataclass(frozen=True)
class ClearanceProfile:
    """Per-coordinate coefficient sups of a finite family in one system."""

    basis: BasisModel
    values: tuple[float, ...]

    @property
    def level(self) -> int:
        return len(self.values)


def clearances(vectors, basis: BasisModel) -> ClearanceProfile:
    """Exact clearances: gamma_n = max over the family of |coefficient n|."""
    vecs = [as_array(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    dim = max(v.size for v in vecs)
    coeffs = np.stack([analyze(basis, pad_to(v, dim)) for v in vecs])
    gamma = np.max(np.abs(coeffs), axis=0)
    return ClearanceProfile(basis=basis, values=tuple(float(g) for g in gamma))


def clearance_brick(profile: ClearanceProfile) -> Brick:
    """The smallest brick of the system containing the profiled family."""
    heights = HalfHeights(prefix=profile.values, tail=ZeroTail())
    return Brick(
        basis=profile.basis,
        heights=heights,
        name=f"clearance[{profile.basis.name}]",
    )


def basis_radius(
    vectors,
    basis: BasisModel,
    schedule: TruncationSchedule | None = None,
) -> RadiusReport:
    """Radius of the clearance brick of the family in the given system.

    Every family member is re-verified to lie in the brick (an internal
    cross-check; clearances make this exact).  The zero tail makes the
    radius analytic, so the estimate is a closed form, not a truncation.
    """
    profile = clearances(vectors, basis)
    brick = clearance_brick(profile)
    for i, v in enumerate(vectors):
        if not contains(brick, as_array(v), tol=1e-9):
            raise KernelInvariantError(
                f"family member {i} escaped its clearance brick"
            )
    schedule = schedule or TruncationSchedule()
    return unconditional_radius(brick, schedule)


@dataclass(frozen=True)
class EntropyReport:
    """Brick-based entropy bounds of a finite set across several systems."""

    norm_tag: NormTag
    per_basis: tuple[tuple[str, RadiusReport], ...]
    entropy_upper: float | None
    one_unconditional_upper: float | None
    sudakov_lower: float | None
    member_sup: float
    sum_of_squares: tuple[tuple[str, float], ...] = ()


def entropy_bounds(
    vectors,
    bases,
    schedule: TruncationSchedule | None = None,
) -> EntropyReport:
    """Scan systems sharing one norm and combine their clearance radii.

    The smallest finite radius bounds the brick entropy from above; the
    smallest over sign-stable systems bounds the sign-stable variant; the
    largest finite radius bounds the sup-characteristic from below.  For
    orthonormal systems in the 2-norm the squared clearance sums are
    reported as well, since there the radius is exactly their root.
    """
    bases = list(bases)
    if not bases:
        raise ValueError("need at least one system")
    tags = {b.norm_tag for b in bases}
    if len(tags) > 1:
        raise ValueError("all systems must share one ambient norm")
    tag = bases[0].norm_tag
    member_sup = max(norm(as_array(v), tag) for v in vectors)
    reports = []
    squares = []
    for b in bases:
        rep = basis_radius(vectors, b, schedule)
        reports.append((b.name, rep))
        if tag is NormTag.L2 and b.orthonormal_columns:
            prof = clearances(vectors, b)
            squares.append((b.name, float(np.sum(np.square(prof.values)))))
    finite = [
        (name, rep.estimate)
        for name, rep in reports
        if rep.verdict is Verdict.FINITE_ESTIMATE and rep.estimate is not None
    ]
    upper = min((e for _, e in finite), default=None)
    lower = max((e for _, e in finite), default=None)
    stable = []
    by_name = {b.name: b for b in bases}
    for name, e in finite:
        b = by_name[name]
        if b.one_unconditional or (
            b.kind is BasisKind.USER_BLOCK
            and b.base is not None
            and b.base.is_identity
            and b.base.one_unconditional
        ):
            stable.append(e)
    e0_upper = min(stable, default=None)
    return EntropyReport(
        norm_tag=tag,
        per_basis=tuple(reports),
        entropy_upper=upper,
        one_unconditional_upper=e0_upper,
        sudakov_lower=lower,
        member_sup=member_sup,
        sum_of_squares=tuple(squares),
    )


def c0_entropy(vectors) -> float:
    """Exact brick entropy of a finite set in c0: the largest coordinate.

    In c0 the clearance brick of the unit-vector system is optimal among
    all bricks, sign-stable ones included, so entropy, its sign-stable
    variant, and the member sup all equal the largest absolute coordinate.
    """
    vecs = [as_array(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    return float(max(np.max(np.abs(v)) if v.size else 0.0 for v in vecs))
