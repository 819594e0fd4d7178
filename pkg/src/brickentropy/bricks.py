"""Coordinate bricks: boxes cut out by per-coordinate half-heights.

A brick collects every vector whose n-th coefficient is bounded by the
half-height eps_n in absolute value.  Half-heights are stored as a finite
prefix plus a closed-form tail rule; the rule carries its own analytic
facts (summability, square summability, decay) so radius and compactness
checks can upgrade numeric evidence to exact statements, and exact tail
sums come from the Hurwitz zeta function rather than open-ended loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import zeta

from .bases import BasisModel, analyze, synthesize
from .errors import KernelInvariantError
from .sequences import CoefficientVector, as_array

__all__ = [
    "TailRule",
    "ZeroTail",
    "PowerLawTail",
    "ConstantTail",
    "CustomTail",
    "reciprocal_tail",
    "reciprocal_sqrt_tail",
    "HalfHeights",
    "Brick",
    "contains",
    "extreme_point",
    "is_extreme",
    "solidity_certificate",
]


@dataclass(frozen=True)
class TailRule:
    """Base for closed-form half-height tails; see the concrete rules."""

    def value(self, n: int) -> float:
        raise NotImplementedError

    def values(self, ns: np.ndarray) -> np.ndarray:
        return np.array([self.value(int(n)) for n in ns])

    # Analytic facts; None means "not decided by the rule".  Keyword-only
    # so subclass parameters (alpha, level, ...) stay positional.
    summable: bool | None = field(default=None, kw_only=True)
    square_summable: bool | None = field(default=None, kw_only=True)
    limit_zero: bool | None = field(default=None, kw_only=True)
    nonincreasing: bool | None = field(default=None, kw_only=True)

    def tail_sum(self, after: int) -> float | None:
        """Exact sum of values past coordinate ``after`` (None if unknown/infinite)."""
        return None

    def tail_sq_sum(self, after: int) -> float | None:
        return None

    def sup_from(self, n: int) -> float | None:
        """Exact sup of values from coordinate ``n`` on."""
        return None

    def describe(self) -> str:
        return type(self).__name__


@dataclass(frozen=True)
class ZeroTail(TailRule):
    summable: bool | None = field(default=True, kw_only=True)
    square_summable: bool | None = field(default=True, kw_only=True)
    limit_zero: bool | None = field(default=True, kw_only=True)
    nonincreasing: bool | None = field(default=True, kw_only=True)

    def value(self, n: int) -> float:
        return 0.0

    def values(self, ns: np.ndarray) -> np.ndarray:
        return np.zeros(len(ns))

    def tail_sum(self, after: int) -> float:
        return 0.0

    def tail_sq_sum(self, after: int) -> float:
        return 0.0

    def sup_from(self, n: int) -> float:
        return 0.0

    def describe(self) -> str:
        return "zero"


@dataclass(frozen=True)
class PowerLawTail(TailRule):
    """eps_n = scale * n^(-alpha); covers the reciprocal family."""

    alpha: float = 1.0
    scale: float = 1.0

    def __post_init__(self):
        if self.alpha < 0 or self.scale < 0:
            raise ValueError("power-law tails need alpha >= 0 and scale >= 0")
        object.__setattr__(self, "summable", self.alpha > 1)
        object.__setattr__(self, "square_summable", self.alpha > 0.5)
        object.__setattr__(self, "limit_zero", self.alpha > 0 or self.scale == 0)
        object.__setattr__(self, "nonincreasing", True)

    def value(self, n: int) -> float:
        return self.scale * float(n) ** (-self.alpha)

    def values(self, ns: np.ndarray) -> np.ndarray:
        return self.scale * np.asarray(ns, dtype=float) ** (-self.alpha)

    def tail_sum(self, after: int) -> float | None:
        if self.scale == 0:
            return 0.0
        if self.alpha <= 1:
            return None
        return self.scale * float(zeta(self.alpha, after + 1))

    def tail_sq_sum(self, after: int) -> float | None:
        if self.scale == 0:
            return 0.0
        if 2 * self.alpha <= 1:
            return None
        return self.scale**2 * float(zeta(2 * self.alpha, after + 1))

    def sup_from(self, n: int) -> float:
        return self.value(n)

    def describe(self) -> str:
        return f"power_law(alpha={self.alpha:g}, scale={self.scale:g})"


def reciprocal_tail(scale: float = 1.0) -> PowerLawTail:
    """eps_n = scale / n."""
    return PowerLawTail(alpha=1.0, scale=scale)


def reciprocal_sqrt_tail(scale: float = 1.0) -> PowerLawTail:
    """eps_n = scale / sqrt(n)."""
    return PowerLawTail(alpha=0.5, scale=scale)


@dataclass(frozen=True)
class ConstantTail(TailRule):
    level: float = 1.0

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("constant tails must be >= 0")
        object.__setattr__(self, "summable", self.level == 0)
        object.__setattr__(self, "square_summable", self.level == 0)
        object.__setattr__(self, "limit_zero", self.level == 0)
        object.__setattr__(self, "nonincreasing", True)

    def value(self, n: int) -> float:
        return self.level

    def values(self, ns: np.ndarray) -> np.ndarray:
        return np.full(len(ns), self.level)

    def tail_sum(self, after: int) -> float | None:
        return 0.0 if self.level == 0 else None

    def tail_sq_sum(self, after: int) -> float | None:
        return 0.0 if self.level == 0 else None

    def sup_from(self, n: int) -> float:
        return self.level

    def describe(self) -> str:
        return f"constant({self.level:g})"


@dataclass(frozen=True)
class CustomTail(TailRule):
    """User-supplied rule; carries no analytic facts, so every check that
    would rely on them falls back to windowed numeric evidence."""

    fn: Callable[[int], float] = None
    note: str = "custom"

    def __post_init__(self):
        if self.fn is None:
            raise ValueError("a custom tail needs a callable")

    def value(self, n: int) -> float:
        v = float(self.fn(n))
        if v < 0 or not np.isfinite(v):
            raise ValueError(f"custom tail produced invalid height {v!r} at n={n}")
        return v

    def describe(self) -> str:
        return self.note


@dataclass(frozen=True)
class HalfHeights:
    """Per-coordinate half-heights: explicit prefix, closed-form tail."""

    prefix: tuple[float, ...] = ()
    tail: TailRule = ZeroTail()

    def __post_init__(self):
        pre = tuple(float(v) for v in self.prefix)
        if any(v < 0 or not np.isfinite(v) for v in pre):
            raise ValueError("half-heights must be finite and >= 0")
        object.__setattr__(self, "prefix", pre)

    def value(self, n: int) -> float:
        if n < 1:
            raise IndexError("coordinates are indexed from 1")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.tail.value(n)

    def values(self, n: int) -> np.ndarray:
        """Heights for coordinates 1..n as an ndarray."""
        ns = np.arange(1, n + 1)
        out = self.tail.values(ns)
        k = min(len(self.prefix), n)
        if k:
            out[:k] = self.prefix[:k]
        return out

    # -- analytic facts (prefix is finite, so the tail rule decides) --

    @property
    def summable(self) -> bool | None:
        return self.tail.summable

    @property
    def square_summable(self) -> bool | None:
        return self.tail.square_summable

    @property
    def limit_zero(self) -> bool | None:
        return self.tail.limit_zero

    def tail_sum(self, after: int) -> float | None:
        """Exact sum of heights past coordinate ``after``."""
        p = len(self.prefix)
        head = float(np.sum(self.prefix[after:])) if after < p else 0.0
        rest = self.tail.tail_sum(max(after, p))
        return None if rest is None else head + rest

    def tail_sq_sum(self, after: int) -> float | None:
        p = len(self.prefix)
        head = float(np.sum(np.square(self.prefix[after:]))) if after < p else 0.0
        rest = self.tail.tail_sq_sum(max(after, p))
        return None if rest is None else head + rest

    def sup_from(self, n: int) -> float | None:
        """Exact sup of heights from coordinate ``n`` on."""
        p = len(self.prefix)
        best = max(self.prefix[n - 1 : p], default=None)
        rest = self.tail.sup_from(max(n, p + 1))
        if rest is None:
            return None
        return rest if best is None else max(best, rest)

    def describe(self) -> str:
        if self.prefix:
            head = ",".join(f"{v:g}" for v in self.prefix)
            return f"prefix[{head}]+{self.tail.describe()}"
        return self.tail.describe()


@dataclass(frozen=True)
class Brick:
    """All vectors whose n-th coefficient is bounded by heights.value(n)."""

    basis: BasisModel
    heights: HalfHeights
    name: str = ""

    def label(self) -> str:
        return self.name or f"{self.basis.name}:{self.heights.describe()}"


def contains(brick: Brick, x, tol: float = 0.0) -> bool:
    """Membership check via exact coefficient recovery."""
    coeffs = analyze(brick.basis, x)
    bounds = brick.heights.values(coeffs.size)
    return bool(np.all(np.abs(coeffs) <= bounds + tol))


def extreme_point(brick: Brick, signs, n: int | None = None) -> CoefficientVector:
    """Vertex of the order-n truncated brick for the given sign pattern."""
    theta = as_array(signs)
    if n is None:
        n = theta.size
    if theta.size != n:
        raise ValueError(f"need {n} signs, got {theta.size}")
    if not np.all(np.abs(theta) == 1.0):
        raise ValueError("signs must be +1 or -1")
    return synthesize(brick.basis, theta * brick.heights.values(n))


def is_extreme(brick: Brick, x, n: int, tol: float = 1e-12) -> bool:
    """Whether x is a vertex of the order-n truncated brick.

    Extremality holds exactly when every coefficient sits at its bound in
    absolute value; coordinates past n must be absent (or have height 0).
    """
    coeffs = analyze(brick.basis, x, n=max(n, len(as_array(x))))
    bounds = brick.heights.values(coeffs.size)
    head = np.abs(np.abs(coeffs[:n]) - bounds[:n]) <= tol
    tail_ok = np.all(np.abs(coeffs[n:]) <= tol) and np.all(bounds[n:] <= tol)
    return bool(np.all(head)) and bool(tail_ok)


def solidity_certificate(brick: Brick, x, y, tol: float = 0.0) -> bool:
    """Certify membership of y from coordinatewise domination by x.

    Returns True when x lies in the brick and |y|-coefficients are bounded
    by |x|-coefficients; membership of y then follows from the brick being
    solid, and is re-verified as an internal cross-check.
    """
    a = analyze(brick.basis, x)
    b = analyze(brick.basis, y)
    size = max(a.size, b.size)
    a = np.pad(a, (0, size - a.size))
    b = np.pad(b, (0, size - b.size))
    if not contains(brick, x, tol):
        return False
    if not np.all(np.abs(b) <= np.abs(a) + tol):
        return False
    if not contains(brick, y, tol + 1e-12):
        raise KernelInvariantError(
            "dominated vector escaped a solid brick; coefficient recovery is broken"
        )
    return True
