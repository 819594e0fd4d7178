"""Discrete measures on Hilbert space and their integral operator.

Atoms sit at scaled unit vectors sqrt(n) * e_n with normalized weights.
Two weight families matter: inverse-square weights (finite weak moments
of order four, infinite strong second moment) and reciprocal-log-squared
weights (every operator diagnostic finite except the squared-diagonal
sum, i.e. a compact integral operator that is not of trace-square type).

Weights are stored renormalized so they sum to one exactly; each family
keeps its ideal closed-form constant (for inverse-square weights, exact;
for the log family, a two-sided bracket from an integral tail bound) so
moment values can be upgraded analytically instead of trusting a single
truncation.

The weakly-defined integral operator j maps u to sum_n w_n (u, x_n) x_n.
For the diagonal atom layouts used here it acts coordinatewise, which
keeps every diagnostic linear-time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

from .compactness import CompactnessKind
from .radii import TruncationSchedule
from .sequences import CoefficientVector, as_array, pad_to

__all__ = [
    "MomentVerdict",
    "MomentReport",
    "DiagnosticReport",
    "InverseSquareFamily",
    "LogSquaredFamily",
    "DiscreteMeasure",
    "make_weak4_measure",
    "make_non_hs_measure",
    "moment",
    "pettis_j",
    "hs_diagnostic",
    "j_compactness",
]

PI_SQ_OVER_6 = np.pi**2 / 6.0


class MomentVerdict(enum.Enum):
    CONVERGES_EVIDENCE = "ConvergesEvidence"
    DIVERGES_EVIDENCE = "DivergesEvidence"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class MomentReport:
    mode: str
    p: float
    levels: tuple[int, ...]
    partial_sums: tuple[float, ...]
    verdict: MomentVerdict
    value: float | None
    method: str
    notes: str = ""


@dataclass(frozen=True)
class DiagnosticReport:
    """Partial sums of an operator series with a classified limit."""

    name: str
    levels: tuple[int, ...]
    partial_sums: tuple[float, ...]
    verdict: MomentVerdict
    value: float | None
    method: str


# -- ideal weight families ----------------------------------------------


@dataclass(frozen=True)
class InverseSquareFamily:
    """Ideal weights c / n^2 with the exact constant c = 6 / pi^2."""

    name: str = "inverse-square"

    @property
    def constant(self) -> float:
        return 6.0 / np.pi**2

    @property
    def bracket(self) -> tuple[float, float]:
        c = self.constant
        return (c, c)

    def ideal_weights(self, ns: np.ndarray) -> np.ndarray:
        return self.constant / np.asarray(ns, dtype=float) ** 2

    # atom n has squared norm n, so the strong p-th term is c * n^(p/2-2)
    def strong_converges(self, p: float) -> bool:
        return p < 2

    def strong_terms(self, p: float, n: int) -> np.ndarray:
        ns = np.arange(1, n + 1, dtype=float)
        return self.constant * ns ** (p / 2.0 - 2.0)

    def strong_limit(self, p: float) -> float | None:
        if not self.strong_converges(p):
            return None
        return self.constant * float(zeta(2.0 - p / 2.0, 1))

    # squared diagonal entries (c/n)^2 sum to c^2 * pi^2/6 = c
    def hs_converges(self) -> bool:
        return True

    def hs_terms(self, n: int) -> np.ndarray:
        ns = np.arange(1, n + 1, dtype=float)
        return (self.constant / ns) ** 2

    def hs_limit(self) -> float:
        return self.constant**2 * PI_SQ_OVER_6

    def diagonal(self, ns: np.ndarray) -> np.ndarray:
        return self.constant / np.asarray(ns, dtype=float)

    @property
    def diagonal_to_zero(self) -> bool:
        return True


@dataclass(frozen=True)
class LogSquaredFamily:
    """Ideal weights C / (n * ln^2(n+1)) with a bracketed constant.

    The normalizing constant has no elementary closed form; an integral
    bound on the weight tail past the reference level yields the bracket
    [1 / (S + 1/ln N), 1 / S], where S is the reference partial sum.  The
    midpoint is used wherever a single number is needed, so any drift is
    at most half the bracket width.
    """

    c_lo: float
    c_hi: float
    ref_level: int
    name: str = "log-squared"

    @property
    def constant(self) -> float:
        return 0.5 * (self.c_lo + self.c_hi)

    @property
    def bracket(self) -> tuple[float, float]:
        return (self.c_lo, self.c_hi)

    @property
    def width(self) -> float:
        return self.c_hi - self.c_lo

    def ideal_weights(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=float)
        return self.constant / (ns * np.log(ns + 1.0) ** 2)

    # strong p-th term: C * n^(p/2-1) / ln^2(n+1); diverges for all p >= 1
    # (comparison with the reciprocal-log series)
    def strong_converges(self, p: float) -> bool:
        return False

    def strong_terms(self, p: float, n: int) -> np.ndarray:
        ns = np.arange(1, n + 1, dtype=float)
        return self.constant * ns ** (p / 2.0 - 1.0) / np.log(ns + 1.0) ** 2

    def strong_limit(self, p: float) -> float | None:
        return None

    # squared diagonal entries (C / ln^2(n+1))^2; the reciprocal fourth
    # power of the logarithm is not summable (integral test)
    def hs_converges(self) -> bool:
        return False

    def hs_terms(self, n: int) -> np.ndarray:
        ns = np.arange(1, n + 1, dtype=float)
        return (self.constant / np.log(ns + 1.0) ** 2) ** 2

    def hs_limit(self) -> float | None:
        return None

    def diagonal(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=float)
        return self.constant / np.log(ns + 1.0) ** 2

    @property
    def diagonal_to_zero(self) -> bool:
        return True


# -- the measures --------------------------------------------------------


@dataclass(frozen=True)
class DiscreteMeasure:
    """Probability measure with finitely many atoms in Hilbert space.

    Diagonal measures (atom n = scale_n * e_n) are stored by their scales
    alone, which keeps ten-thousand-atom diagnostics cheap; general atom
    clouds go through ``from_atoms`` and store the dense matrix.
    """

    weights: np.ndarray
    scales: np.ndarray | None = None
    atom_matrix: np.ndarray | None = None
    family: InverseSquareFamily | LogSquaredFamily | None = None
    name: str = "measure"

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must form a nonempty 1-D array")
        if np.any(w <= 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be positive and finite")
        if abs(float(np.sum(w)) - 1.0) > 1e-9:
            raise ValueError("weights must sum to one")
        object.__setattr__(self, "weights", w)
        if (self.scales is None) == (self.atom_matrix is None):
            raise ValueError("provide exactly one of scales / atom_matrix")
        if self.scales is not None:
            r = np.asarray(self.scales, dtype=float)
            if r.shape != w.shape or np.any(~np.isfinite(r)):
                raise ValueError("scales must match the weights in length")
            object.__setattr__(self, "scales", r)
        else:
            a = np.asarray(self.atom_matrix, dtype=float)
            if a.ndim != 2 or a.shape[0] != w.size or not np.all(np.isfinite(a)):
                raise ValueError("atom matrix must be (count x dim) and finite")
            object.__setattr__(self, "atom_matrix", a)

    @classmethod
    def diagonal(cls, scales, weights, family=None, name="measure") -> "DiscreteMeasure":
        return cls(weights=np.asarray(weights, dtype=float),
                   scales=np.asarray(scales, dtype=float),
                   family=family, name=name)

    @classmethod
    def from_atoms(cls, atoms, weights, family=None, name="measure") -> "DiscreteMeasure":
        mat = np.stack([as_array(a) for a in atoms])
        return cls(weights=np.asarray(weights, dtype=float), atom_matrix=mat,
                   family=family, name=name)

    @property
    def count(self) -> int:
        return self.weights.size

    @property
    def is_diagonal(self) -> bool:
        return self.scales is not None

    @property
    def dim(self) -> int:
        return self.count if self.is_diagonal else self.atom_matrix.shape[1]

    def atom(self, n: int) -> CoefficientVector:
        """Atom n as a vector (1-based)."""
        if not 1 <= n <= self.count:
            raise IndexError(f"atom index {n} out of range")
        if self.is_diagonal:
            out = np.zeros(n)
            out[n - 1] = self.scales[n - 1]
            return CoefficientVector(out)
        return CoefficientVector(self.atom_matrix[n - 1])

    def atom_sq_norms(self) -> np.ndarray:
        if self.is_diagonal:
            return self.scales**2
        return np.sum(self.atom_matrix**2, axis=1)


def make_weak4_measure(n: int) -> DiscreteMeasure:
    """Inverse-square weights on atoms sqrt(k) e_k, k = 1..n.

    Weak moments of order four stay finite (their value is the exact
    family constant at a unit-vector probe) while the strong second
    moment grows like the harmonic numbers.
    """
    if n < 1:
        raise ValueError("need at least one atom")
    ks = np.arange(1, n + 1, dtype=float)
    u = 1.0 / ks**2
    return DiscreteMeasure.diagonal(
        scales=np.sqrt(ks),
        weights=u / np.sum(u),
        family=InverseSquareFamily(),
        name=f"weak4[{n}]",
    )


def make_non_hs_measure(n: int) -> DiscreteMeasure:
    """Reciprocal-log-squared weights on atoms sqrt(k) e_k, k = 1..n.

    The integral operator is compact (its diagonal decays like the
    reciprocal squared logarithm) yet the sum of its squared diagonal
    entries diverges.  The normalizing constant is bracketed by the
    integral tail bound 1/ln(n).
    """
    if n < 2:
        raise ValueError("need at least two atoms for the tail bracket")
    ks = np.arange(1, n + 1, dtype=float)
    u = 1.0 / (ks * np.log(ks + 1.0) ** 2)
    s = float(np.sum(u))
    family = LogSquaredFamily(
        c_lo=1.0 / (s + 1.0 / np.log(n)),
        c_hi=1.0 / s,
        ref_level=n,
    )
    return DiscreteMeasure.diagonal(
        scales=np.sqrt(ks),
        weights=u / s,
        family=family,
        name=f"non_hs[{n}]",
    )


# -- moments -------------------------------------------------------------


def _classify_partials(
    partials: np.ndarray, schedule: TruncationSchedule
) -> tuple[MomentVerdict, float | None, str]:
    incs = np.abs(np.diff(partials))
    if incs.size == 0:
        return MomentVerdict.CONVERGES_EVIDENCE, float(partials[-1]), "single-level"
    if incs[-1] <= schedule.cauchy_tol:
        return MomentVerdict.CONVERGES_EVIDENCE, float(partials[-1]), "cauchy-window"
    if np.all(incs >= schedule.divergence_floor):
        return MomentVerdict.DIVERGES_EVIDENCE, None, "window-floor"
    return MomentVerdict.INCONCLUSIVE, None, "numeric"


def _level_partials(terms: np.ndarray, levels: tuple[int, ...]) -> tuple[float, ...]:
    csum = np.cumsum(terms)
    out = []
    for lvl in levels:
        k = min(lvl, csum.size)
        out.append(float(csum[k - 1]) if k >= 1 else 0.0)
    return tuple(out)


def moment(
    measure: DiscreteMeasure,
    p: float,
    mode: str,
    probe=None,
    schedule: TruncationSchedule | None = None,
) -> MomentReport:
    """Weak or strong p-th moment of the measure, p >= 1.

    Weak mode integrates |(probe, x)|^p; with an ideal weight family the
    value is the exact family sum (the probe's finite support cuts it off),
    otherwise the stored finite sum.  Strong mode integrates ||x||^p; the
    family decides convergence analytically where it can, with partial
    sums taken from the ideal weights so truncation artifacts cannot leak
    into the reported values.  Without a family the verdict falls back to
    the schedule's numeric thresholds.
    """
    if p < 1:
        raise ValueError("moments are defined for p >= 1 here")
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown moment mode {mode!r}")
    schedule = schedule or TruncationSchedule()
    levels = schedule.levels
    fam = measure.family
    if mode == "weak":
        if probe is None:
            raise ValueError("weak mode needs a probe vector")
        h = as_array(probe)
        if measure.is_diagonal:
            k = min(h.size, measure.count)
            inner = np.zeros(measure.count)
            inner[:k] = h[:k] * measure.scales[:k]
        else:
            inner = measure.atom_matrix @ pad_to(h, measure.dim)
        if fam is not None and measure.is_diagonal:
            ns = np.arange(1, measure.count + 1)
            terms = fam.ideal_weights(ns) * np.abs(inner) ** p
            method = "analytic-weights"
        else:
            terms = measure.weights * np.abs(inner) ** p
            method = "finite-support"
        partials = _level_partials(terms, levels)
        value = float(np.sum(terms))
        return MomentReport(
            mode="weak",
            p=p,
            levels=levels,
            partial_sums=partials,
            verdict=MomentVerdict.CONVERGES_EVIDENCE,
            value=value,
            method=method,
            notes="finite probe support closes the sum",
        )
    # strong mode
    if fam is not None and measure.is_diagonal:
        terms = fam.strong_terms(p, max(levels[-1], measure.count))
        partials = _level_partials(terms, levels)
        if fam.strong_converges(p):
            return MomentReport(
                mode="strong", p=p, levels=levels, partial_sums=partials,
                verdict=MomentVerdict.CONVERGES_EVIDENCE,
                value=fam.strong_limit(p), method="analytic-weights",
            )
        return MomentReport(
            mode="strong", p=p, levels=levels, partial_sums=partials,
            verdict=MomentVerdict.DIVERGES_EVIDENCE, value=None,
            method="analytic-weights",
        )
    terms = measure.weights * measure.atom_sq_norms() ** (p / 2.0)
    partials = _level_partials(terms, levels)
    verdict, value, method = _classify_partials(np.asarray(partials), schedule)
    return MomentReport(
        mode="strong", p=p, levels=levels, partial_sums=partials,
        verdict=verdict, value=value, method=method,
        notes="stored atoms only; no ideal family attached",
    )


# -- the integral operator ------------------------------------------------


def pettis_j(measure: DiscreteMeasure, u) -> CoefficientVector:
    """Weak integral operator: j(u) = sum_n w_n (u, x_n) x_n."""
    uv = as_array(u)
    if measure.is_diagonal:
        k = min(uv.size, measure.count)
        out = np.zeros(measure.count)
        out[:k] = measure.weights[:k] * measure.scales[:k] ** 2 * uv[:k]
        return CoefficientVector(out)
    inner = measure.atom_matrix @ pad_to(uv, measure.dim)
    return CoefficientVector((measure.weights * inner) @ measure.atom_matrix)


def _diagonal_entries(measure: DiscreteMeasure, upto: int) -> np.ndarray:
    """||j(e_k)|| for k = 1..upto, exact per storage layout."""
    if measure.is_diagonal:
        k = min(upto, measure.count)
        out = np.zeros(upto)
        out[:k] = measure.weights[:k] * measure.scales[:k] ** 2
        return out
    upto = min(upto, measure.dim)
    out = np.empty(upto)
    for k in range(upto):
        col = (measure.weights * measure.atom_matrix[:, k]) @ measure.atom_matrix
        out[k] = float(np.linalg.norm(col))
    return out


def hs_diagnostic(
    measure: DiscreteMeasure, schedule: TruncationSchedule | None = None
) -> DiagnosticReport:
    """Partial sums of sum_k ||j(e_k)||^2 with a classified limit.

    Finiteness of this series is the trace-square (Hilbert-Schmidt) test
    for j.  Families answer analytically; otherwise the schedule's numeric
    thresholds decide.
    """
    schedule = schedule or TruncationSchedule()
    levels = schedule.levels
    fam = measure.family
    if fam is not None and measure.is_diagonal:
        terms = fam.hs_terms(max(levels[-1], measure.count))
        partials = _level_partials(terms, levels)
        if fam.hs_converges():
            return DiagnosticReport(
                name="squared-diagonal-sum", levels=levels, partial_sums=partials,
                verdict=MomentVerdict.CONVERGES_EVIDENCE, value=fam.hs_limit(),
                method="analytic-weights",
            )
        return DiagnosticReport(
            name="squared-diagonal-sum", levels=levels, partial_sums=partials,
            verdict=MomentVerdict.DIVERGES_EVIDENCE, value=None,
            method="analytic-weights",
        )
    terms = _diagonal_entries(measure, levels[-1]) ** 2
    partials = _level_partials(terms, levels)
    verdict, value, method = _classify_partials(np.asarray(partials), schedule)
    return DiagnosticReport(
        name="squared-diagonal-sum", levels=levels, partial_sums=partials,
        verdict=verdict, value=value, method=method,
    )


@dataclass(frozen=True)
class JCompactReport:
    verdict: CompactnessKind
    levels: tuple[int, ...]
    diagonal: tuple[float, ...]
    method: str
    notes: str = ""


def j_compactness(
    measure: DiscreteMeasure, schedule: TruncationSchedule | None = None
) -> JCompactReport:
    """Compactness evidence for j via its diagonal decay.

    Requires a diagonal measure (j is then a diagonal operator whose
    eigenvalues are w_n ||x_n||^2).  A family whose diagonal provably
    vanishes gives compact evidence outright; otherwise clear monotone
    decay of the stored diagonal does; a flat diagonal stays inconclusive.
    """
    if not measure.is_diagonal:
        raise ValueError("j_compactness needs a diagonal measure")
    schedule = schedule or TruncationSchedule()
    levels = schedule.levels
    diag = _diagonal_entries(measure, min(levels[-1], measure.count))
    at_levels = tuple(
        float(diag[min(lvl, diag.size) - 1]) for lvl in levels
    )
    fam = measure.family
    if fam is not None and fam.diagonal_to_zero:
        return JCompactReport(
            verdict=CompactnessKind.COMPACT_EVIDENCE,
            levels=levels,
            diagonal=at_levels,
            method="analytic-diagonal",
            notes="ideal diagonal vanishes at infinity",
        )
    nonincreasing = bool(np.all(np.diff(diag) <= 1e-15))
    if diag[-1] <= schedule.cauchy_tol or (
        nonincreasing and diag[-1] <= diag[0] / 4.0
    ):
        return JCompactReport(
            verdict=CompactnessKind.COMPACT_EVIDENCE,
            levels=levels,
            diagonal=at_levels,
            method="diagonal-decay",
        )
    return JCompactReport(
        verdict=CompactnessKind.INCONCLUSIVE,
        levels=levels,
        diagonal=at_levels,
        method="diagonal-decay",
        notes="no clear decay within the stored atoms",
    )
