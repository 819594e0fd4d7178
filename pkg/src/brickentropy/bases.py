"""Finite truncations of coordinate systems for sequence spaces.

A ``BasisModel`` describes how coefficient vectors turn into ambient
vectors at each truncation size: column n of ``synth_matrix(N)`` holds the
coordinates of the n-th system vector.  Built-in models cover the standard
unit-vector systems of l1, l2 and c0, the summing system of the space of
convergent sequences (partial-sum transform), and a block system built
over harmonic groups whose unit brick is bounded yet has no convergent
coordinate expansion -- the canonical non-compact example exercised by the
report suite.

Operator constants are computed from exact norm formulas, never sampled:
max absolute column sums for the 1-norm, max absolute row sums for the
sup norm, and the largest singular value for the 2-norm.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import solve_triangular

from .errors import CapExceededError
from .sequences import CoefficientVector, NormTag, as_array, norm, pad_to

__all__ = [
    "BasisKind",
    "BasisModel",
    "BlockSpec",
    "standard_lp",
    "standard_c0",
    "summing_c",
    "make_uncompact_basis",
    "block_basis",
    "harmonic_breakpoints",
    "block_harmonic_member",
    "synthesize",
    "analyze",
    "operator_norm",
    "basis_constant",
    "unconditional_constant",
]

# Hard ceiling on the number of sign coordinates any exact enumeration may
# touch; 2^23 evaluations is the worst case after symmetry halving.
ENUMERATION_CAP = 24

_SOLVE_RTOL = 1e-9


class BasisKind(enum.Enum):
    STANDARD_LP = "standard_lp"
    STANDARD_C0 = "standard_c0"
    SUMMING_C = "summing_c"
    UNCOMPACT_BLOCKS = "uncompact_blocks"
    USER_BLOCK = "user_block"


@dataclass(frozen=True)
class BlockSpec:
    """Disjoint consecutive coefficient blocks with per-block weights.

    ``breakpoints`` are the strictly increasing block right-edges
    (k_1 < k_2 < ...); block j covers base coordinates
    k_{j-1}+1 .. k_j with k_0 = 0.  ``weights[j]`` lists the block's
    coefficients and must contain a nonzero entry.
    """

    breakpoints: tuple[int, ...]
    weights: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        bps = self.breakpoints
        if len(bps) == 0:
            raise ValueError("at least one block is required")
        if bps[0] < 1 or any(b >= c for b, c in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing and >= 1")
        if len(self.weights) != len(bps):
            raise ValueError("one weight tuple per block is required")
        prev = 0
        for j, w in enumerate(self.weights):
            width = bps[j] - prev
            if len(w) != width:
                raise ValueError(
                    f"block {j + 1} spans {width} coordinates but has {len(w)} weights"
                )
            if not any(abs(x) > 0 for x in w):
                raise ValueError(f"block {j + 1} has all-zero weights")
            prev = bps[j]

    @property
    def count(self) -> int:
        return len(self.breakpoints)

    def block_range(self, j: int) -> tuple[int, int]:
        """Half-open 0-based coordinate range of block j (1-based)."""
        lo = 0 if j == 1 else self.breakpoints[j - 2]
        return lo, self.breakpoints[j - 1]


@dataclass(frozen=True)
class BasisModel:
    """A truncatable coordinate system together with its structural flags.

    Flags are three-valued: True / False when the property is known for
    the model, None when it is not decided by construction.
    """

    kind: BasisKind
    norm_tag: NormTag
    name: str
    unconditional: bool | None
    one_unconditional: bool | None
    boundedly_complete: bool | None
    p: float | None = None
    base: "BasisModel | None" = None
    blocks: BlockSpec | None = None

    # -- structure ---------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return self.kind in (BasisKind.STANDARD_LP, BasisKind.STANDARD_C0)

    @property
    def orthonormal_columns(self) -> bool:
        """True when every synth matrix has exactly orthonormal columns."""
        if self.kind is BasisKind.STANDARD_LP and self.p == 2:
            return True
        if self.kind is BasisKind.USER_BLOCK:
            return self.base is not None and self.base.orthonormal_columns
        return False

    def max_truncation(self) -> int | None:
        """Largest usable truncation (None when unbounded)."""
        if self.kind is BasisKind.USER_BLOCK:
            return self.blocks.count
        return None

    def ambient_dim(self, n: int) -> int:
        """Ambient coordinate count needed to hold n system vectors."""
        if n < 1:
            raise ValueError("truncation size must be >= 1")
        if self.kind is BasisKind.USER_BLOCK:
            if n > self.blocks.count:
                raise ValueError(
                    f"model {self.name!r} defines only {self.blocks.count} vectors"
                )
            return self.blocks.breakpoints[n - 1]
        return n

    def synth_matrix(self, n: int) -> np.ndarray:
        """ambient_dim(n) x n matrix; column j holds system vector j."""
        dim = self.ambient_dim(n)
        if self.kind in (BasisKind.STANDARD_LP, BasisKind.STANDARD_C0):
            return np.eye(n)
        if self.kind is BasisKind.SUMMING_C:
            return np.tril(np.ones((n, n)))
        if self.kind is BasisKind.UNCOMPACT_BLOCKS:
            return _uncompact_matrix(n).copy()
        if self.kind is BasisKind.USER_BLOCK:
            return _block_matrix(self, n, dim)
        raise ValueError(f"unknown basis kind {self.kind!r}")

    def __repr__(self):  # keep reports short
        return f"BasisModel({self.name})"


# -- built-in constructors -------------------------------------------


def standard_lp(p: float) -> BasisModel:
    """Unit-vector system of l1 or l2 (identity transform)."""
    tag = NormTag.from_p(p)
    return BasisModel(
        kind=BasisKind.STANDARD_LP,
        norm_tag=tag,
        name=f"standard_l{int(p)}",
        unconditional=True,
        one_unconditional=True,
        boundedly_complete=True,
        p=p,
    )


def standard_c0() -> BasisModel:
    """Unit-vector system of c0 (identity transform, sup norm)."""
    return BasisModel(
        kind=BasisKind.STANDARD_C0,
        norm_tag=NormTag.SUP,
        name="standard_c0",
        unconditional=True,
        one_unconditional=True,
        boundedly_complete=False,
    )


def summing_c() -> BasisModel:
    """Summing system of the convergent-sequence space.

    System vector n is the 0/1 step sequence starting at coordinate n, so
    synthesis is the running-sum transform and analysis takes first
    differences.  The system is conditional: flipping signs can triple the
    operator norm already at two coordinates.
    """
    return BasisModel(
        kind=BasisKind.SUMMING_C,
        norm_tag=NormTag.SUP,
        name="summing_c",
        unconditional=False,
        one_unconditional=False,
        boundedly_complete=False,
    )


@lru_cache(maxsize=None)
def harmonic_breakpoints(count: int) -> tuple[int, ...]:
    """Right edges of the harmonic blocks: {1,2}, {3..7}, {8..20}, ...

    The first block is pinned to {1, 2}; each later block extends greedily
    until its reciprocal sum first reaches 1, which keeps every block sum
    inside [1, 2].
    """
    if count < 1:
        raise ValueError("need at least one block")
    edges = [2]
    while len(edges) < count:
        total, n = 0.0, edges[-1]
        while total < 1.0:
            n += 1
            total += 1.0 / n
        edges.append(n)
    return tuple(edges[:count])


def _breakpoints_covering(n: int) -> tuple[int, ...]:
    """Harmonic breakpoints extended until they cover coordinate n."""
    count = 1
    while harmonic_breakpoints(count)[-1] < n:
        count += 1
    return harmonic_breakpoints(count)


def _block_of(i: int, edges: tuple[int, ...]) -> int:
    """1-based block index containing coordinate i (1-based)."""
    return int(np.searchsorted(np.asarray(edges), i, side="left")) + 1


@lru_cache(maxsize=None)
def _uncompact_matrix(n: int) -> np.ndarray:
    """n x n block-diagonal running-sum matrix over the harmonic blocks."""
    edges = _breakpoints_covering(n)
    s = np.zeros((n, n))
    lo = 0
    for hi in edges:
        hi = min(hi, n)
        if hi <= lo:
            break
        s[lo:hi, lo:hi] = np.tril(np.ones((hi - lo, hi - lo)))
        lo = hi
    s.setflags(write=False)
    return s


def make_uncompact_basis() -> BasisModel:
    """Block system over the harmonic groups, in the sup norm.

    Every system vector is a step sequence confined to one harmonic block,
    so the unit brick is bounded (norm at most 2) while the all-plus sign
    series keeps whole-block sums at least 1 forever: boundedness without
    compactness.
    """
    return BasisModel(
        kind=BasisKind.UNCOMPACT_BLOCKS,
        norm_tag=NormTag.SUP,
        name="uncompact_blocks",
        unconditional=False,
        one_unconditional=False,
        boundedly_complete=False,
    )


def block_harmonic_member(k: int, ambient: int | None = None) -> CoefficientVector:
    """Reciprocal-weighted sum of the k-th harmonic block's system vectors.

    The resulting step vector is supported inside block k, its sup norm is
    the block's reciprocal sum, hence always in [1, 2].
    """
    if k < 1:
        raise ValueError("block index starts at 1")
    edges = harmonic_breakpoints(k)
    lo = 0 if k == 1 else edges[k - 2]
    hi = edges[k - 1]
    dim = hi if ambient is None else max(ambient, hi)
    out = np.zeros(dim)
    out[lo:hi] = np.cumsum(1.0 / np.arange(lo + 1, hi + 1))
    return CoefficientVector(out)


def block_basis(base: BasisModel, blocks: BlockSpec) -> BasisModel:
    """Normalized block system of ``base`` with the given weights.

    Block vector j is the weighted combination of the base vectors in
    block j, scaled to unit norm.  Sign-stability flags carry over from
    the base because any sign multiplier of the block system extends to a
    sign multiplier of the base with the same norm bound; for a
    conditional base nothing is claimed.
    """
    if base.kind is BasisKind.USER_BLOCK:
        raise ValueError("nested block systems are not supported")
    uncond = base.unconditional if base.unconditional else None
    one_uncond = base.one_unconditional if base.one_unconditional else None
    bc = base.boundedly_complete if base.boundedly_complete else None
    return BasisModel(
        kind=BasisKind.USER_BLOCK,
        norm_tag=base.norm_tag,
        name=f"blocks_of_{base.name}",
        unconditional=uncond,
        one_unconditional=one_uncond,
        boundedly_complete=bc,
        base=base,
        blocks=blocks,
    )


def _block_matrix(model: BasisModel, n: int, dim: int) -> np.ndarray:
    base_s = model.base.synth_matrix(dim)
    cols = np.zeros((dim, n))
    for j in range(1, n + 1):
        lo, hi = model.blocks.block_range(j)
        coeffs = np.zeros(dim)
        coeffs[lo:hi] = model.blocks.weights[j - 1]
        vec = base_s @ coeffs
        cols[:, j - 1] = vec / norm(vec, model.norm_tag)
    return cols


# -- transforms ------------------------------------------------------


def synthesize(model: BasisModel, coeffs) -> CoefficientVector:
    """Ambient vector of a finite coefficient combination."""
    arr = as_array(coeffs)
    if arr.size == 0:
        return CoefficientVector(np.zeros(1))
    s = model.synth_matrix(arr.size)
    return CoefficientVector(s @ arr)


def analyze(model: BasisModel, x, n: int | None = None) -> np.ndarray:
    """Coefficients of an ambient vector; inverse of ``synthesize``.

    For square models any ambient length works (the transform is lower
    triangular).  Block models additionally check that the vector really
    lies in the block span.
    """
    arr = as_array(x)
    if model.kind is BasisKind.USER_BLOCK:
        count = n if n is not None else model.blocks.count
        while count > 1 and model.ambient_dim(count - 1) >= arr.size:
            count -= 1
        dim = model.ambient_dim(count)
        s = model.synth_matrix(count)
        padded = pad_to(arr, dim)
        if arr.size > dim and np.any(arr[dim:] != 0):
            raise ValueError("vector support exceeds the block span")
        coeffs, *_ = np.linalg.lstsq(s, padded[:dim], rcond=None)
        resid = s @ coeffs - padded[:dim]
        scale = max(1.0, float(np.max(np.abs(padded))))
        if float(np.max(np.abs(resid))) > _SOLVE_RTOL * scale:
            raise ValueError("vector is not in the span of the block system")
        return coeffs
    size = n if n is not None else arr.size
    size = max(size, arr.size, 1)
    padded = pad_to(arr, size)
    if model.is_identity:
        return padded.copy()
    s = model.synth_matrix(size)
    return solve_triangular(s, padded, lower=True)


# -- exact operator norms --------------------------------------------


def operator_norm(matrix: np.ndarray, tag: NormTag) -> float:
    """Exact induced norm of a square matrix under the given tag."""
    m = np.asarray(matrix, dtype=float)
    if tag is NormTag.L1:
        return float(np.max(np.sum(np.abs(m), axis=0)))
    if tag is NormTag.SUP:
        return float(np.max(np.sum(np.abs(m), axis=1)))
    if tag is NormTag.L2:
        return float(np.linalg.norm(m, 2))
    raise ValueError(f"unknown norm tag {tag!r}")


def _projection_norms(model: BasisModel, n: int) -> np.ndarray:
    """Norms of the coordinate projections P_1 .. P_n at truncation n."""
    if model.is_identity:
        return np.ones(n)
    if model.kind is BasisKind.USER_BLOCK:
        return _block_projection_norms(model, n)
    s = model.synth_matrix(n)
    s_inv = solve_triangular(s, np.eye(n), lower=True)
    out = np.empty(n)
    for k in range(1, n + 1):
        p = s[:, :k] @ s_inv[:k, :]
        out[k - 1] = operator_norm(p, model.norm_tag)
    return out


def _block_projection_norms(model: BasisModel, n: int) -> np.ndarray:
    base = model.base
    if base.is_identity:
        # Disjoint ambient supports: truncation drops whole coordinate
        # groups, which never increases any of the three norms.
        return np.ones(n)
    raise ValueError(
        "projection constants for block systems with overlapping ambient "
        "supports are not supported; transforms still are"
    )


def basis_constant(model: BasisModel, n: int) -> float:
    """sup of the coordinate-projection norms up to truncation n (>= 1)."""
    value = float(np.max(_projection_norms(model, n)))
    if value < 1.0 - 1e-12:
        raise ValueError("projection norms below 1 indicate a broken model")
    return max(value, 1.0)


def unconditional_constant(model: BasisModel, n: int, cap: int = ENUMERATION_CAP) -> float:
    """sup over sign patterns of the exact sign-multiplier norm.

    One-unconditional models answer 1 without enumeration; all others walk
    every pattern (up to global sign flip) and evaluate the exact operator
    norm, so ``n`` is limited by the enumeration cap.
    """
    if model.one_unconditional:
        return 1.0
    if model.kind is BasisKind.USER_BLOCK and model.base.is_identity and (
        model.base.one_unconditional
    ):
        return 1.0
    if n > cap:
        raise CapExceededError(
            f"sign-multiplier sweep needs 2^{n - 1} operator norms; cap is {cap}"
        )
    s = model.synth_matrix(n)
    if s.shape[0] != s.shape[1]:
        raise ValueError("sign constants for rectangular block systems are not supported")
    s_inv = solve_triangular(s, np.eye(n), lower=True)
    best = 1.0
    for bits in range(2 ** (n - 1)):
        theta = np.ones(n)
        for j in range(n - 1):
            if bits >> j & 1:
                theta[j + 1] = -1.0
        m = (s * theta) @ s_inv
        best = max(best, operator_norm(m, model.norm_tag))
    return best
