"""Coefficient vectors and exact norms for the classical sequence spaces.

Vectors are finitely supported by construction: a ``CoefficientVector``
stores a read-only float64 array and is interpreted as the sequence that
continues with zeros past the stored length.  Exact norm formulas are used
throughout -- absolute sums for the 1-norm, Euclidean length for the
2-norm, and the coordinate maximum for the sup norm shared by c0 and the
space of convergent sequences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "NormTag",
    "CoefficientVector",
    "as_array",
    "norm",
    "tail_norm",
    "pad_to",
]


class NormTag(enum.Enum):
    """Which classical norm the ambient space carries."""

    L1 = "l1"
    L2 = "l2"
    SUP = "sup"

    @classmethod
    def from_p(cls, p: float) -> "NormTag":
        """Map an exponent to its tag; only p = 1 and p = 2 are supported."""
        if p == 1:
            return cls.L1
        if p == 2:
            return cls.L2
        raise ValueError(f"unsupported exponent p={p!r}; use 1, 2, or NormTag.SUP")


def as_array(values) -> np.ndarray:
    """Coerce array-likes / CoefficientVectors to a 1-D float64 ndarray."""
    if isinstance(values, CoefficientVector):
        return values.data
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D coefficient array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficient entries must be finite")
    return arr


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Finitely supported sequence entry; data is stored read-only.

    Equality is by identity: numeric comparison should go through norms so
    that tolerance choices stay explicit at the call site.
    """

    data: np.ndarray = field()

    def __post_init__(self):
        arr = as_array(self.data)
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    def __len__(self) -> int:
        return self.data.shape[0]

    def entry(self, n: int) -> float:
        """Coordinate n (1-based); zero past the stored support."""
        if n < 1:
            raise IndexError("coordinates are indexed from 1")
        if n > len(self):
            return 0.0
        return float(self.data[n - 1])


def norm(x, tag: NormTag) -> float:
    """Exact norm of a coefficient vector under the given tag."""
    arr = as_array(x)
    if arr.size == 0:
        return 0.0
    if tag is NormTag.L1:
        return float(np.sum(np.abs(arr)))
    if tag is NormTag.L2:
        return float(np.linalg.norm(arr))
    if tag is NormTag.SUP:
        return float(np.max(np.abs(arr)))
    raise ValueError(f"unknown norm tag {tag!r}")


def tail_norm(x, tag: NormTag, after: int) -> float:
    """Norm of the tail (coordinates strictly past ``after``).

    ``after = 0`` reproduces the full norm; a tail past the stored support
    is exactly zero.
    """
    if after < 0:
        raise ValueError("tail start must be >= 0")
    arr = as_array(x)
    if after >= arr.size:
        return 0.0
    return norm(arr[after:], tag)


def pad_to(x, length: int) -> np.ndarray:
    """Return ``x`` as an ndarray zero-padded (never truncated) to ``length``."""
    arr = as_array(x)
    if arr.size >= length:
        return arr
    out = np.zeros(length)
    out[: arr.size] = arr
    return out
