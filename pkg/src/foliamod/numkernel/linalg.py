"""Small dense complex linear algebra."""

from __future__ import annotations

import cmath
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np


@dataclass(frozen=True, eq=False)
class CMatrix:
    """Row-major complex matrix."""

    rows: int
    cols: int
    entries: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        entries = tuple(complex(e) for e in self.entries)
        if not all(cmath.isfinite(e) for e in entries):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_array(cls, array: Union[np.ndarray, Sequence[Sequence[complex]]]) -> CMatrix:
        a = np.atleast_2d(np.asarray(array, dtype=complex))
        return cls(a.shape[0], a.shape[1], tuple(a.ravel()))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=complex).reshape(self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> complex:
        i, j = index
        return self.entries[i * self.cols + j]


MatrixLike = Union[CMatrix, np.ndarray, Sequence[Sequence[complex]]]


def as_array(m: MatrixLike) -> np.ndarray:
    """Coerce a CMatrix or array-like to a 2-D complex ndarray."""
    if isinstance(m, CMatrix):
        return m.to_array()
    return np.atleast_2d(np.asarray(m, dtype=complex))


def _order_key(z: complex) -> tuple[float, float]:
    return (z.real, z.imag)


def eig2(m: MatrixLike, tangent: Optional[Sequence[complex]] = None) -> tuple[complex, complex]:
    """Eigenvalues of a 2×2 matrix from its trace and determinant.

    By default the pair is sorted by ``(Re, Im)``. When ``tangent`` is given
    (a direction assumed to be an eigenvector), the second entry is the
    eigenvalue along it and the first is the other one.

    Args:
        m: 2×2 matrix
        tangent: optional eigen-direction selecting the second eigenvalue

    Returns:
        Pair ``(λ, μ)``
    """
    a = as_array(m)
    if a.shape != (2, 2):
        raise ValueError(f"eig2 expects a 2x2 matrix, got {a.shape}")
    trace = complex(a[0, 0] + a[1, 1])
    det = complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])

    if tangent is not None:
        d = np.asarray(tangent, dtype=complex)
        mu = complex(np.vdot(d, a @ d) / np.vdot(d, d))
        return trace - mu, mu

    s = cmath.sqrt(trace * trace - 4.0 * det)
    big = (trace + s) / 2 if abs(trace + s) >= abs(trace - s) else (trace - s) / 2
    small = det / big if big != 0 else 0j
    first, second = sorted((big, small), key=_order_key)
    return first, second


def singular_values(m: MatrixLike) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(as_array(m), compute_uv=False)
