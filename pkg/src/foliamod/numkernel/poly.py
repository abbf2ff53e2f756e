"""Univariate and bivariate complex polynomials.

Bivariate coefficients are stored in the graded order
``[1, x, y, x², xy, y², x³, x²y, xy², y³, ...]``: within total degree ``d``
the monomial ``x^i y^j`` (``i + j = d``) sits at index ``d(d+1)/2 + j``.
This order is part of the field-file format.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np
from scipy.signal import convolve2d

DROP_TOL = 1e-12

Scalar = Union[int, float, complex]


def monomial_index(i: int, j: int) -> int:
    """Position of ``x^i y^j`` in the graded coefficient order."""
    d = i + j
    return d * (d + 1) // 2 + j


def monomials(degree: int) -> Iterator[tuple[int, int]]:
    """Yield exponent pairs ``(i, j)`` in coefficient order up to ``degree``."""
    for d in range(degree + 1):
        for j in range(d + 1):
            yield d - j, j


def n_monomials(degree: int) -> int:
    """Number of monomials of total degree at most ``degree``."""
    return (degree + 1) * (degree + 2) // 2


def _degree_from_length(length: int) -> int:
    degree = (math.isqrt(8 * length + 1) - 3) // 2
    if n_monomials(degree) != length:
        raise ValueError(
            f"coefficient list of length {length} is not (d+1)(d+2)/2 for any d"
        )
    return degree


@dataclass(frozen=True, eq=False)
class UniPoly:
    """Univariate polynomial with complex coefficients in ascending degree."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            object.__setattr__(self, "coeffs", (0j,))
        else:
            object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar], leading: Scalar = 1.0) -> UniPoly:
        """Build ``leading · Π (z - r)``."""
        descending = np.poly(np.asarray(roots, dtype=complex)) * leading
        return cls(tuple(descending[::-1]))

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    @property
    def scale(self) -> float:
        """Largest coefficient magnitude."""
        return float(np.max(np.abs(self.array)))

    @property
    def is_zero(self) -> bool:
        return self.scale == 0.0

    @cached_property
    def degree(self) -> int:
        """Index of the last coefficient above the relative drop tolerance."""
        scale = self.scale
        if scale == 0.0:
            return 0
        significant = np.nonzero(np.abs(self.array) > DROP_TOL * scale)[0]
        return int(significant[-1])

    def trimmed(self) -> UniPoly:
        """Drop negligible leading coefficients."""
        return UniPoly(self.coeffs[: self.degree + 1])

    def __call__(self, z: Scalar) -> complex:
        return complex(np.polyval(self.array[::-1], z))

    def derivative(self) -> UniPoly:
        if len(self.coeffs) == 1:
            return UniPoly((0j,))
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def __mul__(self, other: Union[UniPoly, Scalar]) -> UniPoly:
        if isinstance(other, UniPoly):
            return UniPoly(tuple(np.convolve(self.array, other.array)))
        return UniPoly(tuple(self.array * complex(other)))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"UniPoly({list(self.trimmed().coeffs)!r})"


@dataclass(frozen=True, eq=False)
class BiPoly:
    """Bivariate polynomial with complex coefficients in graded order."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs) or (0j,)
        _degree_from_length(len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction --------------------------------------------------------

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[int, int], Scalar], degree: int | None = None
    ) -> BiPoly:
        """Build from a mapping ``{(i, j): coefficient}`` of ``x^i y^j`` terms."""
        top = max((i + j for i, j in terms), default=0)
        degree = top if degree is None else max(degree, top)
        coeffs = [0j] * n_monomials(degree)
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            coeffs[monomial_index(i, j)] += complex(c)
        return cls(tuple(coeffs))

    @classmethod
    def from_grid(cls, grid: np.ndarray, trim: bool = True) -> BiPoly:
        """Build from a dense matrix ``G[i, j]`` holding the ``x^i y^j`` coefficient."""
        grid = np.asarray(grid, dtype=complex)
        rows, cols = grid.shape
        top = rows + cols - 2
        scale = float(np.max(np.abs(grid))) if grid.size else 0.0
        if trim:
            degree = 0
            for i in range(rows):
                for j in range(cols):
                    if abs(grid[i, j]) > DROP_TOL * scale and i + j > degree:
                        degree = i + j
        else:
            degree = top
        coeffs = []
        for i, j in monomials(degree):
            coeffs.append(grid[i, j] if i < rows and j < cols else 0j)
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> BiPoly:
        return cls((complex(c),))

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar = 0.0) -> BiPoly:
        """The polynomial ``a·x + b·y + c``."""
        return cls((complex(c), complex(a), complex(b)))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Nominal degree implied by the coefficient list length."""
        return _degree_from_length(len(self.coeffs))

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    @property
    def scale(self) -> float:
        """Largest coefficient magnitude."""
        return float(np.max(np.abs(self.array)))

    @property
    def is_zero(self) -> bool:
        return self.scale == 0.0

    @cached_property
    def effective_degree(self) -> int:
        """Highest total degree carrying a coefficient above the drop tolerance."""
        scale = self.scale
        if scale == 0.0:
            return 0
        degree = 0
        for k, (i, j) in enumerate(monomials(self.degree)):
            if abs(self.coeffs[k]) > DROP_TOL * scale:
                degree = i + j
        return degree

    def coefficient(self, i: int, j: int) -> complex:
        if i + j > self.degree:
            return 0j
        return self.coeffs[monomial_index(i, j)]

    @cached_property
    def grid(self) -> np.ndarray:
        """Dense ``(d+1) × (d+1)`` matrix ``G[i, j]`` of ``x^i y^j`` coefficients."""
        d = self.degree
        g = np.zeros((d + 1, d + 1), dtype=complex)
        for k, (i, j) in enumerate(monomials(d)):
            g[i, j] = self.coeffs[k]
        return g

    def homogeneous_part(self, d: int) -> BiPoly:
        """Terms of total degree exactly ``d``."""
        return BiPoly.from_terms(
            {(d - j, j): self.coefficient(d - j, j) for j in range(d + 1)}, degree=d
        )

    def with_degree(self, degree: int) -> BiPoly:
        """Same polynomial, coefficient list padded (or trimmed) to ``degree``."""
        return BiPoly.from_terms(
            {(i, j): self.coefficient(i, j) for i, j in monomials(degree)},
            degree=degree,
        )

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x: Scalar, y: Scalar) -> complex:
        d = self.degree
        xp = np.power(complex(x), np.arange(d + 1))
        yp = np.power(complex(y), np.arange(d + 1))
        return complex(xp @ self.grid @ yp)

    def partial_x(self) -> BiPoly:
        g = self.grid
        if g.shape[0] == 1:
            return BiPoly.constant(0)
        d = g[1:, :] * np.arange(1, g.shape[0])[:, None]
        return BiPoly.from_grid(d)

    def partial_y(self) -> BiPoly:
        g = self.grid
        if g.shape[1] == 1:
            return BiPoly.constant(0)
        d = g[:, 1:] * np.arange(1, g.shape[1])[None, :]
        return BiPoly.from_grid(d)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: Union[BiPoly, Scalar]) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        size = max(self.grid.shape[0], other.grid.shape[0])
        g = np.zeros((size, size), dtype=complex)
        g[: self.grid.shape[0], : self.grid.shape[1]] += self.grid
        g[: other.grid.shape[0], : other.grid.shape[1]] += other.grid
        return BiPoly.from_grid(g)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly(tuple(-self.array))

    def __sub__(self, other: Union[BiPoly, Scalar]) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> BiPoly:
        return BiPoly.constant(other) - self

    def __mul__(self, other: Union[BiPoly, Scalar]) -> BiPoly:
        if isinstance(other, BiPoly):
            return BiPoly.from_grid(convolve2d(self.grid, other.grid))
        return BiPoly(tuple(self.array * complex(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        result = BiPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    # -- substitutions -------------------------------------------------------

    def swap_variables(self) -> BiPoly:
        """The polynomial ``p(y, x)``."""
        return BiPoly.from_grid(self.grid.T)

    def compose_affine(
        self, matrix: Sequence[Sequence[Scalar]], shift: Sequence[Scalar] = (0, 0)
    ) -> BiPoly:
        """Substitute ``(x, y) ↦ M·(x, y) + shift``."""
        m = np.asarray(matrix, dtype=complex)
        b = np.asarray(shift, dtype=complex)
        lx = BiPoly.linear(m[0, 0], m[0, 1], b[0])
        ly = BiPoly.linear(m[1, 0], m[1, 1], b[1])
        d = self.degree
        xpow = [BiPoly.constant(1)]
        ypow = [BiPoly.constant(1)]
        for _ in range(d):
            xpow.append(xpow[-1] * lx)
            ypow.append(ypow[-1] * ly)
        result = BiPoly.constant(0)
        for k, (i, j) in enumerate(monomials(d)):
            c = self.coeffs[k]
            if c != 0:
                result = result + (xpow[i] * ypow[j]) * c
        return result

    def restrict_x(self, slope: Scalar, intercept: Scalar) -> UniPoly:
        """Univariate ``t ↦ p(t, slope·t + intercept)``."""
        sub = self.compose_affine([[1, 0], [slope, 0]], [0, intercept])
        return UniPoly(tuple(sub.coefficient(i, 0) for i in range(sub.degree + 1)))

    def restrict_y(self, slope: Scalar, intercept: Scalar) -> UniPoly:
        """Univariate ``t ↦ p(slope·t + intercept, t)``."""
        return self.swap_variables().restrict_x(slope, intercept)

    def y_coefficients(self) -> list[UniPoly]:
        """Write ``p = Σ_j c_j(x) y^j`` and return the ``c_j`` as polynomials in x."""
        g = self.grid
        return [UniPoly(tuple(g[:, j])) for j in range(g.shape[1])]

    def __repr__(self) -> str:
        terms = {
            (i, j): self.coeffs[k]
            for k, (i, j) in enumerate(monomials(self.degree))
            if self.coeffs[k] != 0
        }
        return f"BiPoly({terms!r})"


X = BiPoly.linear(1, 0)
Y = BiPoly.linear(0, 1)
