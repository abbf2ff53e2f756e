"""Core data models for foliamod."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from foliamod.core.errors import DegenerateSingularity, SingularCountMismatch
from foliamod.numkernel.linalg import CMatrix
from foliamod.numkernel.poly import BiPoly

Chart = Literal["affine", "x", "y"]


def _rounded(z: complex, digits: int = 9) -> tuple[float, float]:
    return (round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0)


@dataclass(frozen=True)
class SingPoint:
    """A singular point of a foliation, finite or on the line at infinity.

    ``coords`` are the point's coordinates in its chart: ``(x, y)`` for an
    affine point, ``(0, v)`` in chart ``"x"`` (``u = 1/x, v = y/x``) or
    ``(0, w)`` in chart ``"y"`` (``u = 1/y, w = x/y``). At infinity
    ``eigenpair = (λ, μ)`` with ``μ`` the eigenvalue tangent to the line.
    """

    chart: Chart
    coords: tuple[complex, complex]
    jacobian: CMatrix
    eigenpair: tuple[complex, complex]
    nu: Optional[complex]
    residual: float

    @property
    def is_finite(self) -> bool:
        return self.chart == "affine"

    @property
    def degenerate(self) -> bool:
        return self.nu is None

    @property
    def char_ratio(self) -> Optional[complex]:
        """Characteristic number ``λ/μ``."""
        lam, mu = self.eigenpair
        if mu == 0:
            return None
        return lam / mu

    @property
    def direction(self) -> tuple[complex, complex]:
        """Homogeneous direction ``[x : y]`` of a point at infinity."""
        if self.chart == "x":
            return (1 + 0j, self.coords[1])
        if self.chart == "y":
            return (self.coords[1], 1 + 0j)
        raise ValueError("finite points have no direction at infinity")

    @property
    def sort_key(self) -> tuple[float, ...]:
        if self.chart == "affine":
            x, y = self.coords
            return (*_rounded(x), *_rounded(y))
        # [0:1] sorts after every direction seen in chart x
        if self.chart == "y":
            return (1.0, 0.0, 0.0)
        return (0.0, *_rounded(self.coords[1]))


@dataclass(frozen=True)
class SingSet:
    """All singular points of a field: infinite first, then finite."""

    degree: int
    finite: tuple[SingPoint, ...]
    infinite: tuple[SingPoint, ...]

    @property
    def N(self) -> int:
        return len(self.finite) + len(self.infinite)

    @property
    def points(self) -> tuple[SingPoint, ...]:
        return self.infinite + self.finite

    @property
    def expected_counts(self) -> tuple[int, int]:
        """Generic ``(finite, infinite)`` counts ``(n², n + 1)``."""
        return self.degree**2, self.degree + 1

    def require_generic(self) -> SingSet:
        """Raise unless the counts are generic and every point is nondegenerate."""
        n_finite, n_infinite = self.expected_counts
        if len(self.finite) != n_finite or len(self.infinite) != n_infinite:
            raise SingularCountMismatch(
                f"found {len(self.finite)} finite and {len(self.infinite)} infinite "
                f"singular points, expected {n_finite} and {n_infinite}"
            )
        bad = [p for p in self.points if p.degenerate]
        if bad:
            raise DegenerateSingularity(
                f"{len(bad)} degenerate singular point(s), first at {bad[0].coords}"
            )
        return self


@dataclass(frozen=True)
class Line:
    """The affine line ``α·x + β·y + γ = 0``, largest coefficient scaled to 1."""

    alpha: complex
    beta: complex
    gamma: complex = 0j

    def __post_init__(self) -> None:
        coeffs = [complex(self.alpha), complex(self.beta), complex(self.gamma)]
        if coeffs[0] == 0 and coeffs[1] == 0:
            raise ValueError("a line needs (alpha, beta) != (0, 0)")
        pivot = max(coeffs, key=abs)
        alpha, beta, gamma = (c / pivot for c in coeffs)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @classmethod
    def through(cls, p: tuple[complex, complex], q: tuple[complex, complex]) -> Line:
        """The line through two distinct points."""
        dx, dy = q[0] - p[0], q[1] - p[1]
        return cls(dy, -dx, dx * p[1] - dy * p[0])

    @property
    def polynomial(self) -> BiPoly:
        return BiPoly.linear(self.alpha, self.beta, self.gamma)

    @property
    def tangent(self) -> tuple[complex, complex]:
        return (self.beta, -self.alpha)

    def __call__(self, x: complex, y: complex) -> complex:
        return self.alpha * x + self.beta * y + self.gamma

    def is_close(self, other: Line, tol: float = 1e-8) -> bool:
        """Same projective line up to ``tol`` (coefficients compared up to scale)."""
        a = np.array([self.alpha, self.beta, self.gamma])
        b = np.array([other.alpha, other.beta, other.gamma])
        return bool(np.linalg.norm(np.cross(a, b)) <= tol * np.linalg.norm(a) * np.linalg.norm(b))


@dataclass(frozen=True)
class AffineMap:
    """The map ``z ↦ M·z + shift`` of the complex plane."""

    matrix: tuple[tuple[complex, complex], tuple[complex, complex]]
    shift: tuple[complex, complex] = (0j, 0j)

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("affine matrix must be 2x2")
        scale = float(np.max(np.abs(m)))
        if scale == 0 or abs(np.linalg.det(m)) <= 1e-12 * scale * scale:
            raise ValueError("affine matrix is not invertible")
        object.__setattr__(
            self, "matrix", tuple(tuple(complex(e) for e in row) for row in m)
        )
        object.__setattr__(self, "shift", tuple(complex(s) for s in self.shift))

    @classmethod
    def identity(cls) -> AffineMap:
        return cls(((1, 0), (0, 1)))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=complex)

    @property
    def offset(self) -> np.ndarray:
        return np.asarray(self.shift, dtype=complex)

    def __call__(self, point: tuple[complex, complex]) -> tuple[complex, complex]:
        w = self.array @ np.asarray(point, dtype=complex) + self.offset
        return complex(w[0]), complex(w[1])

    def inverse(self) -> AffineMap:
        inv = np.linalg.inv(self.array)
        return AffineMap(tuple(map(tuple, inv)), tuple(-inv @ self.offset))

    def then(self, other: AffineMap) -> AffineMap:
        """The composition ``other ∘ self``."""
        m = other.array @ self.array
        return AffineMap(tuple(map(tuple, m)), tuple(other.array @ self.offset + other.offset))


@dataclass(frozen=True)
class RegularRep:
    """Quadratic field with singular points (0,0), (2,0), (0,2).

    ``P = p₁·x(x+y−2) + p₂·y(x+y−2) + p₃·xy`` and likewise for ``Q``;
    ``pinned`` indexes the coefficient of ``(p₁, p₂, p₃, q₁, q₂, q₃)`` fixed to 1.
    """

    p: tuple[complex, complex, complex]
    q: tuple[complex, complex, complex]
    pinned: int = 0

    @classmethod
    def from_coefficients(
        cls, coefficients: np.ndarray | tuple[complex, ...], pinned: Optional[int] = None
    ) -> RegularRep:
        c = np.asarray(coefficients, dtype=complex)
        if c.shape != (6,):
            raise ValueError(f"a regular representative has 6 coefficients, got {c.shape}")
        if pinned is None:
            pinned = int(np.argmax(np.abs(c)))
        if c[pinned] == 0:
            raise ValueError("cannot pin a zero coefficient")
        c = c / c[pinned]
        c[pinned] = 1.0
        return cls(tuple(c[:3]), tuple(c[3:]), pinned)

    @property
    def coefficients(self) -> np.ndarray:
        return np.asarray(self.p + self.q, dtype=complex)

    def projective_distance(self, other: RegularRep) -> float:
        """Sine of the angle between the coefficient lines in C⁶."""
        a, b = self.coefficients, other.coefficients
        # residual of projecting a onto b; 1 − cos² cancels to half precision
        projection = (np.vdot(b, a) / np.vdot(b, b)) * b
        return float(np.linalg.norm(a - projection) / np.linalg.norm(a))


@dataclass(frozen=True)
class ModuliVector:
    """Baum–Bott indices of the singular points, labeled and canonically sorted."""

    labels: tuple[str, ...]
    values: tuple[complex, ...]
    n_infinite: int
    ratios: tuple[complex, ...] = ()

    @property
    def labeled(self) -> dict[str, complex]:
        return dict(zip(self.labels, self.values))

    @property
    def infinite(self) -> tuple[complex, ...]:
        return tuple(sorted(self.values[: self.n_infinite], key=_rounded))

    @property
    def finite(self) -> tuple[complex, ...]:
        return tuple(sorted(self.values[self.n_infinite :], key=_rounded))

    @property
    def canonical(self) -> tuple[complex, ...]:
        return self.infinite + self.finite

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)

    @property
    def total(self) -> complex:
        return complex(sum(self.values))

    @property
    def ratio_sum(self) -> complex:
        return complex(sum(self.ratios))

    def shifted(self, delta: np.ndarray | tuple[complex, ...]) -> ModuliVector:
        """Same labels with ``delta`` added to the values."""
        values = self.array + np.asarray(delta, dtype=complex)
        return ModuliVector(self.labels, tuple(complex(v) for v in values), self.n_infinite)


@dataclass(frozen=True)
class JacobianReport:
    """Finite-difference derivative of the moduli map at a representative."""

    matrix: CMatrix
    singular_values: tuple[float, ...]
    rank: int
    radial_residual: float
    step: float

    @property
    def sigma_ratio(self) -> float:
        """``σ₅/σ₁``, the conditioning of the expected full rank."""
        s = self.singular_values
        if len(s) < 5 or s[0] == 0:
            return 0.0
        return s[4] / s[0]


@dataclass(frozen=True)
class LoopSpec:
    """Circle ``center + radius·exp(i(base_angle + orientation·θ))``, θ ∈ [0, 2π]."""

    center: complex
    radius: float
    orientation: int = 1
    base_angle: float = 0.0

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError("loop radius must be positive")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    @property
    def start(self) -> complex:
        return self.center + self.radius * cmath.exp(1j * self.base_angle)

    def reversed(self) -> LoopSpec:
        return LoopSpec(self.center, self.radius, -self.orientation, self.base_angle)


@dataclass(frozen=True)
class IntegratorSettings:
    rtol: float = 1e-10
    atol: float = 1e-12
    max_steps: int = 1_000_000
    escape_radius: float = 0.5
    transversal_tol: float = 1e-12


@dataclass(frozen=True)
class HolonomyGerm:
    """Transversal return map along a loop on the line at infinity.

    ``U`` and ``V`` are the field in an infinity chart ``(u, v)``. With
    ``base`` set, the loop is a lollipop: a segment from ``base`` to the
    circle, the circle, and the segment back.
    """

    U: BiPoly
    V: BiPoly
    loop: LoopSpec
    integrator: IntegratorSettings = field(default_factory=IntegratorSettings)
    base: Optional[complex] = None

    def reversed(self) -> HolonomyGerm:
        return HolonomyGerm(self.U, self.V, self.loop.reversed(), self.integrator, self.base)
