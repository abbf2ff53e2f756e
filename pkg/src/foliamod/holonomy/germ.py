"""Numeric holonomy of the line at infinity.

In an infinity chart ``(u, v)`` the leaf ``u = 0`` is invariant. Following a
path ``v(s)`` on it, nearby leaves cross the transversal ``{v = v(s)}`` at
``u(s)`` with ``du/ds = v'(s)·U(u, v)/V(u, v)``. Integrating around a loop
gives the holonomy germ; its derivative at 0 is ``exp(2πi·λ/μ)`` for a loop
around a singular point with characteristic number ``λ/μ``.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.integrate import solve_ivp

from foliamod.core.errors import (
    ExtrapolationUnstable,
    NearSingularTransversal,
    StepLimitExceeded,
    TrajectoryEscape,
)
from foliamod.core.models import HolonomyGerm, IntegratorSettings, LoopSpec, SingPoint
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import infinite_singular_points
from foliamod.numkernel.poly import BiPoly

logger = logging.getLogger(__name__)

DEFAULT_RADII = (1e-4, 5e-5, 2.5e-5)
RADIUS_FRACTION = 1.0 / 3.0
# Dormand-Prince evaluates the right-hand side six times per accepted step
_EVALS_PER_STEP = 6


@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex

    @property
    def length(self) -> float:
        return 1.0

    def point(self, s: float) -> tuple[complex, complex]:
        return self.start + s * (self.end - self.start), self.end - self.start


@dataclass(frozen=True)
class Arc:
    loop: LoopSpec

    @property
    def length(self) -> float:
        return 2 * math.pi

    def point(self, s: float) -> tuple[complex, complex]:
        loop = self.loop
        offset = loop.radius * cmath.exp(1j * (loop.base_angle + loop.orientation * s))
        return loop.center + offset, 1j * loop.orientation * offset


PathPiece = Union[Segment, Arc]


def loop_path(loop: LoopSpec, base: Optional[complex] = None) -> list[PathPiece]:
    """The circle alone, or the lollipop from ``base`` around it and back."""
    if base is None:
        return [Arc(loop)]
    return [Segment(base, loop.start), Arc(loop), Segment(loop.start, base)]


class _StepBudget(Exception):
    pass


def _transport_piece(
    U: BiPoly,
    V: BiPoly,
    piece: PathPiece,
    u0: complex,
    settings: IntegratorSettings,
    scale: float,
    budget: list[int],
) -> complex:
    def rhs(s: float, state: np.ndarray) -> np.ndarray:
        budget[0] -= 1
        if budget[0] < 0:
            raise _StepBudget
        v, dv = piece.point(s)
        u = complex(state[0])
        denominator = V(u, v)
        if abs(denominator) < settings.transversal_tol * scale:
            raise NearSingularTransversal(
                f"|V| = {abs(denominator):.3g} on the path at v = {v:.6g}"
            )
        return np.array([dv * U(u, v) / denominator], dtype=complex)

    def escape(s: float, state: np.ndarray) -> float:
        return abs(state[0]) - settings.escape_radius

    escape.terminal = True  # type: ignore[attr-defined]

    atol = settings.atol * abs(u0)
    try:
        sol = solve_ivp(
            rhs,
            (0.0, piece.length),
            np.array([u0], dtype=complex),
            method="RK45",
            rtol=settings.rtol,
            atol=atol,
            events=escape,
        )
    except _StepBudget as exc:
        raise StepLimitExceeded(
            f"more than {settings.max_steps} integration steps"
        ) from exc
    if sol.status == 1:
        raise TrajectoryEscape(f"|u| exceeded {settings.escape_radius} starting from {u0}")
    if sol.status != 0:
        raise StepLimitExceeded(f"integrator failed: {sol.message}")
    return complex(sol.y[0, -1])


def transport(
    U: BiPoly,
    V: BiPoly,
    path: Sequence[PathPiece],
    u0: complex,
    settings: Optional[IntegratorSettings] = None,
) -> complex:
    """Follow the leaf through ``u0`` along the pieces of ``path`` in order."""
    if u0 == 0:
        return 0j
    settings = settings or IntegratorSettings()
    scale = max(V.scale, 1e-300)
    budget = [_EVALS_PER_STEP * settings.max_steps]
    u = complex(u0)
    for piece in path:
        u = _transport_piece(U, V, piece, u, settings, scale, budget)
    return u


def holonomy_map(germ: HolonomyGerm, u0: complex) -> complex:
    """The return map of ``germ`` evaluated at ``u0``; exactly 0 at ``u0 = 0``.

    Raises:
        TrajectoryEscape: the transported coordinate left the chart
        StepLimitExceeded: the integrator exceeded its step cap
        NearSingularTransversal: the path meets a zero of ``V``
    """
    return transport(germ.U, germ.V, loop_path(germ.loop, germ.base), u0, germ.integrator)


def neville_at_zero(nodes: Sequence[float], values: Sequence[complex]) -> list[complex]:
    """Diagonal of the Neville tableau extrapolating ``values`` to ``node = 0``."""
    table = list(values)
    diagonal = [table[0]]
    for level in range(1, len(nodes)):
        for i in range(len(nodes) - level):
            x_i, x_j = nodes[i], nodes[i + level]
            table[i] = (x_j * table[i] - x_i * table[i + 1]) / (x_j - x_i)
        diagonal.append(table[0])
    return diagonal


def loop_radius(
    center: complex, others: Sequence[complex], fraction: float = RADIUS_FRACTION
) -> float:
    """``fraction`` of the distance from ``center`` to the nearest other center."""
    distances = [abs(center - c) for c in others if c != center]
    if not distances:
        return 1.0
    return fraction * min(distances)


def germ_at_point(
    v: VectorField,
    which: int,
    settings: Optional[IntegratorSettings] = None,
    points: Optional[Sequence[SingPoint]] = None,
) -> HolonomyGerm:
    """Holonomy germ of a small loop around the ``which``-th point at infinity.

    The loop lives in the chart where the point has coordinate
    ``coords[1]``; the radius is a third of the distance to the nearest other
    point visible in that chart.
    """
    points = list(points) if points is not None else infinite_singular_points(v)
    point = points[which]
    chart = point.chart if point.chart in ("x", "y") else "x"
    center = point.coords[1]
    others = []
    for p in points:
        if p is point:
            continue
        a, b = p.direction
        if chart == "x" and a != 0:
            others.append(b / a)
        elif chart == "y" and b != 0:
            others.append(a / b)
    U, V = v.infinity_chart(chart)
    loop = LoopSpec(center, loop_radius(center, others))
    return HolonomyGerm(U, V, loop, settings or IntegratorSettings())


def germ_multiplier(
    germ: HolonomyGerm,
    radii: Sequence[float] = DEFAULT_RADII,
    stability_tol: float = 1e-3,
) -> complex:
    """Estimate the germ's derivative at 0 by extrapolating ``Δ(u₀)/u₀`` to ``u₀ = 0``.

    Args:
        germ: The holonomy germ
        radii: Decreasing starting offsets ``u₀``
        stability_tol: Largest admissible change between the last two
            extrapolated estimates, relative to their size

    Raises:
        ExtrapolationUnstable: successive extrapolations disagree
    """
    quotients = [holonomy_map(germ, complex(r)) / r for r in radii]
    diagonal = neville_at_zero(list(radii), quotients)
    estimate = diagonal[-1]
    if len(diagonal) > 1:
        change = abs(diagonal[-1] - diagonal[-2])
        if change > stability_tol * max(1.0, abs(estimate)):
            raise ExtrapolationUnstable(
                f"extrapolated multipliers differ by {change:.3g} between radii"
            )
    logger.debug("multiplier around %s: %s (raw %s)", germ.loop.center, estimate, quotients[-1])
    return estimate


def holonomy_multiplier(
    v: VectorField,
    which: int,
    radii: Sequence[float] = DEFAULT_RADII,
    settings: Optional[IntegratorSettings] = None,
    stability_tol: float = 1e-3,
) -> complex:
    """Multiplier of the small loop around the ``which``-th point at infinity.

    See :func:`germ_multiplier` for ``radii`` and ``stability_tol``.
    """
    return germ_multiplier(germ_at_point(v, which, settings), radii, stability_tol)


def expected_multiplier(point: SingPoint) -> complex:
    """``exp(2πi·λ/μ)`` from the point's characteristic number."""
    ratio = point.char_ratio
    if ratio is None:
        raise ValueError("point has no characteristic number")
    return cmath.exp(2j * math.pi * ratio)


def ratio_from_multiplier(multiplier: complex) -> complex:
    """``λ/μ`` modulo integers, normalized to real part in ``[0, 1)``."""
    ratio = cmath.log(multiplier) / (2j * math.pi)
    return complex(ratio.real % 1.0, ratio.imag)
