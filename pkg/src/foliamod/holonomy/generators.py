"""Generators of the holonomy group of the line at infinity.

Every generator is a lollipop based at a common point of the infinity leaf:
a straight segment to a small circle around one singular point, the circle
counterclockwise, and the segment back. Taken in order of increasing angle
seen from the base, their composition is a loop around every singular
point, hence trivial.
"""

from __future__ import annotations

import cmath
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from foliamod.core.errors import InputRejected
from foliamod.core.models import AffineMap, HolonomyGerm, IntegratorSettings, LoopSpec
from foliamod.foliation.field import InfinityChart, VectorField
from foliamod.foliation.singular import infinite_singular_points
from foliamod.holonomy.germ import holonomy_map, loop_radius

logger = logging.getLogger(__name__)

SHEARS = (0.5, -0.5, 0.25, 2.0)
BASE_DIRECTION = cmath.exp(-1.2j)
DEFAULT_SAMPLES = (1e-3, 1e-3j, -7e-4 + 5e-4j)


@dataclass(frozen=True)
class HolonomyFrame:
    """A chart of the infinity leaf in which every singular point is finite.

    ``field`` is ``v`` itself, or its image under the shear
    ``(x, y) ↦ (x + shear·y, y)`` when neither chart works for ``v``.
    """

    field: VectorField
    chart: InfinityChart
    centers: tuple[complex, ...]
    shear: float = 0.0


def _centers(v: VectorField, chart: InfinityChart) -> Optional[tuple[complex, ...]]:
    centers = []
    for point in infinite_singular_points(v):
        a, b = point.direction
        if chart == "x":
            if a == 0:
                return None
            centers.append(b / a)
        else:
            if b == 0:
                return None
            centers.append(a / b)
    return tuple(centers)


def holonomy_frame(v: VectorField) -> HolonomyFrame:
    """Chart ``x`` if ``[0:1]`` is regular, else chart ``y`` if ``[1:0]`` is, else a shear.

    Raises:
        InputRejected: no listed shear moves the singular points off ``[0:1]``
    """
    for chart in ("x", "y"):
        centers = _centers(v, chart)
        if centers is not None:
            return HolonomyFrame(v, chart, centers)
    for s in SHEARS:
        sheared = v.transformed(AffineMap(((1, s), (0, 1))))
        centers = _centers(sheared, "x")
        if centers is not None:
            logger.debug("holonomy frame: shear %g in chart x", s)
            return HolonomyFrame(sheared, "x", centers, s)
    raise InputRejected("no chart of the line at infinity avoids every singular point")


def default_base(centers: Sequence[complex]) -> complex:
    """A point well outside the convex hull of ``centers``."""
    c = np.asarray(centers, dtype=complex)
    centroid = complex(c.mean())
    spread = float(np.max(np.abs(c - centroid)))
    return centroid + (spread + 1.0) * BASE_DIRECTION


def generator_germs(
    v: VectorField,
    base: Optional[complex] = None,
    settings: Optional[IntegratorSettings] = None,
) -> tuple[HolonomyFrame, list[HolonomyGerm]]:
    """Lollipop germs based at ``base``, in the order they are traversed.

    ``base`` is a coordinate in the frame's chart; by default a point
    outside the hull of the centers.
    """
    frame = holonomy_frame(v)
    centers = frame.centers
    if base is None:
        base = default_base(centers)
    if any(abs(base - c) < 1e-12 for c in centers):
        raise InputRejected(f"base point {base} coincides with a singular point")
    centroid = complex(np.mean(centers))
    reference = centroid - base

    def angle(c: complex) -> float:
        return cmath.phase((c - base) / reference)

    U, V = frame.field.infinity_chart(frame.chart)
    settings = settings or IntegratorSettings()
    germs = []
    for c in sorted(centers, key=angle):
        radius = loop_radius(c, centers)
        loop = LoopSpec(c, radius, 1, cmath.phase(base - c))
        germs.append(HolonomyGerm(U, V, loop, settings, base))
    return frame, germs


def compose(germs: Sequence[HolonomyGerm], u0: complex) -> complex:
    """Follow ``germs`` in sequence starting from ``u0``."""
    u = complex(u0)
    for germ in germs:
        u = holonomy_map(germ, u)
    return u


def generator_product_check(
    v: VectorField,
    base: Optional[complex] = None,
    u0_samples: Sequence[complex] = DEFAULT_SAMPLES,
    settings: Optional[IntegratorSettings] = None,
) -> float:
    """Largest relative deviation ``|u_final − u₀|/|u₀|`` of the full product of generators.

    Samples at ``u₀ = 0`` contribute exactly 0.
    """
    _, germs = generator_germs(v, base, settings)
    worst = 0.0
    for u0 in u0_samples:
        if u0 == 0:
            continue
        u = compose(germs, u0)
        worst = max(worst, abs(u - u0) / abs(u0))
    logger.info("generator product residual %.3g over %d samples", worst, len(u0_samples))
    return worst


def commutator_residual(
    v: VectorField,
    i: int,
    j: int,
    u0: complex,
    base: Optional[complex] = None,
    settings: Optional[IntegratorSettings] = None,
) -> float:
    """``|f_i ∘ f_j ∘ f_i⁻¹ ∘ f_j⁻¹(u₀) − u₀|`` for generators in traversal order.

    Inverses run the same lollipop with the circle reversed. The value is
    reported as is; no solvability decision is drawn from it.
    """
    if u0 == 0:
        return 0.0
    _, germs = generator_germs(v, base, settings)
    f_i, f_j = germs[i], germs[j]
    u = compose([f_j.reversed(), f_i.reversed(), f_j, f_i], u0)
    return abs(u - u0)
