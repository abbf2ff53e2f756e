"""Label tracking of singular points across nearby fields."""

from __future__ import annotations

import math
from collections.abc import Sequence
from itertools import combinations

import numpy as np
from scipy.optimize import linear_sum_assignment

from foliamod.core.errors import LabelTrackingFailure
from foliamod.core.models import SingPoint, SingSet

TRUST_FRACTION = 0.25


def point_distance(p: SingPoint, q: SingPoint) -> float:
    """Euclidean distance for affine points, chordal distance on directions at infinity."""
    if p.is_finite != q.is_finite:
        return math.inf
    if p.is_finite:
        (x0, y0), (x1, y1) = p.coords, q.coords
        return math.hypot(abs(x1 - x0), abs(y1 - y0))
    (a, b), (c, d) = p.direction, q.direction
    return abs(a * d - b * c) / (math.hypot(abs(a), abs(b)) * math.hypot(abs(c), abs(d)))


def min_separation(points: Sequence[SingPoint]) -> float:
    if len(points) < 2:
        return math.inf
    return min(point_distance(p, q) for p, q in combinations(points, 2))


def _match_block(
    base: Sequence[SingPoint], moved: Sequence[SingPoint], fraction: float, block: str
) -> list[SingPoint]:
    if len(base) != len(moved):
        raise LabelTrackingFailure(
            f"{block} singular point count changed from {len(base)} to {len(moved)}"
        )
    if not base:
        return []
    cost = np.array([[point_distance(p, q) for q in moved] for p in base])
    rows, cols = linear_sum_assignment(cost)
    radius = fraction * min_separation(base)
    worst = float(cost[rows, cols].max())
    if worst > radius:
        raise LabelTrackingFailure(
            f"{block} point moved {worst:.3g}, beyond the trust radius {radius:.3g}"
        )
    return [moved[c] for c in cols]


def track_labels(base: SingSet, moved: SingSet, fraction: float = TRUST_FRACTION) -> SingSet:
    """Reorder ``moved`` so each point carries the label of its ``base`` counterpart.

    Matching minimizes total displacement within each block (infinite and
    finite); no point may move farther than ``fraction`` times the smallest
    separation in its base block.

    Raises:
        LabelTrackingFailure: counts differ or a point moved beyond the trust radius
    """
    return SingSet(
        moved.degree,
        tuple(_match_block(base.finite, moved.finite, fraction, "finite")),
        tuple(_match_block(base.infinite, moved.infinite, fraction, "infinite")),
    )
