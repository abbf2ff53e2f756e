"""Invariant affine lines."""

from __future__ import annotations

import logging
from itertools import combinations

from foliamod.core.models import Line
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import finite_singular_points

logger = logging.getLogger(__name__)


def invariant_line_remainder(v: VectorField, line: Line) -> float:
    """Relative size of ``P·ℓ_x + Q·ℓ_y`` restricted to the line ``ℓ = 0``.

    The restriction vanishes identically exactly when ``ℓ`` divides
    ``P·ℓ_x + Q·ℓ_y``.
    """
    alpha, beta, gamma = line.alpha, line.beta, line.gamma
    r = v.P * alpha + v.Q * beta
    if r.is_zero:
        return 0.0
    if abs(beta) >= abs(alpha):
        slope, intercept = -alpha / beta, -gamma / beta
        restricted = r.restrict_x(slope, intercept)
    else:
        slope, intercept = -beta / alpha, -gamma / alpha
        restricted = r.restrict_y(slope, intercept)
    size = (1.0 + abs(slope) + abs(intercept)) ** v.degree
    return restricted.scale / (v.scale * max(abs(alpha), abs(beta)) * size)


def is_line_invariant(v: VectorField, line: Line, tol: float = 1e-10) -> bool:
    """True iff the line is a union of leaves and singular points of ``v``."""
    return invariant_line_remainder(v, line) <= tol


def invariant_lines(v: VectorField, tol: float = 1e-10) -> list[Line]:
    """Invariant lines through pairs of finite singular points."""
    points = finite_singular_points(v, tol)
    found: list[Line] = []
    for p, q in combinations(points, 2):
        (x0, y0), (x1, y1) = p.coords, q.coords
        if abs(x1 - x0) + abs(y1 - y0) <= 1e-8:
            continue
        line = Line.through(p.coords, q.coords)
        if is_line_invariant(v, line, tol) and not any(line.is_close(f) for f in found):
            found.append(line)
    logger.debug("%d invariant lines through %d finite points", len(found), len(points))
    return found
