"""Index identities: Baum–Bott sums and Camacho–Sad sums along invariant lines."""

from __future__ import annotations

import logging
from typing import Literal, Union

import numpy as np

from foliamod.core.errors import DegenerateSingularity, LineNotInvariant
from foliamod.core.models import Line, SingPoint
from foliamod.foliation.field import VectorField
from foliamod.foliation.lines import is_line_invariant
from foliamod.foliation.singular import (
    DEGENERACY_TOL,
    finite_singular_points,
    infinite_singular_points,
    singular_points,
)
from foliamod.numkernel.linalg import CMatrix, eig2

logger = logging.getLogger(__name__)

LineOrInfinity = Union[Line, Literal["infinity"]]

ON_LINE_TOL = 1e-7


def baum_bott_target(n: int) -> int:
    """``Σν`` over all singular points of a generic degree-``n`` field."""
    return (n + 2) ** 2 - 2 * (n * n + n + 1)


def verify_baum_bott(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> float:
    """``|Σν − T(n)|`` over the ``n² + n + 1`` singular points.

    Raises:
        SingularCountMismatch: the singular set is not generic
        DegenerateSingularity: some point has a vanishing determinant
    """
    sing = singular_points(v, tol, degeneracy_tol).require_generic()
    total = sum(p.nu for p in sing.points if p.nu is not None)
    residual = abs(total - baum_bott_target(v.degree))
    logger.debug("Baum-Bott sum %s, residual %.3g", total, residual)
    return float(residual)


def _require_nondegenerate(points: list[SingPoint], where: str) -> None:
    bad = [p for p in points if p.degenerate]
    if bad:
        raise DegenerateSingularity(f"degenerate singular point on {where} at {bad[0].coords}")


def _ratio_along(jacobian: CMatrix, tangent: tuple[complex, complex], tol: float) -> complex:
    a = jacobian.to_array()
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if abs(det) < tol * float(np.sum(np.abs(a) ** 2)):
        raise DegenerateSingularity("degenerate singular point on the line")
    lam, mu = eig2(jacobian, tangent=tangent)
    return lam / mu


def line_ratios(
    v: VectorField, line: Line, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> list[complex]:
    """Characteristic numbers ``λ/μ`` along an invariant line, ``μ`` tangent to it.

    Finite points on the line come first (in their sorted order), the point
    where the line meets infinity last.
    """
    if not is_line_invariant(v, line, tol):
        raise LineNotInvariant(f"line {line} is not invariant")
    ratios = []
    for p in finite_singular_points(v, tol, degeneracy_tol):
        x, y = p.coords
        if abs(line(x, y)) <= ON_LINE_TOL * max(1.0, abs(x), abs(y)):
            ratios.append(_ratio_along(p.jacobian, line.tangent, degeneracy_tol))

    if abs(line.beta) > 1e-12:
        chart, coordinate = "x", -line.alpha / line.beta
        tangent = (line.beta, -line.gamma)
    else:
        chart, coordinate = "y", 0j
        tangent = (line.alpha, -line.gamma)
    U, V = v.infinity_chart(chart)
    jacobian = CMatrix(
        2,
        2,
        tuple(
            d(0, coordinate)
            for d in (U.partial_x(), U.partial_y(), V.partial_x(), V.partial_y())
        ),
    )
    ratios.append(_ratio_along(jacobian, tangent, degeneracy_tol))
    return ratios


def verify_camacho_sad_line(
    v: VectorField,
    line: LineOrInfinity = "infinity",
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> float:
    """``|Σ λ/μ − 1|`` over the singular points on an invariant line.

    Args:
        v: The field
        line: An affine :class:`Line`, or ``"infinity"``
        tol: Invariance and root tolerance
        degeneracy_tol: Threshold below which a point is degenerate

    Returns:
        Residual of the Camacho–Sad relation (self-intersection 1)

    Raises:
        LineNotInvariant: the affine line is not invariant
        DegenerateSingularity: a point on the line is degenerate
    """
    if isinstance(line, str):
        points = infinite_singular_points(v, tol, degeneracy_tol)
        _require_nondegenerate(points, "the line at infinity")
        total = sum(p.char_ratio for p in points if p.char_ratio is not None)
    else:
        total = sum(line_ratios(v, line, tol, degeneracy_tol))
    return float(abs(total - 1))
