"""Derivative of the moduli map on regular representatives.

Central differences over the six anchor-basis coefficients. Singular points
of each perturbed field are matched to the base points by continuity, never
by re-sorting, since sorted orders jump where indices collide.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from foliamod.core.models import JacobianReport, RegularRep, SingSet
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import DEGENERACY_TOL, singular_points
from foliamod.moduli.regular import field_from_coefficients
from foliamod.moduli.tracking import track_labels
from foliamod.numkernel.linalg import CMatrix, singular_values

logger = logging.getLogger(__name__)

MIN_STEP = 1e-7
MAX_STEP = 1e-4
RANK_FLOOR = 1e-7


def numerical_rank(
    values: Sequence[float] | np.ndarray, rel_tol: float = 1e-6, abs_tol: float = 0.0
) -> int:
    """Number of singular values at least ``max(rel_tol·σ₁, abs_tol)``."""
    s = np.asarray(values, dtype=float)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s >= max(rel_tol * s[0], abs_tol)))


def tracked_nu(
    base: SingSet, field: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> np.ndarray:
    """Indices of ``field`` ordered like the points of ``base``."""
    moved = track_labels(base, singular_points(field, tol, degeneracy_tol).require_generic())
    return np.array([complex(p.nu) for p in moved.points], dtype=complex)


def moduli_derivative(
    coefficients: np.ndarray,
    base: SingSet,
    h: float = 1e-5,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> np.ndarray:
    """``N × 6`` central-difference derivative, rows in the order of ``base``."""
    c = np.asarray(coefficients, dtype=complex)
    columns = []
    for k in range(c.size):
        e = np.zeros_like(c)
        e[k] = h
        plus = tracked_nu(base, field_from_coefficients(c + e), tol, degeneracy_tol)
        minus = tracked_nu(base, field_from_coefficients(c - e), tol, degeneracy_tol)
        columns.append((plus - minus) / (2 * h))
    return np.column_stack(columns)


def moduli_jacobian(
    rep: RegularRep,
    h: float = 1e-5,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
    rel_tol: float = 1e-6,
    abs_tol: float = RANK_FLOOR,
) -> JacobianReport:
    """Derivative of the moduli map at ``rep`` with its singular values and rank.

    Args:
        rep: Regular representative with seven nondegenerate singular points
        h: Central-difference step in ``[1e-7, 1e-4]``
        tol: Root and residual tolerance for the enumerations
        degeneracy_tol: Degeneracy threshold
        rel_tol: Relative rank threshold
        abs_tol: Absolute floor below which singular values do not count

    Returns:
        JacobianReport whose ``radial_residual`` is ``‖dμ·c‖`` for the
        coefficient vector ``c`` (the scaling direction)

    Raises:
        LabelTrackingFailure: a perturbed point left its trust radius
        SingularCountMismatch, DegenerateSingularity: ``rep`` is not generic
    """
    if not MIN_STEP <= h <= MAX_STEP:
        raise ValueError(f"step {h:g} outside [{MIN_STEP:g}, {MAX_STEP:g}]")
    c = rep.coefficients
    base = singular_points(field_from_coefficients(c), tol, degeneracy_tol).require_generic()
    matrix = moduli_derivative(c, base, h, tol, degeneracy_tol)
    sigma = singular_values(matrix)
    rank = numerical_rank(sigma, rel_tol, abs_tol)
    radial = float(np.linalg.norm(matrix @ c))
    logger.debug("moduli Jacobian rank %d, sigma %s", rank, np.array2string(sigma, precision=3))
    return JacobianReport(
        matrix=CMatrix.from_array(matrix),
        singular_values=tuple(float(s) for s in sigma),
        rank=rank,
        radial_residual=radial,
        step=h,
    )
