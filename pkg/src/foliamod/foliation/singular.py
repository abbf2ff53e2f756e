"""Singular points of a polynomial foliation, finite and at infinity.

Finite points come from resultant elimination in both variables: every pair
of an x-root and a y-root that nearly annihilates the field is polished by
Newton's method; candidates that a multiple root spreads out are merged and
the survivors are certified as simple zeros or marked degenerate. Points at
infinity are the roots of ``h(1, v)`` in the chart ``(1/x, y/x)``; the
direction ``[0:1]`` is read in the chart ``(1/y, x/y)``.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from foliamod.core.errors import (
    DegenerateSingularity,
    IdenticallyZeroResultant,
    NoConvergence,
    NonIsolatedSingularities,
    SingularJacobian,
)
from foliamod.core.models import SingPoint, SingSet
from foliamod.foliation.field import InfinityChart, VectorField
from foliamod.numkernel.linalg import CMatrix, MatrixLike, as_array, eig2
from foliamod.numkernel.newton import newton_polish
from foliamod.numkernel.poly import BiPoly
from foliamod.numkernel.resultant import resultant_eliminate
from foliamod.numkernel.roots import roots_univariate

logger = logging.getLogger(__name__)

Point = tuple[complex, complex]

DEGENERACY_TOL = 1e-10
CANDIDATE_TOL = 1e-3
DEDUPE_TOL = 1e-6
RESULTANT_ROOT_TOL = 1e-8
# perturbed roots of a resultant root of multiplicity ≤ 4 stay within this radius
CLUSTER_TOL = 1e-4
# Smale's α₀ = (13 − 3√17)/4
ALPHA_SIMPLE = 0.157


def nu_index(jacobian: MatrixLike, tol: float = DEGENERACY_TOL) -> complex:
    """Baum–Bott index ``trace²/det − 2`` of a linearization.

    Args:
        jacobian: 2×2 linear part at the singular point
        tol: Degeneracy threshold on ``|det| / ‖J‖²``

    Returns:
        ``λ/μ + μ/λ`` for the eigenvalues of ``jacobian``

    Raises:
        DegenerateSingularity: ``|det J| < tol·‖J‖²``
    """
    a = as_array(jacobian)
    det = complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    norm2 = float(np.sum(np.abs(a) ** 2))
    if norm2 == 0 or abs(det) < tol * norm2:
        raise DegenerateSingularity(f"|det J| = {abs(det):.3g} below {tol:g}·‖J‖²")
    trace = complex(a[0, 0] + a[1, 1])
    return trace * trace / det - 2


def _is_degenerate(jacobian: CMatrix, tol: float) -> bool:
    a = jacobian.to_array()
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    norm2 = float(np.sum(np.abs(a) ** 2))
    return norm2 == 0 or abs(det) < tol * norm2


def _residual_scale(v: VectorField, x: complex, y: complex) -> float:
    return v.scale * max(1.0, abs(x), abs(y)) ** v.degree


def _field_residual(v: VectorField, x: complex, y: complex) -> float:
    p, q = v(x, y)
    return float(np.hypot(abs(p), abs(q)))


def _finite_candidates(v: VectorField) -> list[tuple[complex, complex]]:
    try:
        rx = resultant_eliminate(v.P, v.Q, "y")
        ry = resultant_eliminate(v.P, v.Q, "x")
    except IdenticallyZeroResultant as exc:
        raise NonIsolatedSingularities(
            "P and Q share a common factor: singular set is not isolated"
        ) from exc
    xs = roots_univariate(rx, RESULTANT_ROOT_TOL) if rx.degree >= 1 else []
    ys = roots_univariate(ry, RESULTANT_ROOT_TOL) if ry.degree >= 1 else []
    logger.debug("resultant degrees %d (x) and %d (y)", rx.degree, ry.degree)
    return [
        (x, y)
        for x in xs
        for y in ys
        if _field_residual(v, x, y) <= CANDIDATE_TOL * _residual_scale(v, x, y)
    ]


def _cluster(points: list[Point], radius: float) -> list[list[Point]]:
    """Greedy grouping of points within ``radius · max(1, |x|, |y|)`` of a cluster's first member."""
    clusters: list[list[Point]] = []
    for x, y in points:
        size = max(1.0, abs(x), abs(y))
        for members in clusters:
            a, b = members[0]
            if abs(x - a) + abs(y - b) <= radius * size:
                members.append((x, y))
                break
        else:
            clusters.append([(x, y)])
    return clusters


def _centroid(members: list[Point]) -> Point:
    z = np.mean(np.asarray(members, dtype=complex), axis=0)
    return complex(z[0]), complex(z[1])


def _polish(
    v: VectorField, x0: complex, y0: complex, tol: float
) -> tuple[complex, complex, bool] | None:
    """Newton-refined point and whether Newton converged."""
    scale = _residual_scale(v, x0, y0)
    try:
        x, y = newton_polish((v.P, v.Q), (x0, y0), tol=min(tol, 1e-12) * scale)
        return x, y, True
    except (NoConvergence, SingularJacobian):
        # multiple roots stall Newton; keep the unpolished point if it is close
        if _field_residual(v, x0, y0) <= 1e-6 * scale:
            return x0, y0, False
        return None


def _higher_partials(v: VectorField) -> list[list[BiPoly]]:
    """All k-th partials of ``P`` and ``Q`` for ``k = 2..n``, weighted by multiplicity."""
    by_order: list[list[BiPoly]] = []
    current = [v.P, v.Q]
    for _ in range(2, v.degree + 1):
        nxt = []
        for f in current:
            nxt.extend((f.partial_x(), f.partial_y()))
        current = nxt
        by_order.append(current)
    return by_order


def simple_zero_alpha(v: VectorField, x: complex, y: complex) -> float:
    """Smale's ``α = β·γ`` for the zero of ``(P, Q)`` near ``(x, y)``.

    ``β`` is the Newton step length and ``γ`` bounds the higher derivatives
    against ``J⁻¹``; ``α < ALPHA_SIMPLE`` certifies a simple zero within
    ``2β``. ``inf`` when the Jacobian is exactly singular.
    """
    jac = v.jacobian(x, y).to_array()
    if jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0] == 0:
        return math.inf
    inverse = np.linalg.inv(jac)
    beta = float(np.linalg.norm(inverse @ np.array(v(x, y), dtype=complex)))
    inverse_norm = float(np.linalg.norm(inverse, 2))
    gamma = 0.0
    for k, partials in enumerate(_higher_partials(v), start=2):
        bound = sum(abs(f(x, y)) for f in partials)
        gamma = max(gamma, (inverse_norm * bound / math.factorial(k)) ** (1.0 / (k - 1)))
    return beta * gamma


def _finite_point(
    v: VectorField, x: complex, y: complex, degeneracy_tol: float, converged: bool
) -> SingPoint:
    jacobian = v.jacobian(x, y)
    degenerate = (
        not converged
        or _is_degenerate(jacobian, degeneracy_tol)
        or simple_zero_alpha(v, x, y) >= ALPHA_SIMPLE
    )
    return SingPoint(
        chart="affine",
        coords=(x, y),
        jacobian=jacobian,
        eigenpair=eig2(jacobian),
        nu=None if degenerate else nu_index(jacobian, degeneracy_tol),
        residual=_field_residual(v, x, y),
    )


def finite_singular_points(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> list[SingPoint]:
    """All isolated common zeros of ``P`` and ``Q`` in the affine chart.

    Candidates closer than ``CLUSTER_TOL`` (the spread of a multiple
    resultant root) are merged before and after polishing. A point is
    degenerate when Newton stalls on it, when ``|det J|`` is below
    ``degeneracy_tol·‖J‖²``, or when it is not certified as a simple zero.

    Args:
        v: The field
        tol: Relative residual each polished point must satisfy
        degeneracy_tol: Threshold below which a point is marked degenerate

    Returns:
        Points sorted by ``(Re x, Im x, Re y, Im y)``; degenerate points carry
        ``nu=None``

    Raises:
        NonIsolatedSingularities: ``P`` and ``Q`` share a factor
    """
    polished: list[Point] = []
    stalled: list[Point] = []
    for members in _cluster(_finite_candidates(v), CLUSTER_TOL):
        result = _polish(v, *_centroid(members), tol)
        if result is None:
            continue
        x, y, converged = result
        (polished if converged else stalled).append((x, y))

    points = []
    for members in _cluster(polished, DEDUPE_TOL):
        x, y = members[0]
        point = _finite_point(v, x, y, degeneracy_tol, converged=True)
        if point.degenerate:
            stalled.extend(members)
        else:
            points.append(point)
    for members in _cluster(stalled, CLUSTER_TOL):
        x, y = _centroid(members)
        points.append(_finite_point(v, x, y, degeneracy_tol, converged=False))

    points.sort(key=lambda p: p.sort_key)
    degenerate = sum(p.degenerate for p in points)
    if degenerate:
        logger.info("%d of %d finite singular points are degenerate", degenerate, len(points))
    return points


def _point_at_infinity(
    U: BiPoly, V: BiPoly, coordinate: complex, chart: InfinityChart, degeneracy_tol: float
) -> SingPoint:
    u_u, u_v = U.partial_x(), U.partial_y()
    v_u, v_v = V.partial_x(), V.partial_y()
    jacobian = CMatrix(
        2,
        2,
        (u_u(0, coordinate), u_v(0, coordinate), v_u(0, coordinate), v_v(0, coordinate)),
    )
    lam, mu = jacobian[0, 0], jacobian[1, 1]
    degenerate = _is_degenerate(jacobian, degeneracy_tol)
    return SingPoint(
        chart=chart,
        coords=(0j, complex(coordinate)),
        jacobian=jacobian,
        eigenpair=(lam, mu),
        nu=None if degenerate else nu_index(jacobian, degeneracy_tol),
        residual=abs(V(0, coordinate)),
    )


def infinite_singular_points(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> list[SingPoint]:
    """Singular points on the line at infinity.

    Args:
        v: The field
        tol: Root residual tolerance for ``h(1, v)``
        degeneracy_tol: Threshold below which a point is marked degenerate

    Returns:
        Points sorted by their chart coordinate ``v = y/x``, ``[0:1]`` last

    Raises:
        DicriticalAtInfinity: the line at infinity is not invariant
    """
    U, V = v.infinity_chart("x")
    h = v.infinity_polynomial("x")
    points = []
    if h.degree >= 1:
        for root in roots_univariate(h, tol):
            points.append(_point_at_infinity(U, V, root, "x", degeneracy_tol))
    if h.degree < v.degree + 1:
        Us, Vs = v.infinity_chart("y")
        points.append(_point_at_infinity(Us, Vs, 0j, "y", degeneracy_tol))
    points.sort(key=lambda p: p.sort_key)
    return points


def singular_points(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> SingSet:
    """Both singular sets; the line at infinity is checked first."""
    infinite = infinite_singular_points(v, tol, degeneracy_tol)
    finite = finite_singular_points(v, tol, degeneracy_tol)
    logger.debug("degree %d field: %d finite, %d infinite", v.degree, len(finite), len(infinite))
    return SingSet(v.degree, tuple(finite), tuple(infinite))


def char_ratio_at_infinity(
    v: VectorField, coordinate: complex, chart: InfinityChart = "x"
) -> tuple[complex, complex, complex]:
    """Eigen-data ``(λ, μ, λ/μ)`` at the point with chart coordinate ``coordinate``.

    ``μ`` is the eigenvalue tangent to the line at infinity.

    Raises:
        DegenerateSingularity: ``μ`` vanishes
    """
    U, V = v.infinity_chart(chart)
    point = _point_at_infinity(U, V, coordinate, chart, DEGENERACY_TOL)
    lam, mu = point.eigenpair
    if mu == 0:
        raise DegenerateSingularity(f"tangent eigenvalue vanishes at {chart}={coordinate}")
    return lam, mu, lam / mu
