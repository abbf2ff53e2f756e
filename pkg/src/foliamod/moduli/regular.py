"""Regular representatives: quadratic fields normalized by three singular points.

An affine map sends three finite singular points to the anchors
``(0,0), (2,0), (0,2)``. Both components of the transformed field then lie in
the span of the quadratics vanishing there, ``x(x+y−2), y(x+y−2), xy``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations, permutations
from typing import Optional

import numpy as np

from foliamod.core.errors import (
    CollinearSingularities,
    TooFewFiniteSingularities,
    UnsupportedDegree,
)
from foliamod.core.models import AffineMap, RegularRep
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import DEGENERACY_TOL, finite_singular_points
from foliamod.numkernel.poly import BiPoly, X, Y

logger = logging.getLogger(__name__)

Point = tuple[complex, complex]

ANCHORS: tuple[Point, Point, Point] = ((0j, 0j), (2 + 0j, 0j), (0j, 2 + 0j))

_SIDE = X + Y - 2
BASIS: tuple[BiPoly, BiPoly, BiPoly] = (X * _SIDE, Y * _SIDE, X * Y)
_BASIS_MATRIX = np.column_stack([b.with_degree(2).array for b in BASIS])

COLLINEAR_TOL = 1e-10
TIE_TOL = 1e-9


def _area(p0: Point, p1: Point, p2: Point) -> complex:
    return (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])


def _sort_key(p: Point) -> tuple[float, float, float, float]:
    return (p[0].real, p[0].imag, p[1].real, p[1].imag)


def select_anchor_triple(points: Sequence[Point]) -> tuple[Point, Point, Point]:
    """Pick the triple spanning the largest triangle ``|det|``.

    Ties within a relative ``1e-9`` go to the lexicographically first triple
    of the sorted points.

    Raises:
        TooFewFiniteSingularities: fewer than three points
        CollinearSingularities: every triple is collinear
    """
    if len(points) < 3:
        raise TooFewFiniteSingularities(
            f"need three finite nondegenerate singular points, found {len(points)}"
        )
    ordered = sorted(((complex(x), complex(y)) for x, y in points), key=_sort_key)
    best: Optional[tuple[Point, Point, Point]] = None
    best_area = 0.0
    for triple in combinations(ordered, 3):
        area = abs(_area(*triple))
        if area > best_area * (1 + TIE_TOL):
            best, best_area = triple, area
    scale = max(max(1.0, abs(x), abs(y)) for x, y in ordered)
    if best is None or best_area <= COLLINEAR_TOL * scale * scale:
        raise CollinearSingularities("every triple of finite singular points is collinear")
    return best


def anchor_map(triple: Sequence[Point]) -> AffineMap:
    """The affine map ``T(z) = A(z − p₀)`` sending the triple to the anchors in order."""
    p0, p1, p2 = (np.asarray(p, dtype=complex) for p in triple)
    frame = np.column_stack([p1 - p0, p2 - p0])
    if abs(np.linalg.det(frame)) <= COLLINEAR_TOL * max(1.0, float(np.max(np.abs(frame)))) ** 2:
        raise CollinearSingularities("anchor triple is collinear")
    a = 2.0 * np.linalg.inv(frame)
    return AffineMap(tuple(map(tuple, a)), tuple(-a @ p0))


def _closest_to_identity(triple: tuple[Point, Point, Point]) -> tuple[AffineMap, tuple[Point, ...]]:
    best: Optional[tuple[float, AffineMap, tuple[Point, ...]]] = None
    for order in permutations(triple):
        affine = anchor_map(order)
        distance = float(np.linalg.norm(affine.array - np.eye(2)) + np.linalg.norm(affine.offset))
        if best is None or distance < best[0] - TIE_TOL:
            best = (distance, affine, order)
    assert best is not None
    return best[1], best[2]


def _fit(component: BiPoly) -> np.ndarray:
    target = component.with_degree(2).array
    coeffs, *_ = np.linalg.lstsq(_BASIS_MATRIX, target, rcond=None)
    return coeffs


def regular_rep_for_triple(
    v: VectorField, triple: Sequence[Point], pinned: Optional[int] = None
) -> tuple[RegularRep, AffineMap]:
    """Regular representative sending ``triple`` (in order) to the anchors.

    Args:
        v: Quadratic field with singular points at ``triple``
        triple: Three non-collinear finite singular points
        pinned: Coefficient index to fix at 1 (default: largest magnitude)

    Returns:
        The representative and the affine map used
    """
    if v.degree != 2:
        raise UnsupportedDegree(f"regular representatives need degree 2, got {v.degree}")
    affine = anchor_map(triple)
    w = v.transformed(affine)
    coefficients = np.concatenate([_fit(w.P), _fit(w.Q)])
    return RegularRep.from_coefficients(coefficients, pinned), affine


def nondegenerate_finite_points(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> list[Point]:
    return [p.coords for p in finite_singular_points(v, tol, degeneracy_tol) if not p.degenerate]


def to_regular_representative(
    v: VectorField,
    pinned: Optional[int] = None,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> tuple[RegularRep, AffineMap]:
    """Normalize a quadratic field to its regular representative.

    The anchor triple is the one of largest triangle area; among its six
    orderings the one whose affine map is closest to the identity is used,
    so an already regular field maps by the identity.

    Raises:
        TooFewFiniteSingularities: fewer than three nondegenerate finite points
        CollinearSingularities: every candidate triple is collinear
        UnsupportedDegree: the field is not quadratic
    """
    triple = select_anchor_triple(nondegenerate_finite_points(v, tol, degeneracy_tol))
    if v.degree != 2:
        raise UnsupportedDegree(f"regular representatives need degree 2, got {v.degree}")
    _, ordered = _closest_to_identity(triple)
    logger.debug("anchor triple %s", ordered)
    return regular_rep_for_triple(v, ordered, pinned)


def all_regular_reps(
    v: VectorField,
    pinned: Optional[int] = None,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> list[RegularRep]:
    """Representatives for every ordered non-collinear triple of finite points."""
    points = nondegenerate_finite_points(v, tol, degeneracy_tol)
    reps = []
    for triple in permutations(points, 3):
        try:
            rep, _ = regular_rep_for_triple(v, triple, pinned)
        except CollinearSingularities:
            continue
        reps.append(rep)
    return reps


def field_from_coefficients(coefficients: Sequence[complex] | np.ndarray) -> VectorField:
    """The field with anchor-basis coefficients ``(p₁, p₂, p₃, q₁, q₂, q₃)``."""
    c = np.asarray(coefficients, dtype=complex)
    p = _BASIS_MATRIX @ c[:3]
    q = _BASIS_MATRIX @ c[3:]
    return VectorField(BiPoly(tuple(p)), BiPoly(tuple(q)))


def from_regular(rep: RegularRep) -> VectorField:
    """Realize ``P = Σ pᵢ·bᵢ``, ``Q = Σ qᵢ·bᵢ`` on the anchor basis."""
    return field_from_coefficients(rep.coefficients)
