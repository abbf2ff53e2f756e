"""Simultaneous (Aberth–Ehrlich) root finding with a companion-matrix fallback."""

from __future__ import annotations

import logging

import numpy as np

from foliamod.core.errors import NoConvergence, ZeroPolynomial
from foliamod.numkernel.poly import UniPoly

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
_EPS = np.finfo(float).eps


def root_residual_ok(p: UniPoly, z: complex, tol: float) -> bool:
    """Check ``|p(z)| ≤ tol · max|coeff| · max(1, |z|)^deg``."""
    bound = tol * p.scale * max(1.0, abs(z)) ** p.degree
    return abs(p(z)) <= bound


def _initial_guesses(monic: np.ndarray) -> np.ndarray:
    n = len(monic) - 1
    radius = abs(monic[0]) ** (1.0 / n) if monic[0] != 0 else 0.0
    # Cauchy-style upper bound keeps the circle inside the root annulus
    upper = 1.0 + float(np.max(np.abs(monic[:-1])))
    radius = min(max(radius, 1e-3), upper)
    angles = 2.0 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def _aberth(monic: np.ndarray) -> tuple[np.ndarray, bool]:
    """Run Aberth iterations on an ascending monic coefficient array."""
    descending = monic[::-1]
    derivative = np.polyder(descending)
    z = _initial_guesses(monic)
    n = len(z)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range(MAX_ITERATIONS):
            pz = np.polyval(descending, z)
            dz = np.polyval(derivative, z)
            ratio = pz / dz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            repulsion = inv.sum(axis=1)
            step = ratio / (1.0 - ratio * repulsion)
            if not np.all(np.isfinite(step)):
                return z, False
            z = z - step
            if np.all(np.abs(step) <= 64 * _EPS * (1.0 + np.abs(z))):
                return z, True
    return z, n == 0


def _companion_roots(monic: np.ndarray) -> np.ndarray:
    n = len(monic) - 1
    companion = np.zeros((n, n), dtype=complex)
    companion[1:, :-1] = np.eye(n - 1)
    companion[:, -1] = -monic[:-1]
    return np.linalg.eigvals(companion)


def _newton_refine(p: UniPoly, z: np.ndarray, steps: int = 3) -> np.ndarray:
    dp = p.derivative()
    refined = []
    for root in z:
        for _ in range(steps):
            d = dp(root)
            if d == 0:
                break
            candidate = root - p(root) / d
            if abs(p(candidate)) >= abs(p(root)):
                break
            root = candidate
        refined.append(root)
    return np.asarray(refined, dtype=complex)


def roots_univariate(p: UniPoly, tol: float = 1e-10) -> list[complex]:
    """Return all ``deg(p)`` roots of ``p`` (with multiplicity).

    Roots are sorted by ``(Re, Im)``. Exact zero roots (vanishing low-order
    coefficients) are returned exactly.

    Args:
        p: Polynomial whose roots are wanted
        tol: Relative residual bound each root must satisfy

    Returns:
        List of complex roots

    Raises:
        ZeroPolynomial: all coefficients below the drop tolerance
        NoConvergence: neither Aberth nor the companion fallback met the bound
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot find roots of the zero polynomial")
    p = p.trimmed()
    n = p.degree
    if n == 0:
        return []

    coeffs = p.array
    zeros = 0
    while zeros < n and coeffs[zeros] == 0:
        zeros += 1
    reduced = coeffs[zeros:]
    found: list[complex] = [0j] * zeros

    if len(reduced) > 1:
        monic = reduced / reduced[-1]
        z, converged = _aberth(monic)
        if not converged or not all(root_residual_ok(p, r, tol) for r in z):
            logger.debug("Aberth iteration fell back to the companion matrix")
            z = _newton_refine(p, _companion_roots(monic))
        found.extend(complex(r) for r in z)

    bad = [r for r in found if not root_residual_ok(p, r, tol)]
    if bad:
        raise NoConvergence(
            f"{len(bad)} of {n} roots miss the residual bound {tol:g} "
            f"after {MAX_ITERATIONS} iterations"
        )
    return sorted(found, key=lambda r: (r.real, r.imag))
