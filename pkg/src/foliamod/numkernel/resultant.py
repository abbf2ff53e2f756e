"""Resultant elimination for pairs of bivariate polynomials.

The resultant is a polynomial of degree at most ``deg P · deg Q`` in the
remaining variable. It is recovered by evaluating the Sylvester determinant
at roots of unity and interpolating with a discrete Fourier transform.
"""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np

from foliamod.core.errors import IdenticallyZeroResultant
from foliamod.numkernel.poly import BiPoly, UniPoly

logger = logging.getLogger(__name__)

Variable = Literal["x", "y"]

ZERO_TOL = 1e-9


def sylvester_matrix(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Sylvester matrix of two coefficient vectors given in descending order."""
    m, k = len(p) - 1, len(q) - 1
    size = m + k
    s = np.zeros((size, size), dtype=complex)
    for row in range(k):
        s[row, row : row + m + 1] = p
    for row in range(m):
        s[k + row, row : row + k + 1] = q
    return s


def _formal_degree(columns: list[UniPoly]) -> int:
    scale = max(c.scale for c in columns)
    degree = 0
    for j, c in enumerate(columns):
        if c.scale > 1e-12 * scale:
            degree = j
    return degree


def resultant_eliminate(p: BiPoly, q: BiPoly, eliminated: Variable = "y") -> UniPoly:
    """Eliminate one variable from ``P = Q = 0``.

    Args:
        p: First polynomial
        q: Second polynomial
        eliminated: Variable to eliminate; the result is a polynomial in the other

    Returns:
        The resultant as a univariate polynomial

    Raises:
        IdenticallyZeroResultant: the resultant vanishes identically
    """
    if eliminated == "x":
        p, q = p.swap_variables(), q.swap_variables()
    elif eliminated != "y":
        raise ValueError(f"unknown variable {eliminated!r}")

    p_cols = p.y_coefficients()
    q_cols = q.y_coefficients()
    m = _formal_degree(p_cols)
    k = _formal_degree(q_cols)
    if m == 0 and k == 0:
        return UniPoly((1.0,))

    bound = max(p.effective_degree * q.effective_degree, 1)
    samples = np.exp(2j * np.pi * np.arange(bound + 1) / (bound + 1))
    values = np.empty(bound + 1, dtype=complex)
    for s, x0 in enumerate(samples):
        pv = np.array([c(x0) for c in p_cols[: m + 1]])[::-1]
        qv = np.array([c(x0) for c in q_cols[: k + 1]])[::-1]
        values[s] = np.linalg.det(sylvester_matrix(pv, qv))
    coeffs = np.fft.fft(values) / (bound + 1)

    scale = max(p.scale, 1e-300) ** k * max(q.scale, 1e-300) ** m
    if float(np.max(np.abs(coeffs))) <= ZERO_TOL * scale:
        raise IdenticallyZeroResultant(
            f"resultant eliminating {eliminated} vanishes identically"
        )
    logger.debug(
        "resultant eliminating %s: Sylvester size %d, degree bound %d",
        eliminated,
        m + k,
        bound,
    )
    return UniPoly(tuple(coeffs)).trimmed()
