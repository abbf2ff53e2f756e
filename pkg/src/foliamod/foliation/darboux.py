"""Darboux fields built from invariant algebraic curves.

The field annihilating ``F = f·g^α`` is read off the one-form
``ω = g·df + α·f·dg = A dx + B dy`` as ``v = (B, −A)``. Exact checks of
invariance run in rational arithmetic through sympy.
"""

from __future__ import annotations

import logging

import sympy as sp

from foliamod.core.errors import DegreeOverflow, InputRejected
from foliamod.foliation.field import VectorField
from foliamod.numkernel.poly import BiPoly, Scalar, monomials

logger = logging.getLogger(__name__)

_x, _y = sp.symbols("x y")


def exact_number(z: Scalar) -> sp.Expr:
    """The binary value of a complex float as an exact Gaussian rational."""
    z = complex(z)
    return sp.Rational(z.real) + sp.I * sp.Rational(z.imag)


def to_sympy(p: BiPoly) -> sp.Expr:
    """Exact sympy expression in ``x, y`` for a bivariate polynomial."""
    expr = sp.Integer(0)
    for k, (i, j) in enumerate(monomials(p.degree)):
        c = p.coeffs[k]
        if c != 0:
            expr += exact_number(c) * _x**i * _y**j
    return expr


def _coefficient_sizes(expr: sp.Expr) -> list[float]:
    if expr == 0:
        return []
    poly = sp.Poly(expr, _x, _y)
    return [abs(complex(sp.N(c, 20))) for c in poly.coeffs()]


def darboux_two_factor(f: BiPoly, g: BiPoly, alpha: Scalar) -> VectorField:
    """Field whose leaves are the level sets of ``f·g^α``.

    Args:
        f: Quadratic polynomial
        g: Linear polynomial
        alpha: Nonzero exponent

    Returns:
        ``v = (B, −A)`` for ``ω = g·df + α·f·dg = A dx + B dy``

    Raises:
        DegreeOverflow: ``f`` is not at most quadratic or ``g`` not at most linear
    """
    if f.effective_degree > 2 or g.effective_degree > 1:
        raise DegreeOverflow(
            f"expected deg f ≤ 2 and deg g ≤ 1, got {f.effective_degree} and "
            f"{g.effective_degree}"
        )
    if complex(alpha) == 0:
        raise InputRejected("the exponent alpha must be nonzero")
    a = g * f.partial_x() + f * g.partial_x() * alpha
    b = g * f.partial_y() + f * g.partial_y() * alpha
    return VectorField(b, -a)


def darboux_annihilator(f: BiPoly, g: BiPoly, alpha: Scalar) -> sp.Poly:
    """``g·(P f_x + Q f_y) + α·f·(P g_x + Q g_y)`` for the Darboux field, exactly.

    The field is rebuilt from ``f``, ``g`` and ``α`` in Gaussian rationals,
    so the result is the zero polynomial with no rounding.
    """
    fs, gs, a = to_sympy(f), to_sympy(g), exact_number(alpha)
    big_a = gs * sp.diff(fs, _x) + a * fs * sp.diff(gs, _x)
    big_b = gs * sp.diff(fs, _y) + a * fs * sp.diff(gs, _y)
    p, q = big_b, -big_a
    expr = gs * (p * sp.diff(fs, _x) + q * sp.diff(fs, _y)) + a * fs * (
        p * sp.diff(gs, _x) + q * sp.diff(gs, _y)
    )
    return sp.Poly(sp.expand(expr), _x, _y)


def invariant_curve_remainder(v: VectorField, f: BiPoly) -> float:
    """Relative remainder of ``P f_x + Q f_y`` on division by ``f``.

    ``{f}`` is a Gröbner basis of the principal ideal it generates, so the
    remainder is zero exactly when ``f`` divides the derivative of ``f``
    along ``v``.
    """
    fs = to_sympy(f)
    derivative = sp.expand(to_sympy(v.P) * sp.diff(fs, _x) + to_sympy(v.Q) * sp.diff(fs, _y))
    sizes = _coefficient_sizes(derivative)
    if not sizes or max(sizes) == 0:
        return 0.0
    _, remainder = sp.div(derivative, fs, _x, _y)
    rem_sizes = _coefficient_sizes(sp.expand(remainder))
    if not rem_sizes:
        return 0.0
    return max(rem_sizes) / max(sizes)


def is_curve_invariant(v: VectorField, f: BiPoly, tol: float = 1e-10) -> bool:
    """True iff the curve ``f = 0`` is invariant for ``v``."""
    remainder = invariant_curve_remainder(v, f)
    logger.debug("invariant-curve remainder %.3g", remainder)
    return remainder <= tol
