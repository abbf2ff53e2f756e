"""Polynomial vector fields in the affine chart and their charts at infinity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from foliamod.core.errors import DicriticalAtInfinity, UnsupportedDegree, ZeroPolynomial
from foliamod.core.models import AffineMap
from foliamod.numkernel.linalg import CMatrix
from foliamod.numkernel.poly import DROP_TOL, BiPoly, Scalar, UniPoly, monomials

InfinityChart = Literal["x", "y"]


@dataclass(frozen=True, eq=False)
class VectorField:
    """The field ``P ∂/∂x + Q ∂/∂y``; its degree is the larger effective degree."""

    P: BiPoly
    Q: BiPoly

    def __post_init__(self) -> None:
        if self.P.is_zero and self.Q.is_zero:
            raise ZeroPolynomial("both components of the field are zero")
        if self.degree < 1:
            raise UnsupportedDegree("a constant field has no singular points")

    @classmethod
    def from_coefficients(
        cls, p: tuple[Scalar, ...] | list[Scalar], q: tuple[Scalar, ...] | list[Scalar]
    ) -> VectorField:
        return cls(BiPoly(tuple(p)), BiPoly(tuple(q)))

    @cached_property
    def degree(self) -> int:
        return max(self.P.effective_degree, self.Q.effective_degree)

    @property
    def scale(self) -> float:
        return max(self.P.scale, self.Q.scale)

    def __call__(self, x: Scalar, y: Scalar) -> tuple[complex, complex]:
        return self.P(x, y), self.Q(x, y)

    @cached_property
    def partials(self) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
        return (
            self.P.partial_x(),
            self.P.partial_y(),
            self.Q.partial_x(),
            self.Q.partial_y(),
        )

    def jacobian(self, x: Scalar, y: Scalar) -> CMatrix:
        px, py, qx, qy = self.partials
        return CMatrix(2, 2, (px(x, y), py(x, y), qx(x, y), qy(x, y)))

    def scaled(self, c: Scalar) -> VectorField:
        return VectorField(self.P * c, self.Q * c)

    def swapped(self) -> VectorField:
        """The field ``(Q(y, x), P(y, x))``, i.e. the roles of x and y exchanged."""
        return VectorField(self.Q.swap_variables(), self.P.swap_variables())

    def transformed(self, affine: AffineMap) -> VectorField:
        """Push-forward ``w ↦ M·v(T⁻¹w)`` under ``T(z) = M·z + shift``."""
        inverse = affine.inverse()
        p = self.P.compose_affine(inverse.array, inverse.offset)
        q = self.Q.compose_affine(inverse.array, inverse.offset)
        m = affine.array
        return VectorField(p * m[0, 0] + q * m[0, 1], p * m[1, 0] + q * m[1, 1])

    def top_form(self) -> BiPoly:
        """The binary form ``h = x·Qₙ − y·Pₙ``."""
        n = self.degree
        return BiPoly.linear(1, 0) * self.Q.homogeneous_part(n) - BiPoly.linear(
            0, 1
        ) * self.P.homogeneous_part(n)

    def is_dicritical(self) -> bool:
        h = self.top_form()
        return h.scale <= DROP_TOL * self.scale

    def infinity_chart(self, chart: InfinityChart = "x") -> tuple[BiPoly, BiPoly]:
        """The field ``(U, V)`` in the chart ``(1/x, y/x)``, or ``(1/y, x/y)`` for ``"y"``.

        Raises:
            DicriticalAtInfinity: the line at infinity is not invariant
        """
        if chart == "y":
            return self.swapped().infinity_chart("x")
        if self.is_dicritical():
            raise DicriticalAtInfinity("top-degree parts are radial: x·Qₙ − y·Pₙ ≡ 0")
        n = self.degree
        p_star = _homogenized(self.P, n)
        q_star = _homogenized(self.Q, n)
        u = BiPoly.linear(1, 0)
        v = BiPoly.linear(0, 1)
        return -(u * p_star), q_star - v * p_star

    def infinity_polynomial(self, chart: InfinityChart = "x") -> UniPoly:
        """``V(0, v)``, the dehomogenized top form whose roots are the points at infinity."""
        _, big_v = self.infinity_chart(chart)
        return UniPoly(tuple(big_v.coefficient(0, j) for j in range(big_v.degree + 1)))


def _homogenized(p: BiPoly, n: int) -> BiPoly:
    """``uⁿ·p(1/u, v/u)`` as a polynomial in ``(u, v)``."""
    terms: dict[tuple[int, int], complex] = {}
    for k, (i, j) in enumerate(monomials(p.degree)):
        c = p.coeffs[k]
        if c == 0 or i + j > n:
            continue
        terms[(n - i - j, j)] = c
    return BiPoly.from_terms(terms, degree=n)


def infinity_chart_field(v: VectorField) -> tuple[BiPoly, BiPoly]:
    """``(U, V)`` in the chart ``(u, v) = (1/x, y/x)``.

    ``U = −u·P*``, ``V = Q* − v·P*`` with ``P* = uⁿ·P(1/u, v/u)``; the line
    ``u = 0`` is invariant and ``V(0, v) = h(1, v)``.

    Raises:
        DicriticalAtInfinity: ``h ≡ 0``
    """
    return v.infinity_chart("x")
