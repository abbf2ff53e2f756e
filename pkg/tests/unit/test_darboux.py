"""Unit tests for foliamod.foliation.darboux."""

import pytest
import sympy as sp

from foliamod.core.errors import DegreeOverflow, InputRejected
from foliamod.foliation.darboux import (
    darboux_annihilator,
    darboux_two_factor,
    invariant_curve_remainder,
    is_curve_invariant,
    to_sympy,
)
from foliamod.foliation.field import VectorField
from foliamod.foliation.indices import verify_baum_bott
from foliamod.numkernel.poly import X, Y

CIRCLE = X**2 + Y**2 - 1
LINE = X - 2


class TestDarbouxTwoFactor:
    def test_degree(self) -> None:
        assert darboux_two_factor(CIRCLE, LINE, 2).degree == 2

    def test_annihilator_is_exactly_zero(self) -> None:
        assert darboux_annihilator(CIRCLE, LINE, 2 + 0.5j).is_zero

    def test_components_invariant(self) -> None:
        v = darboux_two_factor(CIRCLE, LINE, 3)
        assert is_curve_invariant(v, CIRCLE)
        assert is_curve_invariant(v, LINE)

    def test_indices_hold(self) -> None:
        v = darboux_two_factor(CIRCLE, LINE, 1.7)
        assert verify_baum_bott(v) < 1e-8

    def test_degree_overflow(self) -> None:
        with pytest.raises(DegreeOverflow):
            darboux_two_factor(X**3, LINE, 2)

    def test_zero_exponent(self) -> None:
        with pytest.raises(InputRejected):
            darboux_two_factor(CIRCLE, LINE, 0)


class TestInvariantCurve:
    def test_not_invariant(self, separable: VectorField) -> None:
        assert invariant_curve_remainder(separable, CIRCLE) > 1e-3
        assert not is_curve_invariant(separable, CIRCLE)

    def test_separable_axis(self, separable: VectorField) -> None:
        assert invariant_curve_remainder(separable, X * Y) == 0

    def test_to_sympy_is_exact(self) -> None:
        expr = to_sympy(X * 0.5 + Y**2)
        x, y = sp.symbols("x y")
        assert sp.expand(expr - (x / 2 + y**2)) == 0
