"""Unit tests for foliamod.numkernel.resultant."""

import numpy as np
import pytest

from foliamod.core.errors import IdenticallyZeroResultant
from foliamod.numkernel.poly import X, Y
from foliamod.numkernel.resultant import resultant_eliminate, sylvester_matrix
from foliamod.numkernel.roots import roots_univariate


class TestSylvesterMatrix:
    def test_shape_and_layout(self) -> None:
        s = sylvester_matrix(np.array([1, 2, 3]), np.array([4, 5]))
        assert s.shape == (3, 3)
        assert list(s[0]) == [1, 2, 3]
        assert list(s[1]) == [4, 5, 0]
        assert list(s[2]) == [0, 4, 5]

    def test_common_root_kills_determinant(self) -> None:
        # (z − 1)(z − 2) and (z − 1)(z + 3)
        s = sylvester_matrix(np.array([1, -3, 2]), np.array([1, 2, -3]))
        assert abs(np.linalg.det(s)) < 1e-12


class TestResultantEliminate:
    def test_roots_are_projections_of_common_zeros(self) -> None:
        # circle x² + y² = 5 and line y = x + 1 meet at (1, 2) and (−2, −1)
        p = X**2 + Y**2 - 5
        q = Y - X - 1
        rx = resultant_eliminate(p, q, "y")
        xs = sorted(roots_univariate(rx), key=lambda z: z.real)
        assert xs[0] == pytest.approx(-2, abs=1e-9)
        assert xs[1] == pytest.approx(1, abs=1e-9)
        ry = resultant_eliminate(p, q, "x")
        ys = sorted(roots_univariate(ry), key=lambda z: z.real)
        assert ys[0] == pytest.approx(-1, abs=1e-9)
        assert ys[1] == pytest.approx(2, abs=1e-9)

    def test_separable_system(self) -> None:
        rx = resultant_eliminate(X**2 - X * 2, Y**2 - Y * 2, "y")
        assert rx.degree == 4
        for x in (0, 2):
            assert abs(rx(x)) < 1e-9 * rx.scale

    def test_common_factor_is_rejected(self) -> None:
        common = X + Y - 1
        with pytest.raises(IdenticallyZeroResultant):
            resultant_eliminate(common * X, common * (Y + 2), "y")

    def test_unknown_variable(self) -> None:
        with pytest.raises(ValueError):
            resultant_eliminate(X, Y, "z")  # type: ignore[arg-type]
