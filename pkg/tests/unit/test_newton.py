"""Unit tests for foliamod.numkernel.newton."""

import pytest

from foliamod.core.errors import NoConvergence, SingularJacobian
from foliamod.numkernel.newton import newton_polish
from foliamod.numkernel.poly import X, Y


class TestNewtonPolish:
    def test_converges_to_nearby_root(self) -> None:
        x, y = newton_polish((X**2 - X * 2, Y**2 - Y * 2), (2.01, -0.02))
        assert x == pytest.approx(2, abs=1e-12)
        assert y == pytest.approx(0, abs=1e-12)

    def test_complex_root(self) -> None:
        # x² + 1 = 0, y − x = 0
        x, y = newton_polish((X**2 + 1, Y - X), (0.1 + 0.9j, 0.9j))
        assert x == pytest.approx(1j, abs=1e-12)
        assert y == pytest.approx(1j, abs=1e-12)

    def test_singular_jacobian(self) -> None:
        with pytest.raises(SingularJacobian):
            # parallel lines: the Jacobian is singular everywhere
            newton_polish((X + Y, X * 2 + Y * 2 + 1), (0.3, 0.1))

    def test_iteration_cap(self) -> None:
        # x² + 1 has no real root; Newton from a real start stays real and wanders
        with pytest.raises((NoConvergence, SingularJacobian)):
            newton_polish((X**2 + 1, Y), (0.5, 0.0), max_iterations=5)
