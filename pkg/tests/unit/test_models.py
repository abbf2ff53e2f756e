"""Unit tests for foliamod.core.models and foliamod.core.errors."""

import cmath

import numpy as np
import pytest

from foliamod.core.errors import (
    DegenerateSingularity,
    DicriticalAtInfinity,
    FoliamodError,
    InputRejected,
    NoConvergence,
    ParseError,
    SingularCountMismatch,
)
from foliamod.core.models import (
    AffineMap,
    HolonomyGerm,
    Line,
    LoopSpec,
    ModuliVector,
    RegularRep,
    SingPoint,
    SingSet,
)
from foliamod.numkernel.linalg import CMatrix
from foliamod.numkernel.poly import X


def _point(chart: str, coords: tuple, nu: object = 2.0) -> SingPoint:
    return SingPoint(
        chart=chart,  # type: ignore[arg-type]
        coords=coords,
        jacobian=CMatrix(2, 2, (1, 0, 0, 1)),
        eigenpair=(1 + 0j, 2 + 0j),
        nu=nu,  # type: ignore[arg-type]
        residual=0.0,
    )


class TestErrors:
    def test_codes_are_class_names(self) -> None:
        assert DicriticalAtInfinity("x").code == "DicriticalAtInfinity"
        assert NoConvergence("x").code == "NoConvergence"

    def test_exit_codes(self) -> None:
        assert FoliamodError.exit_code == 1
        assert NoConvergence.exit_code == 1
        assert InputRejected.exit_code == 2
        assert DicriticalAtInfinity.exit_code == 2

    def test_parse_error_position(self) -> None:
        err = ParseError("unexpected token", 3, 14)
        assert err.line == 3 and err.column == 14
        assert "line 3, column 14" in str(err)


class TestSingPoint:
    def test_direction_in_each_chart(self) -> None:
        assert _point("x", (0j, 2 + 0j)).direction == (1, 2)
        assert _point("y", (0j, 0j)).direction == (0, 1)

    def test_finite_point_has_no_direction(self) -> None:
        with pytest.raises(ValueError):
            _ = _point("affine", (1 + 0j, 2 + 0j)).direction

    def test_char_ratio(self) -> None:
        assert _point("x", (0j, 0j)).char_ratio == 0.5

    def test_chart_y_sorts_last(self) -> None:
        big = _point("x", (0j, 1e6 + 0j))
        vertical = _point("y", (0j, 0j))
        assert sorted([vertical, big], key=lambda p: p.sort_key)[-1] is vertical

    def test_degenerate_flag(self) -> None:
        assert _point("affine", (0j, 0j), nu=None).degenerate


class TestSingSet:
    def test_points_order_infinite_first(self) -> None:
        fin = _point("affine", (0j, 0j))
        inf = _point("x", (0j, 0j))
        sing = SingSet(1, (fin,), (inf, inf))
        assert sing.points[0] is inf
        assert sing.N == 3

    def test_count_mismatch(self) -> None:
        sing = SingSet(2, (_point("affine", (0j, 0j)),), ())
        with pytest.raises(SingularCountMismatch):
            sing.require_generic()

    def test_degenerate_point(self) -> None:
        fin = _point("affine", (0j, 0j), nu=None)
        inf = _point("x", (0j, 0j))
        with pytest.raises(DegenerateSingularity):
            SingSet(1, (fin,), (inf, inf)).require_generic()


class TestLine:
    def test_normalized_by_largest_coefficient(self) -> None:
        line = Line(0, 2, -4)
        assert line.gamma == 1
        assert line.beta == pytest.approx(-0.5)

    def test_through_points(self) -> None:
        line = Line.through((1 + 0j, 0j), (0j, 1 + 0j))
        assert line(0.25, 0.75) == pytest.approx(0)
        assert line.is_close(Line(1, 1, -1))

    def test_tangent_lies_along_line(self) -> None:
        line = Line(1, 1, -1)
        tx, ty = line.tangent
        assert line(0.5 + tx, 0.5 + ty) == pytest.approx(0)

    def test_degenerate_line(self) -> None:
        with pytest.raises(ValueError):
            Line(0, 0, 1)

    def test_polynomial(self) -> None:
        assert Line(0, 1, 0).polynomial(3, 5) != 0


class TestAffineMap:
    def test_inverse_round_trip(self) -> None:
        t = AffineMap(((1, 2), (0, 3)), (5, -1))
        z = (0.5 + 1j, -2 + 0j)
        back = t.inverse()(t(z))
        assert back[0] == pytest.approx(z[0])
        assert back[1] == pytest.approx(z[1])

    def test_then_composes(self) -> None:
        a = AffineMap(((2, 0), (0, 2)))
        b = AffineMap(((1, 0), (0, 1)), (1, 1))
        assert a.then(b)((1, 1)) == (3, 3)

    def test_singular_matrix_rejected(self) -> None:
        with pytest.raises(ValueError):
            AffineMap(((1, 2), (2, 4)))


class TestRegularRep:
    def test_pins_largest_coefficient(self) -> None:
        rep = RegularRep.from_coefficients(np.array([1, 4, 2, 0, 0, -1]))
        assert rep.pinned == 1
        assert rep.coefficients[1] == 1
        assert rep.coefficients[0] == pytest.approx(0.25)

    def test_projective_distance_ignores_scale(self) -> None:
        c = np.array([1, 2j, 3, -1, 0.5, 2])
        a = RegularRep.from_coefficients(c)
        b = RegularRep.from_coefficients(c * (2 - 1j), pinned=0)
        assert a.projective_distance(b) < 1e-12

    def test_projective_distance_resolves_tiny_angles(self) -> None:
        a = RegularRep.from_coefficients([1, 0, 0, 0, 0, 0])
        b = RegularRep.from_coefficients([1, 1e-10, 0, 0, 0, 0], pinned=0)
        assert a.projective_distance(b) == pytest.approx(1e-10, rel=1e-6)

    def test_wrong_length(self) -> None:
        with pytest.raises(ValueError):
            RegularRep.from_coefficients(np.ones(5))


class TestModuliVector:
    def test_blocks_and_canonical_order(self) -> None:
        mv = ModuliVector(
            ("inf0", "inf1", "fin0", "fin1"), (2 + 0j, -2 + 0j, 3 + 0j, 1 + 0j), 2
        )
        assert mv.infinite == (-2, 2)
        assert mv.finite == (1, 3)
        assert mv.canonical == (-2, 2, 1, 3)
        assert mv.total == 4
        assert mv.labeled["fin0"] == 3

    def test_shifted(self) -> None:
        mv = ModuliVector(("inf0", "fin0"), (1 + 0j, 2 + 0j), 1)
        assert mv.shifted((1, 1)).values == (2, 3)


class TestLoops:
    def test_start_and_reverse(self) -> None:
        loop = LoopSpec(1 + 1j, 0.5, base_angle=cmath.pi / 2)
        assert loop.start == pytest.approx(1 + 1.5j)
        assert loop.reversed().orientation == -1
        assert loop.reversed().start == pytest.approx(loop.start)

    def test_invalid_radius(self) -> None:
        with pytest.raises(ValueError):
            LoopSpec(0j, 0.0)

    def test_germ_reversed_keeps_base(self) -> None:
        germ = HolonomyGerm(X, X, LoopSpec(0j, 1.0), base=3 + 0j)
        assert germ.reversed().base == 3
        assert germ.reversed().loop.orientation == -1
