"""Unit tests for foliamod.foliation.indices and genericity."""

import pytest

from foliamod.core.errors import InputRejected, LineNotInvariant, SingularCountMismatch
from foliamod.core.models import Line
from foliamod.foliation.field import VectorField
from foliamod.foliation.genericity import genericity_report
from foliamod.foliation.indices import (
    baum_bott_target,
    line_ratios,
    verify_baum_bott,
    verify_camacho_sad_line,
)
from foliamod.foliation.singular import singular_points
from foliamod.io.random_fields import random_field, random_fields
from foliamod.numkernel.poly import X, Y


class TestBaumBott:
    def test_targets(self) -> None:
        assert [baum_bott_target(n) for n in (1, 2, 3)] == [3, 2, -1]

    def test_separable(self, separable: VectorField) -> None:
        assert verify_baum_bott(separable) < 1e-10

    def test_three_lines(self, three_lines: VectorField) -> None:
        assert verify_baum_bott(three_lines) < 1e-10

    def test_random_quadratics(self, random_quadratics: list[VectorField]) -> None:
        residuals = [verify_baum_bott(v) for v in random_quadratics]
        assert max(residuals) < 1e-8

    def test_random_cubic(self) -> None:
        assert verify_baum_bott(random_field(11, 3)) < 1e-7

    def test_nongeneric_rejected(self) -> None:
        # the origin absorbs two finite points
        with pytest.raises(SingularCountMismatch):
            verify_baum_bott(VectorField(X**2 + Y**2, Y + X * Y))


class TestCamachoSad:
    def test_infinity_separable(self, separable: VectorField) -> None:
        assert verify_camacho_sad_line(separable) < 1e-12

    def test_infinity_random(self, random_quadratics: list[VectorField]) -> None:
        for v in random_quadratics:
            assert verify_camacho_sad_line(v, "infinity") < 1e-9

    def test_line_ratios_separable(self, separable: VectorField) -> None:
        ratios = line_ratios(separable, Line(0, 1, 0))
        assert ratios == pytest.approx([1, -1, 1])

    def test_three_line_field_each_line(self, three_lines: VectorField) -> None:
        for line in (Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, -1)):
            assert verify_camacho_sad_line(three_lines, line) < 1e-10

    def test_three_line_ratios_on_axis(self, three_lines: VectorField) -> None:
        # points on y = 0: (0,0), (1,0), then [1:0]
        assert line_ratios(three_lines, Line(0, 1, 0)) == pytest.approx([-1, -1, 3])

    def test_vertical_line_uses_chart_y(self, separable: VectorField) -> None:
        assert verify_camacho_sad_line(separable, Line(1, 0, -2)) < 1e-12

    def test_not_invariant(self, separable: VectorField) -> None:
        with pytest.raises(LineNotInvariant):
            verify_camacho_sad_line(separable, Line(1, 1, -2))


class TestGenericity:
    def test_separable(self, separable: VectorField) -> None:
        report = genericity_report(separable)
        assert report.is_generic
        assert not report.nonreal_infinite_ratios
        assert report.infinite_ratio_sum == pytest.approx(1)
        assert report.baum_bott_residual == pytest.approx(0, abs=1e-10)

    def test_random(self, random_quadratic: VectorField) -> None:
        report = genericity_report(random_quadratic)
        assert report.counts_generic
        assert report.nonreal_infinite_ratios

    def test_degenerate(self) -> None:
        report = genericity_report(VectorField(X**2, Y + Y**2))
        assert report.n_finite == 2
        assert not report.nondegenerate
        assert not report.is_generic
        assert report.baum_bott_residual is None


class TestBatches:
    def test_quadratic_batch(self) -> None:
        rejected = 0
        for v in random_fields(20240601, 200, 2):
            try:
                sing = singular_points(v).require_generic()
                bb = verify_baum_bott(v)
                cs = verify_camacho_sad_line(v)
            except InputRejected:
                rejected += 1
                continue
            assert (len(sing.finite), len(sing.infinite)) == (4, 3)
            assert bb < 1e-8
            assert cs < 1e-8
        assert rejected <= 4

    def test_cubic_batch(self) -> None:
        rejected = 0
        for v in random_fields(20240602, 20, 3):
            try:
                residual = verify_baum_bott(v)
            except InputRejected:
                rejected += 1
                continue
            assert residual < 1e-7
        assert rejected <= 1
