"""Unit tests for foliamod.moduli.mapping and foliamod.moduli.tracking."""

import numpy as np
import pytest

from foliamod.core.errors import LabelTrackingFailure, SingularCountMismatch
from foliamod.core.models import AffineMap, ModuliVector, SingSet
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import singular_points
from foliamod.moduli.mapping import (
    moduli_distance,
    moduli_vector,
    split_assignment,
)
from foliamod.moduli.tracking import track_labels
from foliamod.numkernel.poly import X, Y


class TestModuliVector:
    def test_separable(self, separable: VectorField) -> None:
        mv = moduli_vector(separable)
        assert mv.labels == ("inf0", "inf1", "inf2", "fin0", "fin1", "fin2", "fin3")
        assert list(mv.values) == pytest.approx([2, -2, 2, 2, -2, -2, 2])
        assert list(mv.ratios) == pytest.approx([1, -1, 1])
        assert mv.total == pytest.approx(2)
        assert mv.ratio_sum == pytest.approx(1)

    def test_invariant_under_scaling(self, random_quadratic: VectorField) -> None:
        a = moduli_vector(random_quadratic)
        b = moduli_vector(random_quadratic.scaled(-0.5 + 2j))
        assert max(moduli_distance(a, b)) < 1e-9

    def test_invariant_under_affine_maps(self, random_quadratic: VectorField) -> None:
        moved = random_quadratic.transformed(AffineMap(((3, 1), (-1, 2j)), (0.5, 4)))
        a = moduli_vector(random_quadratic)
        b = moduli_vector(moved)
        assert max(moduli_distance(a, b)) < 1e-8

    def test_nongeneric_rejected(self) -> None:
        with pytest.raises(SingularCountMismatch):
            moduli_vector(VectorField(X**2, Y + Y**2))


class TestDistances:
    def test_joint_ignores_blocks(self) -> None:
        a = ModuliVector(("inf0", "fin0"), (1 + 0j, 2 + 0j), 1)
        b = ModuliVector(("inf0", "fin0"), (2 + 0j, 1 + 0j), 1)
        assert moduli_distance(a, b) == pytest.approx((0, 1))

    def test_self_distance(self, random_quadratic: VectorField) -> None:
        mv = moduli_vector(random_quadratic)
        assert moduli_distance(mv, mv) == (0.0, 0.0)

    def test_split_assignment_identity(self, separable: VectorField) -> None:
        mv = moduli_vector(separable)
        order = split_assignment(mv, mv)
        assert np.allclose(mv.array[order], mv.array)


class TestTrackLabels:
    def test_restores_order(self, random_quadratic: VectorField) -> None:
        base = singular_points(random_quadratic)
        shuffled = SingSet(base.degree, base.finite[::-1], base.infinite[::-1])
        tracked = track_labels(base, shuffled)
        assert [p.coords for p in tracked.points] == [p.coords for p in base.points]

    def test_count_change(self, random_quadratic: VectorField) -> None:
        base = singular_points(random_quadratic)
        with pytest.raises(LabelTrackingFailure):
            track_labels(base, SingSet(base.degree, base.finite[:3], base.infinite))

    def test_points_moved_too_far(self, separable: VectorField, three_lines: VectorField) -> None:
        with pytest.raises(LabelTrackingFailure):
            track_labels(singular_points(separable), singular_points(three_lines))
