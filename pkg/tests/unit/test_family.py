"""Unit tests for foliamod.moduli.family."""

import pytest

from foliamod.foliation.darboux import darboux_annihilator, is_curve_invariant
from foliamod.moduli.family import (
    DARBOUX_QUADRIC,
    darboux_family_scan,
    darboux_member,
    family_direction,
)
from foliamod.moduli.mapping import moduli_distance, moduli_vector
from foliamod.numkernel.poly import X, Y

K_GRID = (0.3, 0.7, 1.1 + 0.2j)


class TestDarbouxMember:
    def test_curves_invariant(self) -> None:
        v = darboux_member(2, 0.7)
        assert is_curve_invariant(v, DARBOUX_QUADRIC)
        assert is_curve_invariant(v, X - Y * 0.7)

    def test_exact_annihilation(self) -> None:
        assert darboux_annihilator(DARBOUX_QUADRIC, X - Y * 0.3, 2).is_zero

    def test_members_share_indices(self) -> None:
        a = moduli_vector(darboux_member(2, 0.3))
        b = moduli_vector(darboux_member(2, 1.1 + 0.2j))
        assert moduli_distance(a, b)[1] < 1e-6

    def test_k_direction_in_kernel(self) -> None:
        assert family_direction(2, 0.7) < 1e-5


class TestDarbouxFamilyScan:
    def test_blow_down(self) -> None:
        scan = darboux_family_scan(2, K_GRID)
        assert len(scan.members) == 3
        assert all(m.ok for m in scan.members)
        assert scan.max_split_distance < 1e-6
        assert scan.degenerate == ()

    def test_rows_and_frame(self) -> None:
        scan = darboux_family_scan(2, K_GRID[:2])
        rows = scan.rows()
        assert [row["k"] for row in rows] == pytest.approx([0.3, 0.7])
        assert "nu6" in rows[0]
        assert list(scan.to_frame()["rank"]) == [m.rank for m in scan.members]

    def test_rejected_member_is_recorded(self) -> None:
        # k = 0 makes g = x, whose direction at infinity meets f there
        scan = darboux_family_scan(2, [0.0, 0.7])
        assert scan.degenerate == (0j,)
        assert scan.members[0].error is not None
        assert scan.members[1].ok
