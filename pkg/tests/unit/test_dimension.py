"""Unit tests for foliamod.moduli.dimension."""

import pytest

from foliamod.core.errors import UnsupportedDegree
from foliamod.moduli.dimension import dimension_report


class TestDimensionReport:
    @pytest.mark.parametrize(
        "n, expected",
        [(2, (5, 5, 0)), (3, (13, 11, 2)), (4, (23, 19, 4))],
    )
    def test_counts(self, n: int, expected: tuple[int, int, int]) -> None:
        assert dimension_report(n).as_tuple() == expected

    def test_gap_is_2n_minus_4(self) -> None:
        for n in range(2, 10):
            assert dimension_report(n).gap == 2 * n - 4

    def test_degree_one_rejected(self) -> None:
        with pytest.raises(UnsupportedDegree):
            dimension_report(1)
