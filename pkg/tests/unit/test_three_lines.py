"""Unit tests for foliamod.foliation.three_lines."""

import pytest

from foliamod.core.errors import InputRejected
from foliamod.foliation.indices import line_ratios
from foliamod.foliation.singular import infinite_singular_points
from foliamod.foliation.three_lines import (
    LINES,
    three_line_eigendata,
    three_line_field,
)


class TestThreeLineField:
    def test_first_integral_level_sets(self) -> None:
        # v annihilates d(log F) with F = x^a y^b (x + y − 1)^c
        a, b, c = 1.5, -0.5 + 1j, 2.0
        v = three_line_field(a, b, c)
        x, y = 0.3 + 0.2j, -0.7
        p, q = v(x, y)
        ell = x + y - 1
        dlog = (a / x + c / ell) * p + (b / y + c / ell) * q
        assert abs(dlog) < 1e-12

    def test_all_zero_rejected(self) -> None:
        with pytest.raises(InputRejected):
            three_line_field(0, 0, 0)

    def test_origin_jacobian(self) -> None:
        v = three_line_field(2, 3, 5)
        assert v.jacobian(0, 0).to_array().tolist() == [[-3, 0], [0, 2]]


class TestThreeLineEigendata:
    def test_closed_form_matches_line_ratios(self) -> None:
        a, b, c = 1.0, 2.0, 0.5 + 1j
        data = three_line_eigendata(a, b, c)
        v = three_line_field(a, b, c)
        for key, line in LINES.items():
            assert line_ratios(v, line) == pytest.approx(list(data.line_ratios[key]))

    def test_infinity_ratios(self) -> None:
        a, b, c = 1.0, 2.0, 3.0
        data = three_line_eigendata(a, b, c)
        ratios = [p.char_ratio for p in infinite_singular_points(three_line_field(a, b, c))]
        assert sorted(data.infinity_ratios.values(), key=abs) == pytest.approx(
            sorted(ratios, key=abs)
        )
        assert sum(data.infinity_ratios.values()) == pytest.approx(1)

    def test_signature_separates_parameters(self) -> None:
        first = three_line_eigendata(1, 2, 3).signature()
        second = three_line_eigendata(1, 2, 4).signature()
        assert len(first) == 6
        assert first != pytest.approx(second)
