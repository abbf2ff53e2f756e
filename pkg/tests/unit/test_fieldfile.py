"""Unit tests for foliamod.io.fieldfile and foliamod.io.random_fields."""

import json
from pathlib import Path

import numpy as np
import pytest

from foliamod.core.errors import DimensionMismatch, ParseError
from foliamod.foliation.field import VectorField
from foliamod.io.fieldfile import (
    FieldFile,
    dump_field,
    load_field_text,
    parse_field_file,
)
from foliamod.io.random_fields import (
    random_field,
    random_fields,
    random_regular_rep,
    standard_complex_normal,
)
from foliamod.numkernel.poly import X


def _coeffs(v: VectorField) -> np.ndarray:
    return np.concatenate([v.P.array, v.Q.array])


class TestFieldFile:
    def test_read_written_file(self, separable_file: Path, separable: VectorField) -> None:
        v = parse_field_file(separable_file)
        assert np.allclose(_coeffs(v), _coeffs(separable))

    def test_dump_layout(self, separable: VectorField) -> None:
        data = json.loads(dump_field(separable, label="separable"))
        assert data["degree"] == 2
        assert data["P"][1] == [-2.0, 0.0]
        assert data["Q"][5] == [1.0, 0.0]
        assert data["label"] == "separable"
        assert "seed" not in data

    def test_complex_coefficients_preserved(self, random_quadratic: VectorField) -> None:
        v = load_field_text(dump_field(random_quadratic, seed=7)).to_field()
        assert np.array_equal(_coeffs(v), _coeffs(random_quadratic))

    def test_nominal_degree_kept(self) -> None:
        v = VectorField((X**2).with_degree(3), X)
        assert FieldFile.from_field(v).degree == 3

    def test_malformed_json_position(self) -> None:
        with pytest.raises(ParseError) as info:
            load_field_text('{"degree": 2,\n "P": [}')
        assert info.value.line == 2
        assert info.value.column is not None

    def test_unknown_key(self) -> None:
        text = json.dumps({"degree": 1, "P": [[0, 0]] * 3, "Q": [[0, 0]] * 3, "extra": 1})
        with pytest.raises(ParseError, match="extra"):
            load_field_text(text)

    def test_non_finite_coefficient(self) -> None:
        text = '{"degree": 1, "P": [[NaN, 0], [1, 0], [0, 0]], "Q": [[0, 0], [0, 0], [1, 0]]}'
        with pytest.raises(ParseError):
            load_field_text(text)

    def test_degree_zero(self) -> None:
        with pytest.raises(ParseError, match="degree"):
            load_field_text('{"degree": 0, "P": [[1, 0]], "Q": [[0, 0]]}')

    def test_length_mismatch(self) -> None:
        text = json.dumps({"degree": 2, "P": [[0, 0]] * 6, "Q": [[0, 0]] * 5})
        with pytest.raises(DimensionMismatch, match="Q has 5"):
            load_field_text(text)


class TestRandomFields:
    def test_deterministic(self) -> None:
        assert np.array_equal(_coeffs(random_field(7)), _coeffs(random_field(7)))

    def test_seeds_differ(self) -> None:
        assert not np.allclose(_coeffs(random_field(1)), _coeffs(random_field(2)))

    def test_batch_prefix_stable(self) -> None:
        short = random_fields(2024, 3)
        long = random_fields(2024, 10)
        for a, b in zip(short, long):
            assert np.array_equal(_coeffs(a), _coeffs(b))

    def test_degree(self) -> None:
        v = random_field(3, degree=3)
        assert v.degree == 3
        assert len(v.P.coeffs) == 10

    def test_degree_zero_rejected(self) -> None:
        with pytest.raises(ValueError):
            random_field(3, degree=0)

    def test_unit_variance(self) -> None:
        z = standard_complex_normal(np.random.default_rng(0), 20_000)
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1, abs=0.05)

    def test_regular_rep_pinned(self) -> None:
        rep = random_regular_rep(5)
        assert rep.coefficients[rep.pinned] == 1
        assert np.max(np.abs(rep.coefficients)) == pytest.approx(1)
