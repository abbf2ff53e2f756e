"""Shared pytest fixtures for the foliamod test suite."""

from pathlib import Path

import pytest

from foliamod.core.models import RegularRep
from foliamod.foliation.field import VectorField
from foliamod.foliation.three_lines import three_line_field
from foliamod.io.fieldfile import write_field_file
from foliamod.io.random_fields import random_field, random_fields
from foliamod.moduli.regular import to_regular_representative
from foliamod.numkernel.poly import X, Y


@pytest.fixture
def separable() -> VectorField:
    """v₀ = (x² − 2x, y² − 2y): finite points at the corners of [0,2]²."""
    return VectorField(X**2 - X * 2, Y**2 - Y * 2)


@pytest.fixture
def three_lines() -> VectorField:
    """Three-line field with a = b = c = 1 (first integral xy(x + y − 1))."""
    return three_line_field(1, 1, 1)


@pytest.fixture
def dicritical() -> VectorField:
    """Radial top part: (x + x², y + xy)."""
    return VectorField(X + X**2, Y + X * Y)


@pytest.fixture
def random_quadratic() -> VectorField:
    """A single seeded random quadratic field."""
    return random_field(7, 2)


@pytest.fixture
def random_quadratics() -> list[VectorField]:
    """Ten seeded random quadratic fields."""
    return random_fields(2024, 10, 2)


@pytest.fixture
def generic_rep(random_quadratic: VectorField) -> RegularRep:
    """Regular representative of the seeded random quadratic."""
    rep, _ = to_regular_representative(random_quadratic)
    return rep


@pytest.fixture
def separable_file(tmp_path: Path, separable: VectorField) -> Path:
    """The separable field written to a temporary field file."""
    path = tmp_path / "separable.json"
    write_field_file(separable, path, label="separable")
    return path
