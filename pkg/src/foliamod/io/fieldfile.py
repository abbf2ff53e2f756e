"""JSON field files.

A field file holds a polynomial vector field as two coefficient lists in the
graded monomial order ``1, x, y, x², xy, y², …``, each coefficient an
``[re, im]`` pair::

    {"degree": 2,
     "P": [[0, 0], [-2, 0], [0, 0], [1, 0], [0, 0], [0, 0]],
     "Q": [[0, 0], [0, 0], [-2, 0], [0, 0], [0, 0], [1, 0]],
     "label": "separable"}
"""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from foliamod.core.errors import DimensionMismatch, ParseError
from foliamod.core.formatters import complex_pair, pair_complex
from foliamod.foliation.field import VectorField
from foliamod.numkernel.poly import BiPoly, n_monomials

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class FieldFile(BaseModel):
    """Schema of a field file."""

    model_config = ConfigDict(extra="forbid")

    degree: int = Field(ge=1)
    P: list[tuple[float, float]]
    Q: list[tuple[float, float]]
    label: Optional[str] = None
    seed: Optional[int] = None

    @field_validator("P", "Q")
    @classmethod
    def _finite(cls, pairs: list[tuple[float, float]]) -> list[tuple[float, float]]:
        for re, im in pairs:
            if not (math.isfinite(re) and math.isfinite(im)):
                raise ValueError("coefficients must be finite numbers")
        return pairs

    def check_lengths(self) -> None:
        expected = n_monomials(self.degree)
        for name, pairs in (("P", self.P), ("Q", self.Q)):
            if len(pairs) != expected:
                raise DimensionMismatch(
                    f"{name} has {len(pairs)} coefficients; degree {self.degree} needs {expected}"
                )

    def to_field(self) -> VectorField:
        self.check_lengths()
        return VectorField(
            BiPoly(tuple(pair_complex(c) for c in self.P)),
            BiPoly(tuple(pair_complex(c) for c in self.Q)),
        )

    @classmethod
    def from_field(
        cls, v: VectorField, label: Optional[str] = None, seed: Optional[int] = None
    ) -> FieldFile:
        n = max(v.degree, v.P.degree, v.Q.degree)
        return cls(
            degree=n,
            P=[tuple(complex_pair(c)) for c in v.P.with_degree(n).coeffs],
            Q=[tuple(complex_pair(c)) for c in v.Q.with_degree(n).coeffs],
            label=label,
            seed=seed,
        )


def load_field_text(text: str) -> FieldFile:
    """Parse and validate the text of a field file.

    Raises:
        ParseError: malformed JSON (with line and column) or schema violations
        DimensionMismatch: coefficient lists do not match the degree
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    try:
        document = FieldFile.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"{where}: {first['msg']}") from exc
    document.check_lengths()
    return document


def parse_field_file(path: PathLike) -> VectorField:
    """Read a field file into a :class:`VectorField`."""
    text = Path(path).read_text(encoding="utf-8")
    document = load_field_text(text)
    logger.debug("read degree-%d field from %s", document.degree, path)
    return document.to_field()


def dump_field(v: VectorField, label: Optional[str] = None, seed: Optional[int] = None) -> str:
    """Serialize ``v``; floats are written in shortest round-trip form."""
    document = FieldFile.from_field(v, label, seed)
    return json.dumps(document.model_dump(exclude_none=True), indent=2) + "\n"


def write_field_file(
    v: VectorField, path: PathLike, label: Optional[str] = None, seed: Optional[int] = None
) -> None:
    Path(path).write_text(dump_field(v, label, seed), encoding="utf-8")
