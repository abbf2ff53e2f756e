"""Complex-number encoding for JSON and CSV output."""

from collections.abc import Sequence
from typing import Any, Union

import numpy as np

Number = Union[int, float, complex]


def complex_pair(z: Number) -> list[float]:
    """Encode a complex number as a two-element ``[re, im]`` list.

    Args:
        z: Number to encode

    Returns:
        ``[re, im]`` with plain Python floats
    """
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_complex(pair: Sequence[float]) -> complex:
    """Decode a ``[re, im]`` pair."""
    if len(pair) != 2:
        raise ValueError(f"expected [re, im], got {list(pair)!r}")
    return complex(float(pair[0]), float(pair[1]))


def to_jsonable(value: Any) -> Any:
    """Recursively convert numpy scalars/arrays and complex numbers for JSON.

    Complex numbers become ``[re, im]`` pairs; real floats are kept as floats.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pair(complex(value))
    return value


def split_complex_columns(row: dict[str, Any]) -> dict[str, Any]:
    """Flatten complex entries of a table row into ``<name>_re``/``<name>_im``."""
    flat: dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat[f"{key}_re"] = float(value.real)
            flat[f"{key}_im"] = float(value.imag)
        else:
            flat[key] = value
    return flat
