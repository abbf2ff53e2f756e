"""Core module public API."""

from foliamod.core.errors import FoliamodError, InputRejected
from foliamod.core.formatters import (
    complex_pair,
    pair_complex,
    split_complex_columns,
    to_jsonable,
)
from foliamod.core.models import (
    AffineMap,
    HolonomyGerm,
    IntegratorSettings,
    JacobianReport,
    Line,
    LoopSpec,
    ModuliVector,
    RegularRep,
    SingPoint,
    SingSet,
)

__all__ = [
    "complex_pair",
    "pair_complex",
    "split_complex_columns",
    "to_jsonable",
    "AffineMap",
    "FoliamodError",
    "HolonomyGerm",
    "InputRejected",
    "IntegratorSettings",
    "JacobianReport",
    "Line",
    "LoopSpec",
    "ModuliVector",
    "RegularRep",
    "SingPoint",
    "SingSet",
]
