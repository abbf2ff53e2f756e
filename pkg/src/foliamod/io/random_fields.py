"""Seeded random fields.

Coefficients are i.i.d. standard complex normal ``(a + ib)/√2`` with ``a, b``
drawn from ``numpy.random.default_rng`` (PCG64). ``P`` is drawn before ``Q``;
within each the real parts come first, then the imaginary parts. Batches use
the children of ``SeedSequence(seed)``, so sample ``i`` does not depend on
the batch size.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from foliamod.core.models import RegularRep
from foliamod.foliation.field import VectorField
from foliamod.numkernel.poly import BiPoly, n_monomials

SeedLike = Union[int, np.random.SeedSequence]


def standard_complex_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    re = rng.standard_normal(size)
    im = rng.standard_normal(size)
    return (re + 1j * im) / np.sqrt(2)


def random_field(seed: SeedLike, degree: int = 2) -> VectorField:
    """A field whose ``P`` and ``Q`` have standard complex normal coefficients."""
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    rng = np.random.default_rng(seed)
    size = n_monomials(degree)
    p = standard_complex_normal(rng, size)
    q = standard_complex_normal(rng, size)
    return VectorField(BiPoly(tuple(p)), BiPoly(tuple(q)))


def random_fields(seed: int, count: int, degree: int = 2) -> list[VectorField]:
    return [random_field(child, degree) for child in np.random.SeedSequence(seed).spawn(count)]


def random_regular_rep(seed: SeedLike) -> RegularRep:
    """Six standard complex normal coefficients on the regular basis."""
    rng = np.random.default_rng(seed)
    return RegularRep.from_coefficients(standard_complex_normal(rng, 6))
