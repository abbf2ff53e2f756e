"""Dimension bookkeeping for the moduli map in degree n."""

from __future__ import annotations

from dataclasses import dataclass

from foliamod.core.errors import UnsupportedDegree


@dataclass(frozen=True)
class DimensionReport:
    degree: int
    dim_source: int
    dim_target_bound: int
    gap: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.dim_source, self.dim_target_bound, self.gap


def dimension_report(n: int) -> DimensionReport:
    """Dimension of the class of degree-``n`` fields modulo affine maps and scaling.

    The source has dimension ``(n+1)(n+2) − 7``; the image of the moduli
    map lies in a space of dimension at most ``n² + n − 1``; the difference
    is ``2n − 4``.
    """
    if n < 2:
        raise UnsupportedDegree(f"dimension report needs degree ≥ 2, got {n}")
    source = (n + 1) * (n + 2) - 7
    target = n * n + n - 1
    return DimensionReport(n, source, target, source - target)
