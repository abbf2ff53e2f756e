"""Genericity diagnostics for a field."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from foliamod.foliation.field import VectorField
from foliamod.foliation.indices import baum_bott_target
from foliamod.foliation.singular import DEGENERACY_TOL, singular_points


@dataclass(frozen=True)
class GenericityReport:
    """Counts and index sums of a field; reports only, decides nothing."""

    degree: int
    n_finite: int
    n_infinite: int
    nondegenerate: bool
    infinite_ratio_sum: complex
    nonreal_infinite_ratios: bool
    baum_bott_sum: Optional[complex]

    @property
    def counts_generic(self) -> bool:
        return self.n_finite == self.degree**2 and self.n_infinite == self.degree + 1

    @property
    def is_generic(self) -> bool:
        return self.counts_generic and self.nondegenerate

    @property
    def baum_bott_residual(self) -> Optional[float]:
        if self.baum_bott_sum is None:
            return None
        return abs(self.baum_bott_sum - baum_bott_target(self.degree))


def genericity_report(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> GenericityReport:
    """Summarize the genericity conditions the index identities rely on.

    ``nonreal_infinite_ratios`` is the hyperbolicity condition at infinity
    (every characteristic number there is non-real); it is paired with
    density of leaves in the literature but is only reported here.
    """
    sing = singular_points(v, tol, degeneracy_tol)
    nondegenerate = not any(p.degenerate for p in sing.points)
    ratios = [p.char_ratio for p in sing.infinite if p.char_ratio is not None]
    return GenericityReport(
        degree=v.degree,
        n_finite=len(sing.finite),
        n_infinite=len(sing.infinite),
        nondegenerate=nondegenerate,
        infinite_ratio_sum=complex(sum(ratios)),
        nonreal_infinite_ratios=all(abs(r.imag) > tol * max(1.0, abs(r)) for r in ratios),
        baum_bott_sum=complex(sum(p.nu for p in sing.points)) if nondegenerate else None,
    )
