"""The Darboux family ``(xy + x + y)(x − ky)^α = c`` and its image under the moduli map."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional

import numpy as np
import pandas as pd

from foliamod.core.errors import FoliamodError
from foliamod.core.models import ModuliVector
from foliamod.foliation.darboux import darboux_two_factor
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import DEGENERACY_TOL, singular_points
from foliamod.moduli.jacobian import moduli_jacobian, tracked_nu
from foliamod.moduli.mapping import moduli_distance, moduli_vector
from foliamod.moduli.regular import from_regular, to_regular_representative
from foliamod.numkernel.poly import Scalar, X, Y

logger = logging.getLogger(__name__)

DARBOUX_QUADRIC = X * Y + X + Y


def darboux_member(alpha: Scalar, k: Scalar) -> VectorField:
    """The member with parameter ``k``: ``f = xy + x + y``, ``g = x − k·y``."""
    return darboux_two_factor(DARBOUX_QUADRIC, X - Y * k, alpha)


def family_direction(
    alpha: Scalar,
    k: Scalar,
    h: float = 1e-5,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> float:
    """``‖dν/dk‖ / σ₁``: the moduli derivative along ``k`` relative to ``‖dμ‖``.

    Indices are tracked by continuity from the member at ``k``; ``σ₁`` is
    the largest singular value of the moduli Jacobian at its regular
    representative.
    """
    member = darboux_member(alpha, k)
    base = singular_points(member, tol, degeneracy_tol).require_generic()
    plus = tracked_nu(base, darboux_member(alpha, complex(k) + h), tol, degeneracy_tol)
    minus = tracked_nu(base, darboux_member(alpha, complex(k) - h), tol, degeneracy_tol)
    derivative = (plus - minus) / (2 * h)
    rep, _ = to_regular_representative(member, tol=tol, degeneracy_tol=degeneracy_tol)
    sigma = moduli_jacobian(rep, h, tol, degeneracy_tol).singular_values[0]
    return float(np.linalg.norm(derivative) / sigma) if sigma > 0 else float("inf")


@dataclass(frozen=True)
class ScanMember:
    k: complex
    moduli: Optional[ModuliVector] = None
    rank: Optional[int] = None
    k_direction: Optional[float] = None
    error: Optional[str] = None
    message: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class DarbouxScan:
    """Scan of the Darboux family over a grid of ``k`` values."""

    alpha: complex
    members: tuple[ScanMember, ...]
    max_distance: float = 0.0
    max_split_distance: float = 0.0
    degenerate: tuple[complex, ...] = field(default_factory=tuple)

    def rows(self) -> list[dict[str, Any]]:
        rows = []
        for m in self.members:
            row: dict[str, Any] = {"k": m.k, "rank": m.rank, "k_direction": m.k_direction}
            if m.moduli is not None:
                for idx, value in enumerate(m.moduli.canonical):
                    row[f"nu{idx}"] = value
            row["error"] = m.error
            rows.append(row)
        return rows

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows())


def darboux_family_scan(
    alpha: Scalar,
    k_grid: Iterable[Scalar],
    h: float = 1e-5,
    tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> DarbouxScan:
    """Moduli vectors, Jacobian ranks and k-direction norms along the family.

    Members that leave the generic class are recorded with their error code
    and skipped; the distances are taken over the remaining members.
    """
    members = []
    for k in k_grid:
        k = complex(k)
        try:
            member = darboux_member(alpha, k)
            rep, _ = to_regular_representative(member, tol=tol, degeneracy_tol=degeneracy_tol)
            moduli = moduli_vector(from_regular(rep), tol, degeneracy_tol)
            rank = moduli_jacobian(rep, h, tol, degeneracy_tol).rank
            direction = family_direction(alpha, k, h, tol, degeneracy_tol)
            members.append(ScanMember(k, moduli, rank, direction))
        except FoliamodError as exc:
            logger.warning("Darboux member k=%s rejected: %s", k, exc.code)
            members.append(ScanMember(k, error=exc.code, message=str(exc)))

    good = [m.moduli for m in members if m.moduli is not None]
    joint = split = 0.0
    for a, b in combinations(good, 2):
        d_joint, d_split = moduli_distance(a, b)
        joint, split = max(joint, d_joint), max(split, d_split)
    return DarbouxScan(
        alpha=complex(alpha),
        members=tuple(members),
        max_distance=joint,
        max_split_distance=split,
        degenerate=tuple(m.k for m in members if not m.ok),
    )
