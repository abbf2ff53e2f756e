"""The moduli (Baum–Bott) map and distances between its values."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from foliamod.core.models import ModuliVector, SingSet
from foliamod.foliation.field import VectorField
from foliamod.foliation.singular import DEGENERACY_TOL, singular_points


def moduli_vector_from(sing: SingSet) -> ModuliVector:
    """Index vector of an already enumerated generic singular set."""
    sing.require_generic()
    labels = tuple(f"inf{k}" for k in range(len(sing.infinite))) + tuple(
        f"fin{k}" for k in range(len(sing.finite))
    )
    values = tuple(complex(p.nu) for p in sing.points if p.nu is not None)
    ratios = tuple(complex(p.char_ratio) for p in sing.infinite if p.char_ratio is not None)
    return ModuliVector(labels, values, len(sing.infinite), ratios)


def moduli_vector(
    v: VectorField, tol: float = 1e-10, degeneracy_tol: float = DEGENERACY_TOL
) -> ModuliVector:
    """Baum–Bott indices of all singular points, infinite block first.

    Raises:
        SingularCountMismatch: the singular set is not generic
        DegenerateSingularity: some point is degenerate
    """
    return moduli_vector_from(singular_points(v, tol, degeneracy_tol))


def assignment(values: Sequence[complex], target: Sequence[complex]) -> np.ndarray:
    """For each target entry, the index of the value matched to it."""
    if len(values) != len(target):
        raise ValueError(f"cannot match {len(values)} values against {len(target)}")
    if not values:
        return np.zeros(0, dtype=int)
    cost = np.abs(np.subtract.outer(np.asarray(target), np.asarray(values)))
    _, cols = linear_sum_assignment(cost)
    return cols


def split_assignment(values: ModuliVector, target: ModuliVector) -> np.ndarray:
    """Block-wise matching: infinite entries to infinite, finite to finite."""
    k = target.n_infinite
    if values.n_infinite != k:
        raise ValueError("moduli vectors have different infinite block sizes")
    head = assignment(values.values[:k], target.values[:k])
    tail = assignment(values.values[k:], target.values[k:]) + k
    return np.concatenate([head, tail]).astype(int)


def _matched_max(a: Sequence[complex], b: Sequence[complex]) -> float:
    if not a:
        return 0.0
    order = assignment(a, b)
    return float(np.max(np.abs(np.asarray(a)[order] - np.asarray(b))))


def moduli_distance(a: ModuliVector, b: ModuliVector) -> tuple[float, float]:
    """Largest matched difference: ``(joint, split)``.

    ``joint`` matches the full multisets; ``split`` matches the infinite and
    finite blocks separately, so ``joint ≤ split`` up to assignment ties.
    """
    joint = _matched_max(a.values, b.values)
    k = a.n_infinite
    if b.n_infinite != k:
        return joint, float("inf")
    split = max(_matched_max(a.values[:k], b.values[:k]), _matched_max(a.values[k:], b.values[k:]))
    return joint, split
