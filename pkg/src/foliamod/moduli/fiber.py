"""Gauss–Newton search for fields with prescribed Baum–Bott indices.

The search only yields empirical lower bounds on fiber sizes. Solutions are
compared as points of the quotient: two representatives coincide when one
is, up to scale, among the representatives of the other for some ordering
of its finite singular points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from foliamod.core.errors import FoliamodError, NoConvergence
from foliamod.core.models import ModuliVector, RegularRep, SingSet
from foliamod.foliation.singular import DEGENERACY_TOL, singular_points
from foliamod.moduli.jacobian import moduli_derivative, moduli_jacobian
from foliamod.moduli.mapping import moduli_distance, moduli_vector_from, split_assignment
from foliamod.moduli.regular import all_regular_reps, field_from_coefficients, from_regular

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 100
MAX_HALVINGS = 8
RESCALE_EVERY = 10
STALL_WINDOW = 5
STALL_RATIO = 1 - 1e-6
LSTSQ_RCOND = 1e-7
ORBIT_TOL = 1e-6
FULL_RANK = 5


@dataclass(frozen=True)
class FiberSolution:
    rep: RegularRep
    distance: float
    rank: int
    iterations: int


@dataclass(frozen=True)
class FiberReport:
    """Distinct converged representatives of a fiber search."""

    solutions: tuple[FiberSolution, ...]
    restarts: int
    converged: int
    failures: int

    @property
    def blow_down(self) -> bool:
        """Some solution has a rank-deficient moduli derivative."""
        return any(s.rank < FULL_RANK for s in self.solutions)

    def rows(self) -> list[dict[str, Any]]:
        rows = []
        for idx, s in enumerate(self.solutions):
            row: dict[str, Any] = {"solution": idx, "distance": s.distance, "rank": s.rank}
            for j, c in enumerate(s.rep.coefficients):
                row[f"c{j}"] = complex(c)
            rows.append(row)
        return rows


def same_orbit(a: RegularRep, b: RegularRep, tol: float = ORBIT_TOL) -> bool:
    """True if ``b`` is, up to scale, a representative of the field of ``a``."""
    if a.projective_distance(b) < tol:
        return True
    try:
        candidates = all_regular_reps(from_regular(a))
    except FoliamodError:
        return False
    return any(c.projective_distance(b) < tol for c in candidates)


def _residual(
    c: np.ndarray, target: ModuliVector, tol: float, degeneracy_tol: float
) -> tuple[np.ndarray, SingSet, np.ndarray]:
    sing = singular_points(field_from_coefficients(c), tol, degeneracy_tol).require_generic()
    values = moduli_vector_from(sing)
    order = split_assignment(values, target)
    return values.array[order] - target.array, sing, order


def _gauss_newton(
    start: np.ndarray,
    target: ModuliVector,
    tol: float,
    h: float,
    max_iterations: int,
    solve_tol: float,
    degeneracy_tol: float,
) -> tuple[np.ndarray, int]:
    c = start / start[int(np.argmax(np.abs(start)))]
    pin = int(np.argmax(np.abs(c)))
    r, sing, order = _residual(c, target, solve_tol, degeneracy_tol)
    norm = float(np.linalg.norm(r))
    history = [norm]
    for iteration in range(max_iterations):
        if float(np.max(np.abs(r))) < tol:
            return c, iteration
        jac = moduli_derivative(c, sing, h, solve_tol, degeneracy_tol)[order]
        free = np.arange(c.size) != pin
        delta, *_ = np.linalg.lstsq(jac[:, free], -r, rcond=LSTSQ_RCOND)
        step = np.zeros_like(c)
        step[free] = delta

        t = 1.0
        for _ in range(MAX_HALVINGS + 1):
            trial = c + t * step
            try:
                r_trial, sing_trial, order_trial = _residual(
                    trial, target, solve_tol, degeneracy_tol
                )
            except FoliamodError:
                t /= 2
                continue
            trial_norm = float(np.linalg.norm(r_trial))
            if trial_norm < norm:
                c, r, sing, order, norm = trial, r_trial, sing_trial, order_trial, trial_norm
                break
            t /= 2
        else:
            raise NoConvergence(f"line search failed at residual {norm:.3g}")

        logger.debug("Gauss-Newton iteration %d: residual %.3g (t=%g)", iteration, norm, t)
        history.append(norm)
        if len(history) > STALL_WINDOW and norm > STALL_RATIO * history[-1 - STALL_WINDOW]:
            raise NoConvergence(f"stalled at residual {norm:.3g}")
        if (iteration + 1) % RESCALE_EVERY == 0:
            new_pin = int(np.argmax(np.abs(c)))
            c, pin = c / c[new_pin], new_pin
    if float(np.max(np.abs(r))) < tol:
        return c, max_iterations
    raise NoConvergence(f"no convergence in {max_iterations} iterations (residual {norm:.3g})")


def _complex_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def fiber_search(
    target: ModuliVector,
    restarts: int = 8,
    seed: int = 0,
    tol: float = 1e-9,
    start: Optional[RegularRep] = None,
    perturbation: float = 1e-3,
    h: float = 1e-5,
    max_iterations: int = MAX_ITERATIONS,
    solve_tol: float = 1e-10,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> FiberReport:
    """Search for regular representatives whose moduli vector matches ``target``.

    Each restart runs damped Gauss–Newton on the block-matched index
    residual, with the largest coefficient pinned. Restarts either perturb
    ``start`` by ``perturbation`` or draw all six coefficients at random.
    Restart ``i`` draws from child ``i`` of ``SeedSequence(seed)``.

    Returns:
        FiberReport with distinct solutions in order of discovery
    """
    children = np.random.SeedSequence(seed).spawn(restarts)
    solutions: list[FiberSolution] = []
    converged = failures = 0
    for idx, child in enumerate(children):
        rng = np.random.default_rng(child)
        if start is not None:
            c0 = start.coefficients + perturbation * _complex_normal(rng, 6)
        else:
            c0 = _complex_normal(rng, 6)
        try:
            c, iterations = _gauss_newton(
                c0, target, tol, h, max_iterations, solve_tol, degeneracy_tol
            )
            rep = RegularRep.from_coefficients(c)
            sing = singular_points(from_regular(rep), solve_tol, degeneracy_tol)
            _, distance = moduli_distance(moduli_vector_from(sing), target)
            rank = moduli_jacobian(rep, h, solve_tol, degeneracy_tol).rank
        except FoliamodError as exc:
            failures += 1
            logger.warning("fiber restart %d failed: %s: %s", idx, exc.code, exc)
            continue
        converged += 1
        if any(same_orbit(s.rep, rep) for s in solutions):
            continue
        solutions.append(FiberSolution(rep, distance, rank, iterations))
    logger.info(
        "fiber search: %d restarts, %d converged, %d distinct", restarts, converged, len(solutions)
    )
    return FiberReport(tuple(solutions), restarts, converged, failures)
