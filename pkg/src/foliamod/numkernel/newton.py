"""Newton polishing of common roots of two bivariate polynomials."""

from __future__ import annotations

import logging

import numpy as np

from foliamod.core.errors import NoConvergence, SingularJacobian
from foliamod.numkernel.poly import BiPoly

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 50
_EPS = np.finfo(float).eps


def newton_polish(
    system: tuple[BiPoly, BiPoly],
    start: tuple[complex, complex],
    tol: float = 1e-12,
    max_iterations: int = MAX_ITERATIONS,
) -> tuple[complex, complex]:
    """Refine an approximate common root of ``(P, Q)`` by Newton's method.

    Iteration stops once the residual ``‖(P, Q)‖`` is at most ``tol``, or
    when the step has reached roundoff level with the residual within
    ``1e3 · tol``.

    Args:
        system: The pair ``(P, Q)``
        start: Starting point ``(x, y)``
        tol: Absolute residual target
        max_iterations: Iteration cap

    Returns:
        Refined point ``(x, y)``

    Raises:
        SingularJacobian: the Jacobian is numerically singular at an iterate
        NoConvergence: the iteration cap was reached
    """
    p, q = system
    px, py, qx, qy = p.partial_x(), p.partial_y(), q.partial_x(), q.partial_y()
    z = np.asarray(start, dtype=complex)

    def residual(point: np.ndarray) -> np.ndarray:
        return np.array([p(*point), q(*point)], dtype=complex)

    f = residual(z)
    for iteration in range(max_iterations):
        if np.linalg.norm(f) <= tol:
            return complex(z[0]), complex(z[1])
        jac = np.array([[px(*z), py(*z)], [qx(*z), qy(*z)]], dtype=complex)
        scale = np.linalg.norm(jac)
        det = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
        if scale == 0 or abs(det) <= 1e-14 * scale * scale:
            raise SingularJacobian(f"Newton step ill-posed at {tuple(z)}")
        step = np.linalg.solve(jac, f)
        z = z - step
        f = residual(z)
        if np.linalg.norm(step) <= 8 * _EPS * (1.0 + np.linalg.norm(z)):
            if np.linalg.norm(f) <= 1e3 * tol:
                logger.debug("Newton stagnated at roundoff after %d steps", iteration)
                return complex(z[0]), complex(z[1])
            break
    raise NoConvergence(
        f"Newton polish did not reach residual {tol:g} from {tuple(start)}"
    )
