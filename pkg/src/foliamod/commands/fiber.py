"""``fiber``: search for other fields with the moduli vector of the input."""

from __future__ import annotations

import argparse
import time

from foliamod.commands.common import load_samples
from foliamod.config import Settings
from foliamod.io.report import Report
from foliamod.moduli.fiber import fiber_search
from foliamod.moduli.mapping import moduli_vector
from foliamod.moduli.regular import to_regular_representative


def cmd_fiber_search(args: argparse.Namespace, settings: Settings) -> Report:
    """Fiber of the first input field; restarts perturb it unless ``--cold`` is given."""
    start = time.perf_counter()
    samples, digest = load_samples(args)
    v = samples[0].field
    target = moduli_vector(v, settings.tol, settings.degeneracy_tol)
    rep = None
    if not args.cold:
        rep, _ = to_regular_representative(
            v, tol=settings.tol, degeneracy_tol=settings.degeneracy_tol
        )
    found = fiber_search(
        target,
        restarts=args.restarts,
        seed=args.seed,
        start=rep,
        h=settings.jacobian_step,
        solve_tol=settings.tol,
        degeneracy_tol=settings.degeneracy_tol,
    )
    report = Report(command="fiber", input_digest=digest)
    report.results.update(
        {
            "target": list(target.canonical),
            "restarts": found.restarts,
            "converged": found.converged,
            "failures": found.failures,
            "distinct": len(found.solutions),
            "blow_down": found.blow_down,
            "rows": found.rows(),
        }
    )
    report.wall_time_s = time.perf_counter() - start
    return report
