"""``rank`` and ``dimension``: the moduli map's derivative and dimension count."""

from __future__ import annotations

import argparse
import time

from foliamod.commands.common import Row, Sample, run_samples
from foliamod.config import Settings
from foliamod.io.report import Report, canonical_digest
from foliamod.moduli.dimension import dimension_report
from foliamod.moduli.jacobian import moduli_jacobian
from foliamod.moduli.regular import to_regular_representative

FULL_RANK = 5


def cmd_rank(args: argparse.Namespace, settings: Settings) -> Report:
    """Rank and singular values of the moduli Jacobian at each regular representative."""
    tol, degeneracy_tol = settings.tol, settings.degeneracy_tol

    def per_sample(sample: Sample) -> list[Row]:
        rep, _ = to_regular_representative(sample.field, tol=tol, degeneracy_tol=degeneracy_tol)
        jac = moduli_jacobian(
            rep, settings.jacobian_step, tol, degeneracy_tol, rel_tol=settings.rank_rel_tol
        )
        row: Row = {
            "sample": sample.index,
            "rank": jac.rank,
            "sigma_ratio": jac.sigma_ratio,
            "radial_residual": jac.radial_residual,
        }
        for idx, s in enumerate(jac.singular_values):
            row[f"sigma{idx + 1}"] = s
        return [row]

    report = run_samples("rank", args, per_sample)
    rows = report.rows
    if rows:
        report.results["full_rank_fraction"] = sum(r["rank"] == FULL_RANK for r in rows) / len(
            rows
        )
    return report


def cmd_dimension(args: argparse.Namespace, settings: Settings) -> Report:
    start = time.perf_counter()
    dims = dimension_report(args.degree)
    report = Report(command="dimension", input_digest=canonical_digest({"degree": args.degree}))
    report.results["rows"] = [
        {
            "degree": dims.degree,
            "dim_source": dims.dim_source,
            "dim_target_bound": dims.dim_target_bound,
            "gap": dims.gap,
        }
    ]
    report.wall_time_s = time.perf_counter() - start
    return report
