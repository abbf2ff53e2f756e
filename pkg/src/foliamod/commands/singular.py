"""``singular`` and ``indices``: singular points and the index sums."""

from __future__ import annotations

import argparse

from foliamod.commands.common import Row, Sample, column_max, run_samples
from foliamod.config import Settings
from foliamod.foliation.indices import baum_bott_target
from foliamod.foliation.singular import singular_points
from foliamod.io.report import Report


def cmd_singular(args: argparse.Namespace, settings: Settings) -> Report:
    """One row per singular point, in chart coordinates.

    Infinite points are given as ``(0, v)`` in chart ``x`` or ``(0, w)`` in
    chart ``y``; ``lambda`` is the eigenvalue transverse to the line at
    infinity there.
    """

    def per_sample(sample: Sample) -> list[Row]:
        sing = singular_points(sample.field, settings.tol, settings.degeneracy_tol)
        rows = []
        for idx, p in enumerate(sing.points):
            rows.append(
                {
                    "sample": sample.index,
                    "point": idx,
                    "kind": "finite" if p.is_finite else "infinite",
                    "chart": p.chart,
                    "x": p.coords[0],
                    "y": p.coords[1],
                    "lambda": p.eigenpair[0],
                    "mu": p.eigenpair[1],
                    "ratio": None if p.is_finite else p.char_ratio,
                    "nu": p.nu,
                    "residual": p.residual,
                }
            )
        return rows

    return run_samples("singular", args, per_sample)


def cmd_indices(args: argparse.Namespace, settings: Settings) -> Report:
    """Baum–Bott sum over all points and Camacho–Sad sum along the line at infinity."""

    def per_sample(sample: Sample) -> list[Row]:
        v = sample.field
        sing = singular_points(v, settings.tol, settings.degeneracy_tol).require_generic()
        nu_sum = complex(sum(p.nu for p in sing.points if p.nu is not None))
        ratio_sum = complex(sum(p.char_ratio for p in sing.infinite if p.char_ratio is not None))
        target = baum_bott_target(v.degree)
        return [
            {
                "sample": sample.index,
                "degree": v.degree,
                "nu_sum": nu_sum,
                "baum_bott_target": target,
                "baum_bott_residual": abs(nu_sum - target),
                "infinity_ratio_sum": ratio_sum,
                "camacho_sad_residual": abs(ratio_sum - 1),
            }
        ]

    report = run_samples("indices", args, per_sample)
    report.results["max_baum_bott_residual"] = column_max(report.rows, "baum_bott_residual")
    report.results["max_camacho_sad_residual"] = column_max(report.rows, "camacho_sad_residual")
    return report
