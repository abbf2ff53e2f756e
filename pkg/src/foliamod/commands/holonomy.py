"""``holonomy``: multipliers at the points at infinity against exp(2πi·λ/μ)."""

from __future__ import annotations

import argparse

from foliamod.commands.common import Row, Sample, column_max, run_samples
from foliamod.config import Settings
from foliamod.foliation.singular import infinite_singular_points
from foliamod.holonomy.generators import generator_product_check
from foliamod.holonomy.germ import expected_multiplier, holonomy_multiplier, ratio_from_multiplier
from foliamod.io.report import Report


def cmd_holonomy(args: argparse.Namespace, settings: Settings) -> Report:
    integrator = settings.integrator()

    def per_sample(sample: Sample) -> list[Row]:
        v = sample.field
        points = infinite_singular_points(v, settings.tol, settings.degeneracy_tol)
        product = generator_product_check(v, settings=integrator)
        rows = []
        for idx, point in enumerate(points):
            multiplier = holonomy_multiplier(v, idx, settings=integrator)
            expected = expected_multiplier(point)
            rows.append(
                {
                    "sample": sample.index,
                    "point": idx,
                    "ratio": point.char_ratio,
                    "multiplier": multiplier,
                    "expected": expected,
                    "error": abs(multiplier - expected),
                    "recovered_ratio": ratio_from_multiplier(multiplier),
                    "product_residual": product,
                }
            )
        return rows

    report = run_samples("holonomy", args, per_sample)
    report.results["max_error"] = column_max(report.rows, "error")
    report.results["max_product_residual"] = column_max(report.rows, "product_residual")
    return report
