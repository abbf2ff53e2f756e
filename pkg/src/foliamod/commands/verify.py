"""``verify``: the index identities plus genericity data, per sample."""

from __future__ import annotations

import argparse

from foliamod.commands.common import Row, Sample, column_max, run_samples
from foliamod.config import Settings
from foliamod.foliation.genericity import genericity_report
from foliamod.foliation.indices import verify_baum_bott, verify_camacho_sad_line
from foliamod.foliation.lines import invariant_lines
from foliamod.io.report import Report


def cmd_verify(args: argparse.Namespace, settings: Settings) -> Report:
    tol, degeneracy_tol = settings.tol, settings.degeneracy_tol

    def per_sample(sample: Sample) -> list[Row]:
        v = sample.field
        bb = verify_baum_bott(v, tol, degeneracy_tol)
        cs = verify_camacho_sad_line(v, "infinity", tol, degeneracy_tol)
        lines = invariant_lines(v, tol)
        line_residual = max(
            (verify_camacho_sad_line(v, line, tol, degeneracy_tol) for line in lines),
            default=None,
        )
        generic = genericity_report(v, tol, degeneracy_tol)
        return [
            {
                "sample": sample.index,
                "degree": v.degree,
                "n_finite": generic.n_finite,
                "n_infinite": generic.n_infinite,
                "baum_bott_residual": bb,
                "camacho_sad_residual": cs,
                "invariant_lines": len(lines),
                "line_residual": line_residual,
                "nonreal_infinite_ratios": generic.nonreal_infinite_ratios,
            }
        ]

    report = run_samples("verify", args, per_sample)
    rows = report.rows
    report.results["max_baum_bott_residual"] = column_max(rows, "baum_bott_residual")
    report.results["max_camacho_sad_residual"] = column_max(rows, "camacho_sad_residual")
    report.results["max_line_residual"] = column_max(rows, "line_residual")
    return report
