"""``darboux``: scan the Darboux family across a grid of k values."""

from __future__ import annotations

import argparse
import time

import numpy as np

from foliamod.config import Settings
from foliamod.core.errors import ParseError
from foliamod.io.report import Report, canonical_digest
from foliamod.moduli.family import darboux_family_scan

DEFAULT_ALPHA = 2 + 0j
DEFAULT_K_GRID = "lin:1.5:3.5:5"
# matched moduli distance below which the family counts as blown down
BLOW_DOWN_TOL = 1e-6


def parse_complex_pair(text: str) -> complex:
    """``"RE,IM"`` (or a bare ``"RE"``) as a complex number."""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise ParseError(f"cannot read {text!r} as RE,IM") from exc
    raise ParseError(f"cannot read {text!r} as RE,IM")


def parse_k_grid(text: str) -> list[complex]:
    """``"lin:START:STOP:COUNT"`` for an evenly spaced real grid, else ``;``-separated
    complex literals such as ``"1;2+0.5j;3"``."""
    if text.startswith("lin:"):
        try:
            _, start, stop, count = text.split(":")
            return [complex(k) for k in np.linspace(float(start), float(stop), int(count))]
        except ValueError as exc:
            raise ParseError(f"bad linear grid {text!r}; expected lin:START:STOP:COUNT") from exc
    try:
        return [complex(item.strip().replace(" ", "")) for item in text.split(";") if item.strip()]
    except ValueError as exc:
        raise ParseError(f"bad k grid {text!r}") from exc


def cmd_darboux_scan(args: argparse.Namespace, settings: Settings) -> Report:
    start = time.perf_counter()
    alpha = parse_complex_pair(args.alpha) if args.alpha else DEFAULT_ALPHA
    grid = parse_k_grid(args.k_grid or DEFAULT_K_GRID)
    scan = darboux_family_scan(
        alpha, grid, settings.jacobian_step, settings.tol, settings.degeneracy_tol
    )
    report = Report(
        command="darboux",
        input_digest=canonical_digest({"alpha": alpha, "k_grid": grid}),
    )
    report.results.update(
        {
            "alpha": alpha,
            "max_distance": scan.max_distance,
            "max_split_distance": scan.max_split_distance,
            "skipped_k": list(scan.degenerate),
            "blow_down": scan.max_split_distance < BLOW_DOWN_TOL,
            "rows": scan.rows(),
        }
    )
    report.wall_time_s = time.perf_counter() - start
    return report
