"""Shared plumbing for the CLI commands: input loading and per-sample runs."""

from __future__ import annotations

import argparse
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from foliamod.core.errors import FoliamodError, InputRejected
from foliamod.foliation.field import VectorField
from foliamod.io.fieldfile import load_field_text
from foliamod.io.random_fields import random_fields
from foliamod.io.report import Report, canonical_digest

logger = logging.getLogger(__name__)

Row = dict[str, Any]


@dataclass(frozen=True)
class Sample:
    index: int
    field: VectorField


def is_batch(args: argparse.Namespace) -> bool:
    return bool(getattr(args, "random", False))


def load_samples(args: argparse.Namespace) -> tuple[list[Sample], str]:
    """The fields a command runs on, and the digest of their canonical description.

    Raises:
        InputRejected: neither ``--input`` nor ``--random`` was given
        ParseError, DimensionMismatch: the input file is malformed
    """
    if getattr(args, "input", None):
        spec = load_field_text(Path(args.input).read_text(encoding="utf-8"))
        return [Sample(0, spec.to_field())], canonical_digest(spec.model_dump())
    if is_batch(args):
        fields = random_fields(args.seed, args.count, args.degree)
        digest = canonical_digest(
            {"random": {"seed": args.seed, "count": args.count, "degree": args.degree}}
        )
        return [Sample(i, v) for i, v in enumerate(fields)], digest
    raise InputRejected("either --input PATH or --random is required")


def run_samples(
    command: str, args: argparse.Namespace, per_sample: Callable[[Sample], list[Row]]
) -> Report:
    """Run ``per_sample`` on every input field; failures go to the error log."""
    start = time.perf_counter()
    samples, digest = load_samples(args)
    report = Report(command=command, input_digest=digest)
    rows: list[Row] = []
    for sample in samples:
        try:
            rows.extend(per_sample(sample))
        except FoliamodError as exc:
            logger.warning("sample %d: %s: %s", sample.index, exc.code, exc)
            report.add_error(sample.index, exc)
    report.results["samples"] = len(samples)
    report.results["rejected"] = len(report.errors)
    report.results["rows"] = rows
    report.wall_time_s = time.perf_counter() - start
    return report


def column_max(rows: list[Row], key: str) -> float:
    values = [float(r[key]) for r in rows if r.get(key) is not None]
    return max(values, default=0.0)
