"""``random``: write a seeded random field file to standard output."""

from __future__ import annotations

import argparse

from foliamod.config import Settings
from foliamod.io.fieldfile import dump_field
from foliamod.io.random_fields import random_field


def cmd_random(args: argparse.Namespace, settings: Settings) -> str:
    v = random_field(args.seed, args.degree)
    return dump_field(v, label=f"random-{args.seed}", seed=args.seed)
