"""Holonomy of the line at infinity."""

from foliamod.holonomy.generators import (
    HolonomyFrame,
    commutator_residual,
    compose,
    default_base,
    generator_germs,
    generator_product_check,
    holonomy_frame,
)
from foliamod.holonomy.germ import (
    Arc,
    Segment,
    expected_multiplier,
    germ_at_point,
    germ_multiplier,
    holonomy_map,
    holonomy_multiplier,
    loop_path,
    loop_radius,
    neville_at_zero,
    ratio_from_multiplier,
    transport,
)

__all__ = [
    "Arc",
    "commutator_residual",
    "compose",
    "default_base",
    "expected_multiplier",
    "generator_germs",
    "generator_product_check",
    "germ_at_point",
    "germ_multiplier",
    "holonomy_frame",
    "holonomy_map",
    "holonomy_multiplier",
    "HolonomyFrame",
    "loop_path",
    "loop_radius",
    "neville_at_zero",
    "ratio_from_multiplier",
    "Segment",
    "transport",
]
