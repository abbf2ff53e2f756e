"""Moduli map public API."""

from foliamod.moduli.dimension import DimensionReport, dimension_report
from foliamod.moduli.family import (
    DarbouxScan,
    ScanMember,
    darboux_family_scan,
    darboux_member,
    family_direction,
)
from foliamod.moduli.fiber import FiberReport, FiberSolution, fiber_search, same_orbit
from foliamod.moduli.jacobian import moduli_derivative, moduli_jacobian, numerical_rank
from foliamod.moduli.mapping import (
    moduli_distance,
    moduli_vector,
    moduli_vector_from,
    split_assignment,
)
from foliamod.moduli.regular import (
    ANCHORS,
    all_regular_reps,
    field_from_coefficients,
    from_regular,
    regular_rep_for_triple,
    select_anchor_triple,
    to_regular_representative,
)
from foliamod.moduli.tracking import track_labels

__all__ = [
    "all_regular_reps",
    "ANCHORS",
    "darboux_family_scan",
    "darboux_member",
    "DarbouxScan",
    "dimension_report",
    "DimensionReport",
    "family_direction",
    "fiber_search",
    "FiberReport",
    "FiberSolution",
    "field_from_coefficients",
    "from_regular",
    "moduli_derivative",
    "moduli_distance",
    "moduli_jacobian",
    "moduli_vector",
    "moduli_vector_from",
    "numerical_rank",
    "regular_rep_for_triple",
    "same_orbit",
    "ScanMember",
    "select_anchor_triple",
    "split_assignment",
    "to_regular_representative",
    "track_labels",
]
