"""Foliation engine public API."""

from foliamod.foliation.darboux import (
    darboux_annihilator,
    darboux_two_factor,
    invariant_curve_remainder,
    is_curve_invariant,
)
from foliamod.foliation.field import VectorField, infinity_chart_field
from foliamod.foliation.genericity import GenericityReport, genericity_report
from foliamod.foliation.indices import (
    baum_bott_target,
    line_ratios,
    verify_baum_bott,
    verify_camacho_sad_line,
)
from foliamod.foliation.lines import (
    invariant_line_remainder,
    invariant_lines,
    is_line_invariant,
)
from foliamod.foliation.singular import (
    char_ratio_at_infinity,
    finite_singular_points,
    infinite_singular_points,
    nu_index,
    singular_points,
)
from foliamod.foliation.three_lines import (
    ThreeLineEigendata,
    three_line_eigendata,
    three_line_field,
)

__all__ = [
    "baum_bott_target",
    "char_ratio_at_infinity",
    "darboux_annihilator",
    "darboux_two_factor",
    "finite_singular_points",
    "genericity_report",
    "GenericityReport",
    "infinite_singular_points",
    "infinity_chart_field",
    "invariant_curve_remainder",
    "invariant_line_remainder",
    "invariant_lines",
    "is_curve_invariant",
    "is_line_invariant",
    "line_ratios",
    "nu_index",
    "singular_points",
    "three_line_eigendata",
    "three_line_field",
    "ThreeLineEigendata",
    "VectorField",
    "verify_baum_bott",
    "verify_camacho_sad_line",
]
