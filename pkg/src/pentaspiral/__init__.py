"""Pentagram spirals: seeds, the shift map, invariants, and experiments."""

from .errors import PentaError
from .fields import EPS, FLOAT, RATIONAL
from .projective import (
    ProjLine,
    ProjPoint,
    ProjTransform,
    apply,
    cross_ratio,
    join,
    meet,
    orientation,
    transform_from_quads,
)
from .seeds import (
    Seed,
    SpiralOrbit,
    Violation,
    d_ratios,
    is_plc_window,
    normalize,
    pentagram_map_closed,
    random_seed,
    regular_seed,
    seed_from_json,
    seed_to_json,
    spiral_window,
    step,
    step_inverse,
    step_power,
    validate_seed,
)
from .invariants import (
    FlagSequence,
    TilingLabeling,
    closed_EO,
    corner_invariants,
    fill_labeling,
    flag_sequence,
    pentagram_row_update,
    vertex_invariant,
    z_invariant,
    zigzag_monomial,
)
from .analysis import (
    hilbert_distance,
    limit_point,
    limit_point_orbit,
    log_spiral_parameter,
    lps_seed,
    periodicity_check,
    theta_average,
    winding_profile,
    z_maximization_probe,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "FLOAT",
    "RATIONAL",
    "FlagSequence",
    "PentaError",
    "ProjLine",
    "ProjPoint",
    "ProjTransform",
    "Seed",
    "SpiralOrbit",
    "TilingLabeling",
    "Violation",
    "apply",
    "closed_EO",
    "corner_invariants",
    "cross_ratio",
    "d_ratios",
    "fill_labeling",
    "flag_sequence",
    "hilbert_distance",
    "is_plc_window",
    "join",
    "limit_point",
    "limit_point_orbit",
    "log_spiral_parameter",
    "lps_seed",
    "meet",
    "normalize",
    "orientation",
    "pentagram_map_closed",
    "pentagram_row_update",
    "periodicity_check",
    "random_seed",
    "regular_seed",
    "seed_from_json",
    "seed_to_json",
    "spiral_window",
    "step",
    "step_inverse",
    "step_power",
    "theta_average",
    "transform_from_quads",
    "validate_seed",
    "vertex_invariant",
    "winding_profile",
    "z_invariant",
    "z_maximization_probe",
    "zigzag_monomial",
]
