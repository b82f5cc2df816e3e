"""Rainbow matchings of circularly colored complete graphs.

Vertices 0..n-1 sit on a circle; every edge of the complete graph carries the
circular distance between its endpoints as its color. This package constructs
rainbow (near-)perfect matchings (kirkman, t_matching, ars), normalizes them
to canonical representatives, generates recursive families of inequivalent
ones, enumerates all of them exhaustively for small n, and turns them into
round-robin tournament schedules.
"""

from ._core import (
    EnumerationReport,
    Matching,
    RpmFamily,
    Schedule,
    ars,
    census,
    color_index,
    cuttable_kirkman_rotations,
    enumerate_rpms,
    f_op,
    family,
    g_op,
    is_cuttable,
    is_normalized,
    is_rpm,
    kirkman,
    normalize,
    orbit_size,
    reverse,
    rotate,
    same_class,
    schedule_from_rpm,
    t_matching,
    unmatched_vertex,
    validate_schedule,
    verify_property9,
    xi3_embed,
)

__version__ = "0.1.0"

__all__ = [
    "EnumerationReport",
    "Matching",
    "RpmFamily",
    "Schedule",
    "ars",
    "census",
    "color_index",
    "cuttable_kirkman_rotations",
    "enumerate_rpms",
    "f_op",
    "family",
    "g_op",
    "is_cuttable",
    "is_normalized",
    "is_rpm",
    "kirkman",
    "normalize",
    "orbit_size",
    "reverse",
    "rotate",
    "same_class",
    "schedule_from_rpm",
    "t_matching",
    "unmatched_vertex",
    "validate_schedule",
    "verify_property9",
    "xi3_embed",
]
