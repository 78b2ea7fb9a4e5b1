"""Chord-diagram calculus for counting closed essential surfaces.

The package enumerates punctured partitioned chord diagrams, builds the
structural family realizing every connected diagram, and counts the
closed essential surfaces of each genus in a Montesinos knot complement
with four rational tangles three independent ways: closed form, direct
construction, and brute-force search.
"""

from __future__ import annotations

from .counting import (
    COUNT_SERIES,
    CountReport,
    CountRow,
    KnotSpec,
    RationalGF,
    euler_char,
    euler_totient,
    gf_expand,
    sc_curve_count,
    sequence_report,
    spheres_for_genus,
    surface_count,
)
from .diagram import (
    Chord,
    Diagram,
    are_parallel,
    canonical_key,
    chord_length,
    chords_count,
    faces,
    faces_count,
    from_dict,
    from_json,
    is_intra_region_isotopic,
    max_possible_length,
    points_count,
    region_of,
    sphere_index,
    to_dict,
    to_json,
    validate,
    window,
)
from .dual_tree import DualTree, build_dual_tree, leaf_chords, leaf_count, to_dot
from .enumeration import (
    EnumerationReport,
    catalan,
    crosscheck_structural,
    enumerate_connected,
    enumerate_wellformed,
    noncrossing_matchings,
)
from .errors import (
    BadGapIndex,
    ChordNotInDiagram,
    Crossing,
    GenusMismatch,
    GenusTooSmall,
    IntervalOutOfRange,
    IntraRegionChord,
    LeafLengthViolation,
    NonPositive,
    NotAdmissible,
    NotExpandable,
    NotPerfect,
    OffsetOutOfRange,
    ParityViolation,
    PpcdError,
    RangeViolation,
    SamePoint,
    SchemaError,
    TooFewTangles,
    Unclassifiable,
    UnclassifiableFace,
)
from .pairings import (
    OrbitPartition,
    Pairing,
    gcd_connected,
    is_connected,
    orbits,
    sc_components,
    stack_orbits,
    stack_pairings,
)
from .structure import (
    ChordType,
    ChordTypeCounts,
    StructuralLocus,
    build_structural,
    chord_type_counts,
    class_sizes,
    classify_chord,
    has_structural_shape,
    is_admissible,
    valid_loci,
)
from .superposition import (
    FaceKind,
    FaceType,
    SuperimposedDiagram,
    classify_faces,
    combined_position,
    crossing_floor,
    euler_summary,
    face_report,
    has_type_iv_n_ge_2,
    max_parallel_witness,
    reduce_bigons,
    superimpose,
    to_svg,
)
from .tubing import Tube, TubingDescription, build_tubing, component_genera

__version__ = "0.1.0"

__all__ = [
    "BadGapIndex",
    "COUNT_SERIES",
    "Chord",
    "ChordNotInDiagram",
    "ChordType",
    "ChordTypeCounts",
    "CountReport",
    "CountRow",
    "Crossing",
    "Diagram",
    "DualTree",
    "EnumerationReport",
    "FaceKind",
    "FaceType",
    "GenusMismatch",
    "GenusTooSmall",
    "IntervalOutOfRange",
    "IntraRegionChord",
    "KnotSpec",
    "LeafLengthViolation",
    "NonPositive",
    "NotAdmissible",
    "NotExpandable",
    "NotPerfect",
    "OffsetOutOfRange",
    "OrbitPartition",
    "Pairing",
    "ParityViolation",
    "PpcdError",
    "RangeViolation",
    "RationalGF",
    "SamePoint",
    "SchemaError",
    "StructuralLocus",
    "SuperimposedDiagram",
    "TooFewTangles",
    "Tube",
    "TubingDescription",
    "Unclassifiable",
    "UnclassifiableFace",
    "are_parallel",
    "build_dual_tree",
    "build_structural",
    "build_tubing",
    "canonical_key",
    "catalan",
    "chord_length",
    "chord_type_counts",
    "chords_count",
    "class_sizes",
    "classify_chord",
    "classify_faces",
    "combined_position",
    "component_genera",
    "crosscheck_structural",
    "crossing_floor",
    "enumerate_connected",
    "enumerate_wellformed",
    "euler_char",
    "euler_summary",
    "euler_totient",
    "face_report",
    "faces",
    "faces_count",
    "from_dict",
    "from_json",
    "gcd_connected",
    "gf_expand",
    "has_structural_shape",
    "has_type_iv_n_ge_2",
    "is_admissible",
    "is_connected",
    "is_intra_region_isotopic",
    "leaf_chords",
    "leaf_count",
    "max_parallel_witness",
    "max_possible_length",
    "noncrossing_matchings",
    "orbits",
    "points_count",
    "reduce_bigons",
    "region_of",
    "sc_components",
    "sc_curve_count",
    "sequence_report",
    "sphere_index",
    "spheres_for_genus",
    "stack_orbits",
    "stack_pairings",
    "superimpose",
    "surface_count",
    "to_dict",
    "to_dot",
    "to_json",
    "to_svg",
    "valid_loci",
    "validate",
    "window",
]
