"""Triangulations of the infinity-gon and the completed infinity-gon."""

from .arcs import (
    GENERIC,
    NEG_INF,
    POS_INF,
    Arc,
    SurfaceKind,
    adic,
    arc_kind,
    crosses,
    format_arc,
    make_arc,
    parse_arc,
    phi_label,
    prufer,
)
from .completion import CompletionFlavor, complete, completed_mutation, completion_sets
from .equivalence import (
    LF,
    UNKNOWN,
    ArrowKind,
    ClassLabel,
    Stage,
    TransfiniteWitness,
    class_graph,
    classify,
    leq_s,
    route,
    strongly_equivalent,
    verify_witness,
)
from .mutation import (
    AlternatingSweep,
    AsymptoticSweep,
    FanCollapse,
    FiniteList,
    FountainShift,
    Interleaved,
    ZigzagToFountain,
    check_admissible,
    evaluate,
    flip,
    interleave,
    is_mutable,
    leaves_untouched,
    quadrilateral,
)
from .oracle import PolyTriangulation, cross_validate, enum_triangulations, flip_distance, flip_graph, oracle_flip
from .triangulation import (
    COMPLETED,
    INFTY,
    AllAdic,
    AllPrufer,
    CompletedFountain,
    DoubleInf,
    LeftInfRight,
    LeftMinusInf,
    LeftRightInf,
    RightInfRight,
    SplitFountain,
    Triangulation,
    ZigzagLF,
    contains,
    fountain_profile,
    incident,
    instantiate,
    restrict,
    subpolygon_parts,
    validate_patch,
)

__all__ = [
    "GENERIC",
    "NEG_INF",
    "POS_INF",
    "Arc",
    "SurfaceKind",
    "adic",
    "arc_kind",
    "crosses",
    "format_arc",
    "make_arc",
    "parse_arc",
    "phi_label",
    "prufer",
    "CompletionFlavor",
    "complete",
    "completed_mutation",
    "completion_sets",
    "LF",
    "UNKNOWN",
    "ArrowKind",
    "ClassLabel",
    "Stage",
    "TransfiniteWitness",
    "class_graph",
    "classify",
    "leq_s",
    "route",
    "strongly_equivalent",
    "verify_witness",
    "AlternatingSweep",
    "AsymptoticSweep",
    "FanCollapse",
    "FiniteList",
    "FountainShift",
    "Interleaved",
    "ZigzagToFountain",
    "check_admissible",
    "evaluate",
    "flip",
    "interleave",
    "is_mutable",
    "leaves_untouched",
    "quadrilateral",
    "PolyTriangulation",
    "cross_validate",
    "enum_triangulations",
    "flip_distance",
    "flip_graph",
    "oracle_flip",
    "COMPLETED",
    "INFTY",
    "AllAdic",
    "AllPrufer",
    "CompletedFountain",
    "DoubleInf",
    "LeftInfRight",
    "LeftMinusInf",
    "LeftRightInf",
    "RightInfRight",
    "SplitFountain",
    "Triangulation",
    "ZigzagLF",
    "contains",
    "fountain_profile",
    "incident",
    "instantiate",
    "restrict",
    "subpolygon_parts",
    "validate_patch",
]

__version__ = "0.1.0"
