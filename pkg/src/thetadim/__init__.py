"""Metric dimension and landmark bases for type-III bicyclic (theta) graphs.

The library builds ``C_{p,q,r}`` theta graphs, computes metric dimensions
and bases both by an exhaustive definitional oracle and by closed-form case
formulas, verifies the two against each other across parameter sweeps, and
assigns landmark codes to named networks.
"""

from .closed_form import (
    CASE_TAGS,
    DIMENSION_THREE_TAGS,
    ClosedFormResult,
    TableLookupError,
    TheoremCase,
    case_landmarks,
    closed_form_basis,
    dimension_by_path_lengths,
    dimension_formula,
    dispatch_case,
    formula_representation,
    partition_index,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs,
    bfs_distances,
    new_graph,
)
from .network import (
    LandmarkTable,
    NetworkParseError,
    NetworkSpec,
    assign_landmarks,
    field_network_text,
    format_network,
    network_graph,
    parse_network,
)
from .resolve import (
    DEFAULT_ORACLE_CAP,
    BasisResult,
    is_minimal_resolving,
    is_resolving,
    known_dimension_special,
    metric_dimension_oracle,
    representation,
    unresolved_pair,
)
from .sweep import (
    SweepRecord,
    SweepReport,
    SweepSummary,
    TableMismatch,
    check_triple,
    emit_report,
    parse_report,
    recompute_summary,
    sweep,
    valid_triples,
)
from .theta import (
    InvalidParamsError,
    ThetaParams,
    ThetaShape,
    build_c,
    detect_theta,
    swap_isomorphism,
    theta_parameterizations,
    to_theta_lengths,
    validate_params,
)

__version__ = "1.0.0"

__all__ = [
    "CASE_TAGS",
    "DEFAULT_ORACLE_CAP",
    "DIMENSION_THREE_TAGS",
    "UNREACHABLE",
    "BasisResult",
    "ClosedFormResult",
    "DistanceMatrix",
    "Graph",
    "InvalidParamsError",
    "LandmarkTable",
    "NetworkParseError",
    "NetworkSpec",
    "SweepRecord",
    "SweepReport",
    "SweepSummary",
    "TableLookupError",
    "TableMismatch",
    "TheoremCase",
    "ThetaParams",
    "ThetaShape",
    "all_pairs",
    "assign_landmarks",
    "bfs_distances",
    "build_c",
    "case_landmarks",
    "check_triple",
    "closed_form_basis",
    "detect_theta",
    "dimension_by_path_lengths",
    "dimension_formula",
    "dispatch_case",
    "emit_report",
    "field_network_text",
    "format_network",
    "formula_representation",
    "is_minimal_resolving",
    "is_resolving",
    "known_dimension_special",
    "metric_dimension_oracle",
    "network_graph",
    "new_graph",
    "parse_network",
    "parse_report",
    "partition_index",
    "recompute_summary",
    "representation",
    "swap_isomorphism",
    "sweep",
    "theta_parameterizations",
    "to_theta_lengths",
    "unresolved_pair",
    "valid_triples",
    "validate_params",
]
