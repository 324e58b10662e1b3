"""Exclusive betweenness centrality of vertex sets, with group betweenness,
co-betweenness, brute-force verification and sampling estimators."""

from .errors import (
    DegenerateSampleSpace,
    DisconnectedGraphError,
    GraphFormatError,
    GuardExceeded,
    InvalidVertexSetError,
    PathCountOverflow,
    UndefinedCorrelation,
    UnreachableError,
    XBError,
)
from .exact import (
    betweenness_all,
    co_betweenness,
    dependency_row,
    exclusive_betweenness_direct,
    exclusive_betweenness_ie,
    exclusive_pair,
    group_betweenness_direct,
    group_betweenness_ie,
    per_source_exclusive,
    restricted_betweenness,
    to_unordered,
)
from .graph import Graph, LoadOptions, degree_stats, largest_component, load_edge_list
from .sampling import (
    PairDistribution,
    SampleEstimate,
    estimate,
    estimate_candidate_family,
    estimate_general,
    estimate_pair_sampling,
    estimate_path_sampling,
    estimate_source_sampling,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateSampleSpace",
    "DisconnectedGraphError",
    "Graph",
    "GraphFormatError",
    "GuardExceeded",
    "InvalidVertexSetError",
    "LoadOptions",
    "PairDistribution",
    "PathCountOverflow",
    "SampleEstimate",
    "UndefinedCorrelation",
    "UnreachableError",
    "XBError",
    "betweenness_all",
    "co_betweenness",
    "degree_stats",
    "dependency_row",
    "estimate",
    "estimate_candidate_family",
    "estimate_general",
    "estimate_pair_sampling",
    "estimate_path_sampling",
    "estimate_source_sampling",
    "exclusive_betweenness_direct",
    "exclusive_betweenness_ie",
    "exclusive_pair",
    "group_betweenness_direct",
    "group_betweenness_ie",
    "largest_component",
    "load_edge_list",
    "per_source_exclusive",
    "restricted_betweenness",
    "to_unordered",
]
