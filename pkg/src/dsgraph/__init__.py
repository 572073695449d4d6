"""Exact toolkit for the direct-sum graph of a vector space over GF(q)."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    DSVector,
    FieldScalar,
    Skeleton,
    SpaceParams,
    enumerate_vertices,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    is_adjacent,
    is_prime,
    rank_vertex,
    skeleton_of,
    unrank_vertex,
    vector_add,
)
from .errors import DomainError, DSGraphError, InconsistencyError, ResourceError, UsageError  # noqa: E402
from .graph import (  # noqa: E402
    DirectSumGraph,
    build_graph,
    export_graph,
    export_string,
    read_edgelist,
    vertex_label,
)

__all__ = [
    "DSGraphError",
    "DSVector",
    "DirectSumGraph",
    "DomainError",
    "FieldScalar",
    "InconsistencyError",
    "ResourceError",
    "Skeleton",
    "SpaceParams",
    "UsageError",
    "build_graph",
    "enumerate_vertices",
    "export_graph",
    "export_string",
    "field_add",
    "field_inv",
    "field_mul",
    "field_neg",
    "is_adjacent",
    "is_prime",
    "rank_vertex",
    "read_edgelist",
    "skeleton_of",
    "unrank_vertex",
    "vector_add",
    "vertex_label",
]
