"""Global edge connectivity from unit-capacity maximum flows."""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from ..graph import DirectSumGraph, iter_bits
from .caps import check_cap
from .metric import is_connected


def _capacity_matrix(g: DirectSumGraph) -> csr_matrix:
    # one arc each way with capacity 1 models an undirected unit edge
    indptr = [0]
    indices: list[int] = []
    for row in g.rows:
        indices.extend(iter_bits(row))
        indptr.append(len(indices))
    data = np.ones(len(indices), dtype=np.int32)
    return csr_matrix(
        (data, np.asarray(indices, dtype=np.int32), np.asarray(indptr, dtype=np.int32)),
        shape=(g.order, g.order),
    )


def local_edge_connectivity(g: DirectSumGraph, s: int, t: int) -> int:
    return int(maximum_flow(_capacity_matrix(g), s, t).flow_value)


def edge_connectivity_exact(g: DirectSumGraph, cap: int = 300) -> int:
    """Minimum edge cut size: ``min_t maxflow(v0, t)`` with ``v0`` of minimum degree.

    Any global minimum cut separates ``v0`` from some ``t``, so the minimum over
    all targets is exact.  Disconnected and one-vertex graphs give 0.
    """
    check_cap("edgeconn_cap", g.order, cap)
    if g.order < 2 or not is_connected(g):
        return 0
    capacity = _capacity_matrix(g)
    v0 = min(range(g.order), key=g.degrees.__getitem__)
    best = g.degrees[v0]
    for t in range(g.order):
        if t != v0:
            best = min(best, int(maximum_flow(capacity, v0, t).flow_value))
    return best
