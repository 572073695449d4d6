"""BFS-based invariants: connectivity, diameter, girth, degrees, triangles."""

from __future__ import annotations

import math
from collections import deque
from typing import NamedTuple

from ..algebra import DSVector, all_ones, is_adjacent, vector_add
from ..errors import UsageError
from ..graph import DirectSumGraph, iter_bits


def _bfs_layers(rows: tuple[int, ...], src: int) -> tuple[int, int]:
    """Return ``(eccentricity, reached mask)`` of ``src``."""
    seen = frontier = 1 << src
    depth = 0
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        if not nxt:
            return depth, seen
        seen |= nxt
        frontier = nxt
        depth += 1


def is_connected(g: DirectSumGraph) -> bool:
    if g.order == 0:
        return True
    return _bfs_layers(g.rows, 0)[1] == g.full_mask


def connectivity_and_diameter(g: DirectSumGraph) -> tuple[bool, float | int]:
    """``(connected, diameter)``; the diameter is ``math.inf`` when disconnected."""
    full = g.full_mask
    diameter = 0
    for v in range(g.order):
        ecc, seen = _bfs_layers(g.rows, v)
        if seen != full:
            return False, math.inf
        diameter = max(diameter, ecc)
    return True, diameter


def path_witness(g: DirectSumGraph, x: DSVector, y: DSVector) -> tuple[DSVector, ...]:
    """A path of length at most 2 from ``x`` to ``y``.

    Tries the sum ``x + y`` as the middle vertex first.  In characteristic 2
    the sum can lose its U- or W-part, so the fallback is the all-ones vector
    on the union of both supports, which meets each endpoint on both sides.
    """
    if x == y:
        raise UsageError("path_witness needs two distinct vertices")
    g.index(x), g.index(y)
    if is_adjacent(x, y):
        return (x, y)
    z = vector_add(x, y)
    if not (z.is_vertex and is_adjacent(x, z) and is_adjacent(z, y)):
        z = all_ones(g.params, x.umask | y.umask, x.wmask | y.wmask)
    return (x, z, y)


def girth_exact(g: DirectSumGraph) -> float | int:
    best = math.inf
    rows = g.rows
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


class DegreeStats(NamedTuple):
    degrees: tuple[int, ...]
    min_degree: int
    by_class: dict[tuple[int, int], tuple[int, ...]]


def degree_stats(g: DirectSumGraph) -> DegreeStats:
    """Degrees per vertex plus the distinct degrees seen in each skeleton class ``(l, m)``."""
    buckets: dict[tuple[int, int], set[int]] = {}
    for x, d in zip(g.vertices, g.degrees):
        key = (x.umask.bit_count(), x.wmask.bit_count())
        buckets.setdefault(key, set()).add(d)
    by_class = {k: tuple(sorted(v)) for k, v in sorted(buckets.items())}
    return DegreeStats(g.degrees, min(g.degrees, default=0), by_class)


def is_eulerian_exact(g: DirectSumGraph) -> bool:
    """Connected with every degree even; the one-vertex graph counts as Eulerian."""
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees)


def vertex_in_triangle(g: DirectSumGraph, i: int) -> bool:
    row = g.rows[i]
    return any(row & g.rows[j] for j in iter_bits(row))


def is_triangulated_exact(g: DirectSumGraph) -> bool:
    return g.order >= 3 and all(vertex_in_triangle(g, i) for i in range(g.order))
