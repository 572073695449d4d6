"""Domination number and upper domination number."""

from __future__ import annotations

from ..graph import DirectSumGraph, iter_bits
from .caps import check_cap


def closed_neighbourhoods(g: DirectSumGraph) -> list[int]:
    return [row | (1 << i) for i, row in enumerate(g.rows)]


def universal_vertices(g: DirectSumGraph) -> list[int]:
    target = g.order - 1
    return [i for i, d in enumerate(g.degrees) if d == target]


def is_dominating(g: DirectSumGraph, mask: int) -> bool:
    covered = 0
    for v in iter_bits(mask):
        covered |= g.rows[v] | (1 << v)
    return covered == g.full_mask


def _dominates_within(closed: list[int], full: int, covered: int, budget: int) -> bool:
    if covered == full:
        return True
    if budget == 0:
        return False
    # the lowest undominated vertex must be covered by one of its closed neighbours
    missing = full & ~covered
    v = (missing & -missing).bit_length() - 1
    return any(
        _dominates_within(closed, full, covered | closed[u], budget - 1) for u in iter_bits(closed[v])
    )


def domination_number_exact(g: DirectSumGraph) -> int:
    """Smallest ``k`` such that some ``k`` vertices dominate the graph.

    ``k = 1`` is a universal-vertex scan; larger ``k`` use iterative deepening.
    """
    if g.order == 0:
        return 0
    if universal_vertices(g):
        return 1
    closed = closed_neighbourhoods(g)
    k = 2
    while not _dominates_within(closed, g.full_mask, 0, k):
        k += 1
    return k


def upper_domination_exact(g: DirectSumGraph, cap: int = 16) -> int:
    """Largest minimal dominating set, by enumeration of all ``2^order`` subsets."""
    check_cap("updom_cap", g.order, cap)
    n = g.order
    full = g.full_mask
    closed = closed_neighbourhoods(g)
    cover = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        cover[mask] = cover[mask ^ low] | closed[low.bit_length() - 1]
    best = 0
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size <= best or cover[mask] != full:
            continue
        if all(cover[mask ^ (1 << v)] != full for v in iter_bits(mask)):
            best = size
    return best
