"""Clique kernels on int-bitset adjacency rows.

Maximal cliques are listed by Bron-Kerbosch with Tomita pivoting; the maximum
clique uses branch and bound with a greedy-colouring bound.  Branching always
follows rank order so results and run times are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import DirectSumGraph, iter_bits
from .caps import check_cap


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class CliqueCensus:
    clique_number: int
    census: dict[int, int]
    exhaustive: bool
    cliques: tuple[int, ...] | None = None
    largest: int = 0

    @property
    def total(self) -> int:
        return sum(self.census.values())


def iter_maximal_cliques(rows: tuple[int, ...], candidates: int, budget: int | None = None):
    """Yield every maximal clique (as a bitmask) of the subgraph induced on ``candidates``.

    Raises ``_BudgetExhausted`` after ``budget`` cliques when a budget is given.
    """
    found = 0
    # explicit stack instead of recursion: depth can reach the clique number
    stack = [(0, candidates, 0, None)]
    while stack:
        r, p, x, todo = stack.pop()
        if todo is None:
            if not p:
                if not x:
                    found += 1
                    if budget is not None and found > budget:
                        raise _BudgetExhausted
                    yield r
                continue
            pivot_gain, pivot = -1, -1
            for u in iter_bits(p | x):
                gain = (p & rows[u]).bit_count()
                if gain > pivot_gain:
                    pivot_gain, pivot = gain, u
            todo = p & ~rows[pivot]
        if not todo:
            continue
        v = (todo & -todo).bit_length() - 1
        bit = 1 << v
        stack.append((r, p & ~bit, x | bit, todo & ~bit))
        stack.append((r | bit, p & rows[v], x & rows[v], None))


def maximal_clique_census(
    g: DirectSumGraph, cap: int = 300, budget: int = 100_000, keep_cliques: bool = False
) -> CliqueCensus:
    """Enumerate all maximal cliques, tallying them by size.

    If more than ``budget`` maximal cliques exist the enumeration stops and the
    partial census is returned with ``exhaustive=False``.
    """
    check_cap("clique_cap", g.order, cap)
    census: dict[int, int] = {}
    kept: list[int] = []
    largest = 0
    exhaustive = True
    try:
        for clique in iter_maximal_cliques(g.rows, g.full_mask, budget):
            size = clique.bit_count()
            if size > largest.bit_count():
                largest = clique
            census[size] = census.get(size, 0) + 1
            if keep_cliques:
                kept.append(clique)
    except _BudgetExhausted:
        exhaustive = False
    census = dict(sorted(census.items()))
    return CliqueCensus(
        clique_number=max(census, default=0),
        census=census,
        exhaustive=exhaustive,
        cliques=tuple(sorted(kept)) if keep_cliques else None,
        largest=largest,
    )


def _colour_bounds(rows: tuple[int, ...], p: int) -> list[tuple[int, int]]:
    """Greedy colour classes over ``p``: list of ``(vertex, colour number)`` by colour."""
    out = []
    colour = 0
    uncoloured = p
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = (q & -q).bit_length() - 1
            bit = 1 << v
            q &= ~rows[v] & ~bit
            uncoloured &= ~bit
            out.append((v, colour))
    return out


def maximum_clique(rows: tuple[int, ...], candidates: int) -> int:
    """A maximum clique of the subgraph induced on ``candidates``, as a bitmask."""
    best = [0, 0]  # mask, size

    def expand(r: int, size: int, p: int) -> None:
        for v, bound in reversed(_colour_bounds(rows, p)):
            if size + bound <= best[1]:
                return
            bit = 1 << v
            sub = p & rows[v]
            if sub:
                expand(r | bit, size + 1, sub)
            elif size + 1 > best[1]:
                best[0], best[1] = r | bit, size + 1
            p &= ~bit

    if candidates:
        expand(0, 0, candidates)
    return best[0]


def clique_number(g: DirectSumGraph) -> int:
    return maximum_clique(g.rows, g.full_mask).bit_count()


def greedy_clique(g: DirectSumGraph) -> int:
    """A maximal clique grown greedily by degree; a cheap lower bound on the clique number."""
    p = g.full_mask
    clique = 0
    while p:
        v = max(iter_bits(p), key=lambda u: ((p & g.rows[u]).bit_count(), -u))
        clique |= 1 << v
        p &= g.rows[v]
    return clique


def complement_rows(g: DirectSumGraph) -> tuple[int, ...]:
    full = g.full_mask
    return tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows))


def maximum_independent_set(g: DirectSumGraph) -> int:
    return maximum_clique(complement_rows(g), g.full_mask)


def independence_number_exact(g: DirectSumGraph, cap: int = 300) -> int:
    """Size of a maximum independent set (maximum clique of the complement)."""
    check_cap("independence_cap", g.order, cap)
    return maximum_independent_set(g).bit_count()


def is_clique(g: DirectSumGraph, mask: int) -> bool:
    return all((g.rows[v] | (1 << v)) & mask == mask for v in iter_bits(mask))


def extensions(g: DirectSumGraph, mask: int) -> int:
    """Vertices outside ``mask`` adjacent to every member of ``mask``."""
    common = g.full_mask & ~mask
    for v in iter_bits(mask):
        common &= g.rows[v]
    return common


def is_maximal_clique(g: DirectSumGraph, mask: int) -> bool:
    return bool(mask) and is_clique(g, mask) and not extensions(g, mask)
