"""Chromatic number: exact DSATUR branch and bound, or clique/greedy bounds."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import DirectSumGraph, iter_bits
from .cliques import greedy_clique, maximum_clique


@dataclass(frozen=True)
class ChromaticResult:
    """``coloring`` is a proper colouring using ``upper`` colours."""

    lower: int
    upper: int
    exact: bool
    coloring: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None


def _dsatur_order_colouring(g: DirectSumGraph, seed: tuple[int, ...] = ()) -> list[int]:
    """Greedy largest-saturation-first colouring; vertices in ``seed`` are coloured first."""
    n = g.order
    colours = [-1] * n
    seen_colours = [0] * n  # bitmask of neighbour colours
    for v in list(seed) + [-1] * (n - len(seed)):
        if v < 0:
            v = max(
                (u for u in range(n) if colours[u] < 0),
                key=lambda u: (seen_colours[u].bit_count(), g.degrees[u], -u),
            )
        forbid = seen_colours[v]
        c = (~forbid & (forbid + 1)).bit_length() - 1
        colours[v] = c
        for u in iter_bits(g.rows[v]):
            seen_colours[u] |= 1 << c
    return colours


def greedy_colouring_bound(g: DirectSumGraph) -> int:
    if g.order == 0:
        return 0
    return max(_dsatur_order_colouring(g)) + 1


def is_proper_colouring(g: DirectSumGraph, colours) -> bool:
    return all(colours[i] != colours[j] for i, j in g.edges())


def chromatic_number_exact(g: DirectSumGraph, cap: int = 32, clique: int | None = None) -> ChromaticResult:
    """Exact chromatic number when ``order <= cap``; otherwise ``(lower, upper)`` bounds.

    ``clique`` may supply a known clique (bitmask) for the lower bound; by
    default a maximum clique is searched for when ``order <= cap`` and a greedy
    clique is used above it.  The search colours the clique first (fixing its colours breaks the
    colour-permutation symmetry) and then branches on the uncoloured vertex of
    largest saturation, ties broken by degree and then by rank.
    """
    n = g.order
    if n == 0:
        return ChromaticResult(0, 0, True, ())
    if clique is None:
        clique = maximum_clique(g.rows, g.full_mask) if n <= cap else greedy_clique(g)
    seed = tuple(iter_bits(clique))
    lower = len(seed)
    greedy = _dsatur_order_colouring(g, seed)
    upper = max(greedy) + 1
    if n > cap:
        return ChromaticResult(lower, upper, lower == upper, tuple(greedy))
    if lower == upper:
        return ChromaticResult(lower, upper, True, tuple(greedy))

    best = [upper, list(greedy)]
    colours = [-1] * n
    sat = [0] * n
    for c, v in enumerate(seed):
        colours[v] = c
        for u in iter_bits(g.rows[v]):
            sat[u] |= 1 << c

    def pick() -> int:
        return max(
            (u for u in range(n) if colours[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degrees[u], -u),
        )

    def search(coloured: int, used: int) -> bool:
        if used >= best[0]:
            return False
        if coloured == n:
            best[0], best[1] = used, colours[:]
            return used == lower
        v = pick()
        forbid = sat[v]
        for c in range(min(used + 1, best[0] - 1)):
            if forbid >> c & 1:
                continue
            touched = [u for u in iter_bits(g.rows[v]) if colours[u] < 0 and not sat[u] >> c & 1]
            colours[v] = c
            for u in touched:
                sat[u] |= 1 << c
            done = search(coloured + 1, max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            colours[v] = -1
            if done:
                return True
        return False

    search(lower, lower)
    return ChromaticResult(best[0], best[0], True, tuple(best[1]))
