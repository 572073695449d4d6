"""One-shot computation of every invariant, degrading to cap notes when too large."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Any

from ..graph import DirectSumGraph
from .caps import CapExceeded, Caps, check_cap
from .cliques import maximal_clique_census, independence_number_exact
from .coloring import ChromaticResult, chromatic_number_exact
from .domination import domination_number_exact, upper_domination_exact
from .flow import edge_connectivity_exact
from .metric import (
    connectivity_and_diameter,
    degree_stats,
    girth_exact,
    is_connected,
    is_eulerian_exact,
    is_triangulated_exact,
)


@dataclass(frozen=True)
class InvariantReport:
    params: tuple[int, int, int]
    order: int
    size: int
    connected: bool
    diameter: float | int | None
    girth: float | int | None
    min_degree: int
    degrees_by_class: dict[tuple[int, int], tuple[int, ...]]
    is_eulerian: bool
    is_triangulated: bool
    domination_number: int
    edge_connectivity: int | None = None
    clique_number: int | None = None
    maximal_clique_census: dict[int, int] | None = None
    census_exhaustive: bool | None = None
    independence_number: int | None = None
    chromatic: ChromaticResult | None = None
    upper_domination: int | None = None
    cap_notes: tuple[str, ...] = field(default=())

    def invariants(self, mirror: bool = False) -> dict[str, Any]:
        """All fields except the parameters.

        With ``mirror=True`` the skeleton-class keys ``(l, m)`` become ``(m, l)``,
        which is what a report for the swapped parameters ``(q, s, r)`` should show.
        """
        out = {f.name: getattr(self, f.name) for f in fields(self) if f.name != "params"}
        if mirror:
            out["degrees_by_class"] = dict(
                sorted(((m, l), v) for (l, m), v in self.degrees_by_class.items())
            )
        return out

    def to_dict(self) -> dict[str, Any]:
        def num(v):
            return "inf" if isinstance(v, float) and math.isinf(v) else v

        q, r, s = self.params
        chrom = None
        if self.chromatic is not None:
            chrom = {
                "lower": self.chromatic.lower,
                "upper": self.chromatic.upper,
                "exact": self.chromatic.exact,
            }
        return {
            "params": {"q": q, "r": r, "s": s},
            "order": self.order,
            "size": self.size,
            "connected": self.connected,
            "diameter": num(self.diameter),
            "girth": num(self.girth),
            "min_degree": self.min_degree,
            "degrees_by_class": {f"{l},{m}": list(v) for (l, m), v in self.degrees_by_class.items()},
            "is_eulerian": self.is_eulerian,
            "is_triangulated": self.is_triangulated,
            "domination_number": self.domination_number,
            "edge_connectivity": self.edge_connectivity,
            "clique_number": self.clique_number,
            "maximal_clique_census": (
                None
                if self.maximal_clique_census is None
                else {str(k): v for k, v in self.maximal_clique_census.items()}
            ),
            "census_exhaustive": self.census_exhaustive,
            "independence_number": self.independence_number,
            "chromatic_number": chrom,
            "upper_domination": self.upper_domination,
            "cap_notes": list(self.cap_notes),
        }


def analyze(g: DirectSumGraph, caps: Caps | None = None) -> InvariantReport:
    caps = caps or Caps()
    notes: list[str] = []

    def capped(label: str, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CapExceeded as exc:
            notes.append(f"{label}: skipped ({exc})")
            return None

    def bfs_metrics():
        check_cap("bfs_cap", g.order, caps.bfs_cap)
        return connectivity_and_diameter(g), girth_exact(g)

    metrics = capped("diameter/girth", bfs_metrics)
    if metrics is None:
        connected, diameter, girth = is_connected(g), None, None
    else:
        (connected, diameter), girth = metrics
    stats = degree_stats(g)
    census = capped(
        "clique census", maximal_clique_census, g, cap=caps.clique_cap, budget=caps.clique_budget
    )
    if census is not None and not census.exhaustive:
        notes.append(f"clique census: partial (clique_budget {caps.clique_budget} exhausted)")
    chromatic = chromatic_number_exact(
        g, cap=caps.chromatic_cap, clique=census.largest if census is not None else None
    )
    if not chromatic.exact:
        notes.append(f"chromatic number: bounds only (chromatic_cap {caps.chromatic_cap} < order {g.order})")
    return InvariantReport(
        params=g.params.as_tuple(),
        order=g.order,
        size=g.size,
        connected=connected,
        diameter=diameter,
        girth=girth,
        min_degree=stats.min_degree,
        degrees_by_class=stats.by_class,
        is_eulerian=is_eulerian_exact(g),
        is_triangulated=is_triangulated_exact(g),
        domination_number=domination_number_exact(g),
        edge_connectivity=capped("edge connectivity", edge_connectivity_exact, g, cap=caps.edgeconn_cap),
        clique_number=None if census is None or not census.exhaustive else census.clique_number,
        maximal_clique_census=None if census is None else census.census,
        census_exhaustive=None if census is None else census.exhaustive,
        independence_number=capped(
            "independence number", independence_number_exact, g, cap=caps.independence_cap
        ),
        chromatic=chromatic,
        upper_domination=capped("upper domination", upper_domination_exact, g, cap=caps.updom_cap),
        cap_notes=tuple(notes),
    )
