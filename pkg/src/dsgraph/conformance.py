"""Side-by-side comparison of closed-form predictions with exhaustive computation."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import IO, Any, Iterable, Sequence

from . import __version__
from . import oracle
from .algebra import SpaceParams
from .errors import ResourceError, UsageError
from .graph import DirectSumGraph, build_graph, iter_bits
from .invariants import (
    CapExceeded,
    Caps,
    chromatic_number_exact,
    connectivity_and_diameter,
    degree_stats,
    domination_number_exact,
    edge_connectivity_exact,
    girth_exact,
    independence_number_exact,
    is_clique,
    is_eulerian_exact,
    is_maximal_clique,
    is_triangulated_exact,
    maximal_clique_census,
    upper_domination_exact,
)
from .invariants.caps import check_cap

CHECK_IDS = (
    "ORDER",
    "SIZE",
    "DEGREE-CLASS",
    "DIAMETER",
    "GIRTH",
    "MINDEG",
    "EDGECONN",
    "EULERIAN",
    "TRIANGULATED",
    "DOMINATION",
    "UPPER-DOM",
    "INDEPENDENCE",
    "CLIQUE-NUMBER",
    "CLIQUE-CENSUS",
    "CHROMATIC-BOUNDS",
    "COMPLETENESS",
)

# the only situations allowed to report "exempt"
EXEMPTIONS = {
    "T1-SINGLE-VERTEX": "(2,1,1) is one vertex: diameter 0, not the predicted 1",
    "T13-EDGELESS": "(2,1,1) is one vertex with no edges: vacuously Eulerian",
    "C3-NONINTEGRAL": "chromatic upper bound is a non-integral rational when r*s is odd",
}

# known slips in hand-drawn pictures of small cases; informational only, never exemptions
DRAWING_NOTES = {
    "DRAWING-222-EDGES": "an 18-edge picture of (2,2,2) misses a1+b1+b2 -- a1+a2+b2 and a2+b1+b2 -- a1+a2+b1 (20 edges)",
    "DRAWING-213-CAPTION": "a picture labelled dim(W)=2 but using b1,b2,b3 is (2,1,3): 7 vertices, 15 edges",
}

STATUSES = ("match", "mismatch", "skipped", "exempt")


def _plain(value: Any) -> Any:
    """JSON-native rendering for predicted/computed values."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return ",".join(str(_plain(v)) for v in value)
    return value


@dataclass(frozen=True)
class CheckResult:
    check: str
    q: int
    r: int
    s: int
    predicted: Any
    computed: Any
    status: str
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise UsageError(f"unknown status {self.status!r}")
        if self.status == "exempt" and self.detail not in EXEMPTIONS:
            raise UsageError(f"exemption {self.detail!r} is not registered")
        object.__setattr__(self, "predicted", _plain(self.predicted))
        object.__setattr__(self, "computed", _plain(self.computed))

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.q, self.r, self.s)

    @property
    def status_text(self) -> str:
        if self.status in ("skipped", "exempt"):
            return f"{self.status}({self.detail})"
        return self.status

    def sort_key(self) -> tuple:
        return (self.q, self.r, self.s, CHECK_IDS.index(self.check))

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "predicted": self.predicted,
            "computed": self.computed,
            "status": self.status,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckResult":
        return cls(d["check"], d["q"], d["r"], d["s"], d["predicted"], d["computed"], d["status"], d.get("detail", ""))


@dataclass(frozen=True)
class CliqueFamily:
    """One predicted maximal clique, with the fixed indices ``i`` (U side) and ``j`` (W side)."""

    label: str
    size: int
    min_u: int
    min_w: int
    i: int | None = None
    j: int | None = None

    def contains(self, umask: int, wmask: int) -> bool:
        if umask.bit_count() < self.min_u or wmask.bit_count() < self.min_w:
            return False
        if self.i is not None and not umask >> (self.i - 1) & 1:
            return False
        if self.j is not None and not wmask >> (self.j - 1) & 1:
            return False
        return True

    def members(self, g: DirectSumGraph) -> int:
        mask = 0
        for k, x in enumerate(g.vertices):
            if self.contains(x.umask, x.wmask):
                mask |= 1 << k
        return mask

    def name(self) -> str:
        idx = []
        if self.i is not None:
            idx.append(f"i={self.i}")
        if self.j is not None:
            idx.append(f"j={self.j}")
        return f"{self.label}({','.join(idx)})" if idx else self.label


def predicted_clique_families(params: SpaceParams) -> list[CliqueFamily]:
    """Every clique the four family theorems describe, one entry per fixed ``(i, j)`` choice."""
    r, s = params.r, params.s
    out = []
    for k1 in range(1, r // 2 + 1):
        for k2 in range(1, s // 2 + 1):
            size, label = oracle.predict_clique_family_size(params, k1, k2).value
            out += [CliqueFamily(label, size, k1, k2, i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
    for k1 in range(1, r // 2 + 1):
        size, label = oracle.predict_clique_family_size(params, k1, s).value
        out += [CliqueFamily(label, size, k1, s // 2 + 1, i, None) for i in range(1, r + 1)]
    for k2 in range(1, s // 2 + 1):
        size, label = oracle.predict_clique_family_size(params, r, k2).value
        out += [CliqueFamily(label, size, r // 2 + 1, k2, None, j) for j in range(1, s + 1)]
    size, label = oracle.predict_clique_family_size(params, r, s).value
    out.append(CliqueFamily(label, size, r // 2 + 1, s // 2 + 1))
    return out


def _fmt_census(census: dict[int, int]) -> str:
    return ";".join(f"{k}:{v}" for k, v in sorted(census.items()))


class _Point:
    """Lazily computed ground truth for one built graph."""

    def __init__(self, g: DirectSumGraph, caps: Caps):
        self.g = g
        self.caps = caps

    @cached_property
    def metrics(self):
        check_cap("bfs_cap", self.g.order, self.caps.bfs_cap)
        return connectivity_and_diameter(self.g)

    @cached_property
    def girth(self):
        check_cap("bfs_cap", self.g.order, self.caps.bfs_cap)
        return girth_exact(self.g)

    @cached_property
    def census(self):
        return maximal_clique_census(
            self.g, cap=self.caps.clique_cap, budget=self.caps.clique_budget, keep_cliques=True
        )

    @cached_property
    def chromatic(self):
        try:
            clique = self.census.largest
        except CapExceeded:
            clique = None
        return chromatic_number_exact(self.g, cap=self.caps.chromatic_cap, clique=clique)


def _result(p: SpaceParams, check: str, predicted, computed, status: str, detail: str = "") -> CheckResult:
    return CheckResult(check, p.q, p.r, p.s, predicted, computed, status, detail)


def _compare(p: SpaceParams, check: str, predicted, computed) -> CheckResult:
    return _result(p, check, predicted, computed, "match" if predicted == computed else "mismatch")


def _check_census(p: SpaceParams, pt: _Point) -> CheckResult:
    g = pt.g
    families = predicted_clique_families(p)
    tally: dict[str, list[int]] = {}
    for fam in families:
        tally.setdefault(fam.label, []).append(fam.size)
    predicted = ";".join(f"{label}:{sizes[0]}x{len(sizes)}" for label, sizes in tally.items())

    failures: dict[str, list[str]] = {}
    masks = set()
    for fam in families:
        mask = fam.members(g)
        masks.add(mask)
        if mask.bit_count() != fam.size:
            failures.setdefault("wrong size", []).append(f"{fam.name()} has {mask.bit_count()} != {fam.size}")
        elif not is_clique(g, mask):
            failures.setdefault("not a clique", []).append(fam.name())
        elif not is_maximal_clique(g, mask):
            failures.setdefault("non-maximal", []).append(f"{fam.name()} size {fam.size}")

    def describe() -> str:
        return "; ".join(f"{kind}: {', '.join(items)}" for kind, items in failures.items())

    try:
        census = pt.census
    except CapExceeded as exc:
        if failures:
            return _result(p, "CLIQUE-CENSUS", predicted, "n/a", "mismatch", describe())
        return _result(p, "CLIQUE-CENSUS", predicted, "n/a", "skipped", str(exc))
    unclassified = sum(1 for c in census.cliques if c not in masks)
    notes = [describe()] if failures else []
    notes.append(f"unclassified maximal cliques: {unclassified}")
    if not census.exhaustive:
        notes.append(f"census partial (clique_budget {pt.caps.clique_budget})")
    status = "mismatch" if failures else "match"
    return _result(p, "CLIQUE-CENSUS", predicted, _fmt_census(census.census), status, "; ".join(notes))


def _check_chromatic(p: SpaceParams, pt: _Point) -> CheckResult:
    pred = oracle.predict_chromatic_bounds(p)
    if pred.applicability is oracle.Applicability.OUT_OF_HYPOTHESIS:
        return _result(p, "CHROMATIC-BOUNDS", "n/a", "n/a", "skipped", f"out-of-hypothesis: {pred.note}")
    lower, upper = pred.value
    chrom = pt.chromatic
    computed = chrom.lower if chrom.exact else f"[{chrom.lower},{chrom.upper}]"
    predicted = f"[{lower},{upper}]"
    if chrom.upper < lower or chrom.lower > upper:
        return _result(p, "CHROMATIC-BOUNDS", predicted, computed, "mismatch")
    if not chrom.exact:
        return _result(
            p, "CHROMATIC-BOUNDS", predicted, computed, "skipped",
            f"chromatic_cap {pt.caps.chromatic_cap} < order {p.order}",
        )
    if pred.applicability is oracle.Applicability.EDGE_CASE:
        return _result(p, "CHROMATIC-BOUNDS", predicted, computed, "exempt", "C3-NONINTEGRAL")
    return _result(p, "CHROMATIC-BOUNDS", predicted, computed, "match")


def _check_one(check: str, p: SpaceParams, pt: _Point) -> CheckResult:
    g = pt.g
    if check == "ORDER":
        return _compare(p, check, oracle.predict_order_size(p).value[0], g.order)
    if check == "SIZE":
        total = sum(g.degrees)
        computed = total // 2 if total % 2 == 0 else f"odd degree sum {total}"
        return _compare(p, check, oracle.predict_order_size(p).value[1], computed)
    if check == "DEGREE-CLASS":
        by_class = degree_stats(g).by_class
        pred = {k: (oracle.predict_degree(p, *k).value,) for k in by_class}
        fmt = lambda d: ";".join(f"{l},{m}:{'|'.join(map(str, v))}" for (l, m), v in d.items())  # noqa: E731,E741
        return _compare(p, check, fmt(pred), fmt(by_class))
    if check == "DIAMETER":
        predicted = oracle.predict_diameter_complete(p).value[0]
        connected, diameter = pt.metrics
        if g.order == 1 and diameter == 0:
            return _result(p, check, predicted, diameter, "exempt", "T1-SINGLE-VERTEX")
        return _compare(p, check, predicted, diameter)
    if check == "GIRTH":
        return _compare(p, check, oracle.predict_girth_triangulated(p).value[0], pt.girth)
    if check == "MINDEG":
        return _compare(p, check, oracle.predict_min_degree_edge_connectivity(p).value[0], min(g.degrees))
    if check == "EDGECONN":
        predicted = oracle.predict_min_degree_edge_connectivity(p).value[1]
        return _compare(p, check, predicted, edge_connectivity_exact(g, cap=pt.caps.edgeconn_cap))
    if check == "EULERIAN":
        predicted = oracle.predict_eulerian(p).value
        computed = is_eulerian_exact(g)
        if g.order == 1 and computed:
            return _result(p, check, predicted, computed, "exempt", "T13-EDGELESS")
        return _compare(p, check, predicted, computed)
    if check == "TRIANGULATED":
        return _compare(p, check, oracle.predict_girth_triangulated(p).value[1], is_triangulated_exact(g))
    if check == "DOMINATION":
        return _compare(p, check, oracle.predict_domination_independence(p).value[0], domination_number_exact(g))
    if check == "UPPER-DOM":
        bound = oracle.predict_domination_independence(p).value[1]
        computed = upper_domination_exact(g, cap=pt.caps.updom_cap)
        return _result(p, check, f"<={bound}", computed, "match" if computed <= bound else "mismatch")
    if check == "INDEPENDENCE":
        predicted = oracle.predict_domination_independence(p).value[2]
        return _compare(p, check, predicted, independence_number_exact(g, cap=pt.caps.independence_cap))
    if check == "CLIQUE-NUMBER":
        predicted = oracle.predict_clique_number(p).value
        census = pt.census
        if not census.exhaustive:
            return _result(p, check, predicted, "n/a", "skipped", f"clique_budget {pt.caps.clique_budget} exhausted")
        return _compare(p, check, predicted, census.clique_number)
    if check == "CLIQUE-CENSUS":
        return _check_census(p, pt)
    if check == "CHROMATIC-BOUNDS":
        return _check_chromatic(p, pt)
    if check == "COMPLETENESS":
        computed = g.size == g.order * (g.order - 1) // 2
        return _compare(p, check, oracle.predict_diameter_complete(p).value[1], computed)
    raise UsageError(f"unknown check {check!r}")


def _selection(checks: Iterable[str] | None) -> list[str]:
    if checks is None:
        return list(CHECK_IDS)
    chosen = list(dict.fromkeys(checks))
    unknown = [c for c in chosen if c not in CHECK_IDS]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    return sorted(chosen, key=CHECK_IDS.index)


def run_checks(
    params: SpaceParams, checks: Iterable[str] | None = None, caps: Caps | None = None
) -> list[CheckResult]:
    """Build the graph once and run the selected checks (all of them by default)."""
    caps = caps or Caps()
    selected = _selection(checks)
    if not selected:
        return []
    pt = _Point(build_graph(params), caps)
    out = []
    for check in selected:
        try:
            out.append(_check_one(check, params, pt))
        except CapExceeded as exc:
            out.append(_result(params, check, "n/a", "n/a", "skipped", str(exc)))
    return out


@dataclass(frozen=True)
class SweepReport:
    grid: dict[str, list[int]]
    results: tuple[CheckResult, ...]
    caps: dict[str, int]
    version: str = __version__
    summary: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.results, key=CheckResult.sort_key))
        object.__setattr__(self, "results", ordered)
        tally = {status: 0 for status in STATUSES}
        for res in ordered:
            tally[res.status] += 1
        object.__setattr__(self, "summary", tally)

    @property
    def mismatches(self) -> int:
        return self.summary["mismatch"]

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": self.grid,
            "version": self.version,
            "caps": self.caps,
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SweepReport":
        report = cls(
            grid={k: list(v) for k, v in d["grid"].items()},
            results=tuple(CheckResult.from_dict(r) for r in d["results"]),
            caps=dict(d["caps"]),
            version=d["version"],
        )
        if report.summary != d["summary"]:
            raise UsageError("summary counts do not match the results")
        return report


def _run_point(args: tuple[int, int, int, tuple[str, ...] | None, Caps]) -> list[CheckResult]:
    q, r, s, checks, caps = args
    try:
        params = SpaceParams(q, r, s, vertex_cap=caps.vertex_cap)
    except ResourceError as exc:
        return [CheckResult(c, q, r, s, "n/a", "n/a", "skipped", str(exc)) for c in _selection(checks)]
    return run_checks(params, checks, caps)


def sweep_points(
    points: Sequence[tuple[int, int, int]],
    caps: Caps | None = None,
    checks: Iterable[str] | None = None,
    workers: int = 1,
    grid: dict[str, list[int]] | None = None,
) -> SweepReport:
    """Run the checks over explicit ``(q, r, s)`` points; ordering of the report is canonical."""
    caps = caps or Caps()
    if not points:
        raise UsageError("empty grid")
    selected = tuple(_selection(checks))
    for q, r, s in points:
        # validate parameters up front; only the vertex cap may defer to a skip
        try:
            SpaceParams(q, r, s, vertex_cap=caps.vertex_cap)
        except ResourceError:
            pass
    jobs = [(q, r, s, selected, caps) for q, r, s in sorted(set(points))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_point, jobs))
    else:
        chunks = [_run_point(job) for job in jobs]
    if grid is None:
        grid = {
            "q": sorted({p[0] for p in points}),
            "r": sorted({p[1] for p in points}),
            "s": sorted({p[2] for p in points}),
        }
    return SweepReport(grid, tuple(r for chunk in chunks for r in chunk), caps.as_dict())


def sweep_grid(
    q_set: Iterable[int],
    r_range: Iterable[int],
    s_range: Iterable[int],
    caps: Caps | None = None,
    checks: Iterable[str] | None = None,
    workers: int = 1,
) -> SweepReport:
    qs, rs, ss = sorted(set(q_set)), sorted(set(r_range)), sorted(set(s_range))
    points = list(product(qs, rs, ss))
    return sweep_points(points, caps, checks, workers, grid={"q": qs, "r": rs, "s": ss})


def default_grid(max_order: int = 1000) -> list[tuple[int, int, int]]:
    """q in {2, 3, 5}, 1 <= r <= s <= 4, order at most ``max_order``."""
    return [
        (q, r, s)
        for q in (2, 3, 5)
        for r in range(1, 5)
        for s in range(r, 5)
        if (q**r - 1) * (q**s - 1) <= max_order
    ]


def summary_line(report: SweepReport) -> str:
    t = report.summary
    return f"matches: {t['match']}, mismatches: {t['mismatch']}, exempt: {t['exempt']}, skipped: {t['skipped']}"


def _render_table(report: SweepReport) -> str:
    lines = [f"dsgraph {report.version} conformance report"]
    lines.append("caps: " + " ".join(f"{k}={v}" for k, v in report.caps.items()))
    current = None
    rows: list[tuple[str, str, str, str, str]] = []

    def flush():
        if not rows:
            return
        w = [max(len(row[k]) for row in rows) for k in range(3)]
        for check, pred, comp, status, detail in rows:
            lines.append(f"  {check.ljust(w[0])}  {pred.ljust(w[1])}  {comp.ljust(w[2])}  {status}".rstrip())
            if detail:
                lines.append(f"    {detail}")
        rows.clear()

    for res in report.results:
        if res.params != current:
            flush()
            current = res.params
            lines.append("")
            lines.append(f"(q, r, s) = ({res.q}, {res.r}, {res.s})")
            rows.append(("check", "predicted", "computed", "status", ""))
        detail = res.detail if res.status in ("match", "mismatch") else ""
        rows.append((res.check, str(res.predicted), str(res.computed), res.status_text, detail))
    flush()
    lines.append("")
    lines.append(summary_line(report))
    return "\n".join(lines) + "\n"


def _render_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "q", "r", "s", "predicted", "computed", "status"])
    for res in report.results:
        writer.writerow([res.check, res.q, res.r, res.s, res.predicted, res.computed, res.status_text])
    return buf.getvalue()


def _render_json(report: SweepReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


RENDERERS = {"table": _render_table, "json": _render_json, "csv": _render_csv}


def render_report(report: SweepReport, fmt: str, sink: IO[str]) -> None:
    try:
        render = RENDERERS[fmt]
    except KeyError:
        raise UsageError(f"unknown report format {fmt!r}; choose from {sorted(RENDERERS)}") from None
    sink.write(render(report))


def render_string(report: SweepReport, fmt: str) -> str:
    buf = io.StringIO()
    render_report(report, fmt, buf)
    return buf.getvalue()


def single_point_report(results: list[CheckResult], params: SpaceParams, caps: Caps) -> SweepReport:
    return SweepReport({"q": [params.q], "r": [params.r], "s": [params.s]}, tuple(results), caps.as_dict())
