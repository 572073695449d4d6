"""Exit criteria over the default grid: q in {2, 3, 5}, 1 <= r <= s <= 4, order <= 1000.

Each test prints one PASS/FAIL line; the lines are repeated at the end of the
pytest run.  ``python tests/test_acceptance.py`` runs them without pytest.
"""

import math
import sys
import time
from fractions import Fraction
from functools import lru_cache
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, acceptance_grid, graph  # noqa: E402

from dsgraph import DSVector, SpaceParams  # noqa: E402
from dsgraph import oracle  # noqa: E402
from dsgraph.conformance import render_string, sweep_points  # noqa: E402
from dsgraph.invariants import (  # noqa: E402
    analyze,
    chromatic_number_exact,
    connectivity_and_diameter,
    degree_stats,
    domination_number_exact,
    edge_connectivity_exact,
    girth_exact,
    independence_number_exact,
    is_dominating,
    is_eulerian_exact,
    is_triangulated_exact,
    maximal_clique_census,
    path_witness,
    universal_vertices,
    upper_domination_exact,
)

pytestmark = pytest.mark.acceptance

GRID = acceptance_grid()


def upto(order):
    return [p for p in GRID if graph(*p).order <= order]


def verdict(n, title, failures, summary=""):
    ok = not failures
    line = f"criterion {n:>2} {title}: {'PASS' if ok else 'FAIL'}"
    if summary:
        line += f" ({summary})"
    if failures:
        line += " -- " + "; ".join(failures[:10])
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def default_sweep(workers=1):
    return sweep_points(GRID, workers=workers)


def test_c01_order_size():
    bad = []
    for p in GRID:
        g = graph(*p)
        pred = oracle.predict_order_size(g.params).value
        if (g.order, g.size) != pred or len(g.vertices) != g.order or len(list(g.edges())) != g.size:
            bad.append(f"{p}: computed {(g.order, g.size)} predicted {pred}")
    for p, want in (((2, 2, 2), (9, 20)), ((2, 1, 3), (7, 15))):
        if (graph(*p).order, graph(*p).size) != want:
            bad.append(f"{p} spot value {want}")
    verdict(1, "order and size", bad, f"{len(GRID)} grid points")


def test_c02_degree():
    bad = []
    checked = 0
    for p in GRID:
        g = graph(*p)
        for i, x in enumerate(g.vertices):
            sk_l, sk_m = x.umask.bit_count(), x.wmask.bit_count()
            want = oracle.predict_degree(g.params, sk_l, sk_m).value
            checked += 1
            if g.degrees[i] != want:
                bad.append(f"{p} vertex {x}: {g.degrees[i]} != {want}")
        if sum(g.degrees) != 2 * g.size:
            bad.append(f"{p}: degree sum {sum(g.degrees)} != 2*{g.size}")
    verdict(2, "degree formula", bad, f"{checked} vertices")


def test_c03_diameter_connectivity():
    bad = []
    for p in GRID:
        g = graph(*p)
        if g.order < 2:
            continue
        want = 1 if g.params.n == 2 else 2
        got = connectivity_and_diameter(g)
        if got != (True, want):
            bad.append(f"{p}: {got} expected (True, {want})")
    pairs = 0
    for p in ((2, 2, 2), (2, 1, 3)):
        g = graph(*p)
        for i in range(g.order):
            for j in range(i + 1, g.order):
                if g.has_edge(i, j):
                    continue
                pairs += 1
                x, y = g.vertices[i], g.vertices[j]
                path = path_witness(g, x, y)
                ids = [g.index(v) for v in path]
                if path[0] != x or path[-1] != y or len(path) != 3 or not all(
                    g.has_edge(a, b) for a, b in zip(ids, ids[1:])
                ):
                    bad.append(f"{p}: bad witness {tuple(map(str, path))}")
    verdict(3, "diameter and connectivity", bad, f"{pairs} non-adjacent pairs witnessed")


def test_c04_min_degree_edge_connectivity():
    bad = []
    pts = upto(300)
    for p in pts:
        g = graph(*p)
        want = oracle.predict_min_degree_edge_connectivity(g.params).value
        got = (degree_stats(g).min_degree, edge_connectivity_exact(g))
        if got != want:
            bad.append(f"{p}: (delta, lambda) = {got} expected {want}")
    verdict(4, "min degree and edge connectivity", bad, f"{len(pts)} points with order <= 300")


def test_c05_eulerian():
    bad = []
    for p in GRID:
        g = graph(*p)
        if g.order < 2:
            continue
        if not any(d % 2 for d in g.degrees) or is_eulerian_exact(g):
            bad.append(f"{p}: no odd-degree vertex")
    fired = [r for r in default_sweep().results if r.check == "EULERIAN" and r.status == "exempt"]
    if [r.params for r in fired] != [(2, 1, 1)]:
        bad.append(f"EULERIAN exemptions fired at {[r.params for r in fired]}")
    verdict(5, "not Eulerian", bad, f"exemption fired {len(fired)} time(s)")


def test_c06_triangulated_girth():
    expected = {
        (2, 1, 1): (math.inf, False),
        (3, 1, 1): (3, True),
        (2, 1, 2): (math.inf, False),
        (3, 1, 2): (3, True),
    }
    bad = []
    for p in GRID:
        g = graph(*p)
        got = (girth_exact(g), is_triangulated_exact(g))
        want = expected.get(p, (3, True) if g.params.n >= 4 else None)
        pred = oracle.predict_girth_triangulated(g.params).value[:2]
        if want is not None and got != want:
            bad.append(f"{p}: {got} expected {want}")
        if got != pred:
            bad.append(f"{p}: {got} vs case table {pred}")
    verdict(6, "triangulated and girth", bad)


def test_c07_domination():
    bad = []
    for p in GRID:
        g = graph(*p)
        q, r, s = p
        ones = g.index(DSVector(g.params, (1,) * r, (1,) * s))
        if domination_number_exact(g) != 1:
            bad.append(f"{p}: domination number != 1")
        if ones not in universal_vertices(g):
            bad.append(f"{p}: all-ones vertex not universal")
    verdict(7, "domination number", bad)


def test_c08_upper_domination():
    pts = upto(16)
    bad = []
    for p in pts:
        g = graph(*p)
        q, r, s = p
        rs = r * s
        got = upper_domination_exact(g)
        if got != rs:
            bad.append(f"{p}: {got} != rs = {rs}")
        # the r*s vectors a_i + b_j
        mask = 0
        for i, j in product(range(r), range(s)):
            a = tuple(int(k == i) for k in range(r))
            b = tuple(int(k == j) for k in range(s))
            mask |= 1 << g.index(DSVector(g.params, a, b))
        minimal = is_dominating(g, mask) and all(
            not is_dominating(g, mask & ~(1 << v)) for v in range(g.order) if mask >> v & 1
        )
        if not minimal:
            bad.append(f"{p}: a_i+b_j set is not a minimal dominating set")
    verdict(8, "upper domination", bad, f"points {pts}")


def test_c09_independence():
    bad = []
    pts = upto(300)
    for p in pts:
        g = graph(*p)
        want = 1 if g.params.n == 2 else p[1] * p[2]
        got = independence_number_exact(g)
        if got != want:
            bad.append(f"{p}: {got} != {want}")
    verdict(9, "independence number", bad, f"{len(pts)} points with order <= 300")


def test_c10_clique_number():
    bad = []
    pts = upto(300)
    for p in pts:
        g = graph(*p)
        t0 = time.perf_counter()
        census = maximal_clique_census(g)
        elapsed = time.perf_counter() - t0
        want = oracle.predict_clique_number(g.params).value
        if not census.exhaustive:
            bad.append(f"{p}: census not exhaustive")
        if census.clique_number != want:
            bad.append(f"{p}: enumerated {census.clique_number} != predicted {want}")
        if p[0] == 2 and g.params.n >= 4 and census.clique_number != 2 ** (g.params.n - 2):
            bad.append(f"{p}: omega {census.clique_number} != 2^(n-2)")
        if p == (3, 2, 2):
            if census.clique_number != 36:
                bad.append(f"(3, 2, 2): omega {census.clique_number} != 36")
            if elapsed >= 60:
                bad.append(f"(3, 2, 2) took {elapsed:.1f}s")
    verdict(10, "clique number", bad, f"{len(pts)} points with order <= 300")


def test_c11_clique_census():
    from dsgraph.conformance import run_checks

    bad = []
    g = graph(2, 2, 2)
    census = maximal_clique_census(g, keep_cliques=True)
    if census.census != {4: 4}:
        bad.append(f"census {census.census}")
    t14 = [f for f in oracle_families((2, 2, 2)) if f.label.startswith("T14")]
    if len(t14) != 4 or any(f.size != 4 for f in t14):
        bad.append(f"T14 families {[(f.label, f.size) for f in t14]}")
    if sorted(f.members(g) for f in t14) != sorted(census.cliques):
        bad.append("T14 families are not the enumerated maximal cliques")
    (res,) = run_checks(g.params, ["CLIQUE-CENSUS"])
    if res.status != "mismatch" or "non-maximal" not in res.detail or "T17" not in res.detail:
        bad.append(f"T17 finding not reported: {res.status} {res.detail}")
    verdict(11, "clique census at (2,2,2)", bad, "T17 family reported non-maximal as expected")


def oracle_families(p):
    from dsgraph.conformance import predicted_clique_families

    return predicted_clique_families(SpaceParams(*p))


def test_c12_chromatic():
    bad = []
    exact_pts = upto(32)
    for p in exact_pts:
        res = chromatic_number_exact(graph(*p))
        if not res.exact:
            bad.append(f"{p}: chromatic number not exact")
    res = chromatic_number_exact(graph(2, 2, 2))
    if res.value != 4 or oracle.predict_chromatic_bounds(SpaceParams(2, 2, 2)).value != (4, 5):
        bad.append(f"(2, 2, 2): chi {res.value}")
    inside = 0
    for p in GRID:
        sp = SpaceParams(*p)
        if p[0] != 2 or sp.n < 4:
            continue
        res = chromatic_number_exact(graph(*p))
        if not res.exact:
            continue
        q, r, s = p
        n = sp.n
        lo, hi = 2 ** (n - 2), Fraction(2**n - (2**r + 2**s + r * s), 2) + 2 ** (n - 3) + 1
        if not lo <= res.value <= hi:
            bad.append(f"{p}: chi {res.value} outside [{lo}, {hi}]")
        inside += 1
    verdict(12, "chromatic number", bad, f"exact at {len(exact_pts)} points; bounds checked at {inside}")


def test_c13_symmetry_determinism():
    bad = []
    swapped = [p for p in GRID if p[1] < p[2]]
    for q, r, s in swapped:
        a = analyze(graph(q, r, s)).invariants(mirror=True)
        b = analyze(graph(q, s, r)).invariants()
        if a != b:
            diff = sorted(k for k in a if a[k] != b[k])
            bad.append(f"{(q, r, s)} vs {(q, s, r)} differ in {diff}")
    first = default_sweep()
    again = sweep_points(GRID)
    parallel = default_sweep(workers=2)
    for fmt in ("table", "json", "csv"):
        text = render_string(first, fmt)
        if text != render_string(again, fmt) or text != render_string(parallel, fmt):
            bad.append(f"{fmt} report not byte-identical")
    verdict(13, "symmetry and determinism", bad, f"{len(swapped)} swapped pairs")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
