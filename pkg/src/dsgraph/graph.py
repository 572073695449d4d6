"""Materialised direct-sum graph and its text serialisations."""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterator, Literal

import numpy as np

from .algebra import DSVector, SpaceParams, enumerate_vertices, rank_vertex
from .errors import DomainError, UsageError


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class DirectSumGraph:
    """Immutable graph on the vertices of ``V`` with nonzero U- and W-parts.

    ``rows[i]`` is the neighbourhood of vertex ``i`` as an int bitset (bit ``j``
    set iff ``i ~ j``).  Vertices are stored in rank order.
    """

    params: SpaceParams
    vertices: tuple[DSVector, ...]
    rows: tuple[int, ...]
    degrees: tuple[int, ...]
    size: int

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense read-only boolean adjacency matrix."""
        n = self.order
        mat = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(self.rows):
            mat[i, list(iter_bits(row))] = True
        mat.setflags(write=False)
        return mat

    def index(self, x: DSVector) -> int:
        if x.params != self.params:
            raise UsageError("vector belongs to a different space")
        return rank_vertex(x)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(iter_bits(self.rows[i]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j


def build_graph(params: SpaceParams) -> DirectSumGraph:
    vertices = enumerate_vertices(params)
    # adjacency depends only on supports, so group vertices by skeleton class
    classes: dict[tuple[int, int], int] = {}
    keys = []
    for i, x in enumerate(vertices):
        key = (x.umask, x.wmask)
        keys.append(key)
        classes[key] = classes.get(key, 0) | (1 << i)
    reach: dict[tuple[int, int], int] = {}
    for ku, kw in classes:
        acc = 0
        for (cu, cw), members in classes.items():
            if ku & cu and kw & cw:
                acc |= members
        reach[ku, kw] = acc
    rows = tuple(reach[key] & ~(1 << i) for i, key in enumerate(keys))
    degrees = tuple(row.bit_count() for row in rows)
    return DirectSumGraph(params, vertices, rows, degrees, sum(degrees) // 2)


def vertex_label(x: DSVector, style: Literal["symbolic", "tuple"] = "symbolic") -> str:
    """Readable name: ``"a1+2a2+b1"`` (symbolic) or ``"a:1,2|b:1,0"`` (tuple)."""
    if not x.is_vertex:
        raise DomainError(f"{x} is not a vertex")
    if style == "tuple":
        return f"a:{','.join(map(str, x.a))}|b:{','.join(map(str, x.b))}"
    if style != "symbolic":
        raise UsageError(f"unknown label style {style!r}")
    terms = []
    for name, coeffs in (("a", x.a), ("b", x.b)):
        for k, c in enumerate(coeffs, start=1):
            if c:
                terms.append(f"{'' if c == 1 else c}{name}{k}")
    return "+".join(terms)


def _dot(g: DirectSumGraph) -> str:
    q, r, s = g.params.as_tuple()
    labels = [vertex_label(x) for x in g.vertices]
    lines = [f"graph direct_sum_q{q}_r{r}_s{s} {{"]
    lines += [f'  "{lab}";' for lab in labels]
    lines += [f'  "{labels[i]}" -- "{labels[j]}";' for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edgelist(g: DirectSumGraph) -> str:
    q, r, s = g.params.as_tuple()
    lines = [f"{q} {r} {s} {g.order} {g.size}"]
    lines += [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def _json(g: DirectSumGraph) -> str:
    q, r, s = g.params.as_tuple()
    doc = {
        "params": {"q": q, "r": r, "s": s},
        "order": g.order,
        "size": g.size,
        "degrees": list(g.degrees),
        "edges": [[i, j] for i, j in g.edges()],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


EXPORTERS = {"dot": _dot, "edgelist": _edgelist, "json": _json}


def export_graph(g: DirectSumGraph, fmt: str, sink: IO[str]) -> None:
    """Write ``g`` to the text stream ``sink`` as ``dot``, ``edgelist`` or ``json``."""
    try:
        render = EXPORTERS[fmt]
    except KeyError:
        raise UsageError(f"unknown export format {fmt!r}; choose from {sorted(EXPORTERS)}") from None
    sink.write(render(g))


def export_string(g: DirectSumGraph, fmt: str) -> str:
    buf = io.StringIO()
    export_graph(g, fmt, buf)
    return buf.getvalue()


def read_edgelist(text: str) -> tuple[tuple[int, int, int, int, int], list[tuple[int, int]]]:
    """Parse the edgelist format back into ``((q, r, s, order, size), edges)``."""
    lines = text.splitlines()
    if not lines:
        raise UsageError("empty edgelist")
    header = tuple(int(t) for t in lines[0].split())
    if len(header) != 5:
        raise UsageError(f"bad edgelist header {lines[0]!r}")
    edges = []
    for line in lines[1:]:
        i, j = (int(t) for t in line.split())
        edges.append((i, j))
    return header, edges  # type: ignore[return-value]
