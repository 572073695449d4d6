from __future__ import annotations

from dataclasses import asdict, dataclass

from ..algebra import DEFAULT_VERTEX_CAP
from ..errors import ResourceError, UsageError


class CapExceeded(ResourceError):
    """An exact computation was refused because the graph is too large for its cap."""


def check_cap(name: str, order: int, cap: int) -> None:
    if order > cap:
        raise CapExceeded(f"{name} {cap} < order {order}", cap_name=name, cap=cap, size=order)


@dataclass(frozen=True)
class Caps:
    """Per-invariant order caps.  ``clique_budget`` bounds the number of maximal cliques listed."""

    vertex_cap: int = DEFAULT_VERTEX_CAP
    bfs_cap: int = 2000
    clique_cap: int = 300
    clique_budget: int = 100_000
    independence_cap: int = 300
    chromatic_cap: int = 32
    edgeconn_cap: int = 300
    updom_cap: int = 16

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise UsageError(f"{name} must be a positive integer, got {value!r}")

    def as_dict(self) -> dict[str, int]:
        return asdict(self)
