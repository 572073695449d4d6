"""Closed-form predictions for the direct-sum graph, as exact functions of ``(q, r, s)``.

Every function returns a :class:`TheoremPrediction`.  Predictions whose
hypotheses fail carry :data:`Applicability.OUT_OF_HYPOTHESIS` and the value
:data:`NOT_APPLICABLE` instead of an extrapolated number.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .algebra import SpaceParams
from .errors import InconsistencyError, UsageError

INF = math.inf


class Applicability(enum.Enum):
    APPLIES = "applies"
    OUT_OF_HYPOTHESIS = "out-of-hypothesis"
    EDGE_CASE = "edge-case"


class _NotApplicable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_APPLICABLE"

    def __bool__(self) -> bool:
        return False


NOT_APPLICABLE = _NotApplicable()


@dataclass(frozen=True)
class TheoremPrediction:
    theorem: str
    params: tuple[int, int, int]
    value: Any
    applicability: Applicability = Applicability.APPLIES
    note: str = ""

    @property
    def applies(self) -> bool:
        return self.applicability is not Applicability.OUT_OF_HYPOTHESIS


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """``C(n, k)`` by Pascal's rule, exact and zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def _upper_half_weight(t: int, q: int) -> int:
    """Weight of all nonempty supports of size above ``t/2``: sum_{j > t/2} C(t, j)(q-1)^j."""
    return sum(binomial(t, j) * (q - 1) ** j for j in range(t // 2 + 1, t + 1))


def predict_order_size(params: SpaceParams) -> TheoremPrediction:
    q, r, s = params.as_tuple()
    order = (q**r - 1) * (q**s - 1)
    numerator = (q ** (2 * r) - (2 * q - 1) ** r) * (q ** (2 * s) - (2 * q - 1) ** s) - order
    if numerator % 2:
        raise InconsistencyError(f"edge-count numerator {numerator} is odd for {params.as_tuple()}")
    return TheoremPrediction("T8", params.as_tuple(), (order, numerator // 2))


def predict_degree(params: SpaceParams, l: int, m: int) -> TheoremPrediction:  # noqa: E741
    """Degree of any vertex with ``l`` nonzero U-coefficients and ``m`` nonzero W-coefficients."""
    q, r, s = params.as_tuple()
    if not (1 <= l <= r and 1 <= m <= s):
        raise UsageError(f"need 1 <= l <= {r} and 1 <= m <= {s}, got l={l}, m={m}")
    value = (q**l - 1) * (q**m - 1) * q ** (params.n - l - m) - 1
    return TheoremPrediction("T7", params.as_tuple(), value)


def predict_min_degree_edge_connectivity(params: SpaceParams) -> TheoremPrediction:
    q = params.q
    value = (q - 1) ** 2 * q ** (params.n - 2) - 1
    return TheoremPrediction("T11/C1", params.as_tuple(), (value, value))


def predict_diameter_complete(params: SpaceParams) -> TheoremPrediction:
    if params.n == 2:
        if params.order == 1:
            return TheoremPrediction(
                "T1/T2",
                params.as_tuple(),
                (1, True),
                Applicability.EDGE_CASE,
                "single vertex: actual diameter is 0",
            )
        return TheoremPrediction("T1/T2", params.as_tuple(), (1, True))
    return TheoremPrediction("T1/T2", params.as_tuple(), (2, False))


def predict_girth_triangulated(params: SpaceParams) -> TheoremPrediction:
    """``(girth, triangulated, case)`` from the six-case table, read up to the ``(r, s)`` swap."""
    q, n = params.q, params.n
    if n == 2:
        value = (INF, False, "T9-i") if q == 2 else (3, True, "T9-ii")
    elif n == 3:
        value = (INF, False, "T9-iii") if q == 2 else (3, True, "T9-iv")
    else:
        value = (3, True, "T9-v" if min(params.r, params.s) == 1 else "T9-vi")
    return TheoremPrediction("T9/T10", params.as_tuple(), value)


def predict_domination_independence(params: SpaceParams) -> TheoremPrediction:
    """``(domination number, bound on minimal dominating sets, independence number)``."""
    rs = params.r * params.s
    independence = 1 if params.n == 2 else rs
    return TheoremPrediction("T3/T4/T5", params.as_tuple(), (1, rs, independence))


def clique_regime(params: SpaceParams, k1: int, k2: int) -> str:
    small_u = 2 * k1 <= params.r
    small_w = 2 * k2 <= params.s
    return {
        (True, True): "T14",
        (True, False): "T15",
        (False, True): "T16",
        (False, False): "T17",
    }[small_u, small_w]


def predict_clique_family_size(params: SpaceParams, k1: int, k2: int) -> TheoremPrediction:
    """Cardinality of the clique family whose smallest skeleton has ``k1`` U- and ``k2`` W-indices.

    Sides with ``k > dim/2`` are snapped to ``floor(dim/2) + 1``; the label
    records the values actually used, e.g. ``"T15[k1=1,k2=2]"`` for a call
    with ``k2=3`` and ``s=3``.
    """
    q, r, s = params.as_tuple()
    if not (1 <= k1 <= r and 1 <= k2 <= s):
        raise UsageError(f"need 1 <= k1 <= {r} and 1 <= k2 <= {s}, got k1={k1}, k2={k2}")
    regime = clique_regime(params, k1, k2)
    w = q - 1
    if regime == "T14":
        size = w**2 * sum(
            binomial(r - 1, i) * binomial(s - 1, j) * w ** (i + j)
            for i in range(k1 - 1, r)
            for j in range(k2 - 1, s)
        )
        label = f"T14[k1={k1},k2={k2}]"
    elif regime == "T15":
        k2 = s // 2 + 1
        size = w * sum(
            binomial(r - 1, i) * binomial(s, j) * w ** (i + j)
            for i in range(k1 - 1, r)
            for j in range(k2, s + 1)
        )
        label = f"T15[k1={k1},k2={k2}]"
    elif regime == "T16":
        k1 = r // 2 + 1
        size = w * sum(
            binomial(r, i) * binomial(s - 1, j) * w ** (i + j)
            for i in range(k1, r + 1)
            for j in range(k2 - 1, s)
        )
        label = f"T16[k1={k1},k2={k2}]"
    else:
        k1, k2 = r // 2 + 1, s // 2 + 1
        size = sum(
            binomial(r, i) * binomial(s, j) * w ** (i + j)
            for i in range(k1, r + 1)
            for j in range(k2, s + 1)
        )
        label = f"T17[k1={k1},k2={k2}]"
    return TheoremPrediction(regime, params.as_tuple(), (size, label))


def clique_number_terms(params: SpaceParams) -> tuple[int, int, int, int]:
    """The four candidate clique sizes whose maximum is the predicted clique number."""
    q, r, s = params.as_tuple()
    w = q - 1
    star_u, star_w = w * q ** (r - 1), w * q ** (s - 1)
    half_u, half_w = _upper_half_weight(r, q), _upper_half_weight(s, q)
    return (star_u * star_w, star_u * half_w, half_u * star_w, half_u * half_w)


def predict_clique_number(params: SpaceParams) -> TheoremPrediction:
    value = max(clique_number_terms(params))
    if params.q == 2 and params.n >= 4 and value != 2 ** (params.n - 2):
        raise InconsistencyError(f"clique number {value} != 2^(n-2) at {params.as_tuple()}")
    return TheoremPrediction("R1/C2", params.as_tuple(), value)


def predict_chromatic_bounds(params: SpaceParams) -> TheoremPrediction:
    """``(lower, upper)`` for q = 2 and n >= 4; ``upper`` is a :class:`Fraction` if not integral."""
    q, r, s = params.as_tuple()
    n = params.n
    if q != 2 or n < 4:
        return TheoremPrediction(
            "C3",
            params.as_tuple(),
            NOT_APPLICABLE,
            Applicability.OUT_OF_HYPOTHESIS,
            "requires q = 2 and n >= 4",
        )
    lower = 2 ** (n - 2)
    upper = Fraction(2**n - (2**r + 2**s + r * s), 2) + 2 ** (n - 3) + 1
    if upper.denominator == 1:
        return TheoremPrediction("C3", params.as_tuple(), (lower, int(upper)))
    return TheoremPrediction(
        "C3",
        params.as_tuple(),
        (lower, upper),
        Applicability.EDGE_CASE,
        f"upper bound {upper} is not an integer",
    )


def predict_eulerian(params: SpaceParams) -> TheoremPrediction:
    if params.order == 1:
        return TheoremPrediction(
            "T13",
            params.as_tuple(),
            False,
            Applicability.EDGE_CASE,
            "edgeless single-vertex graph",
        )
    return TheoremPrediction("T13", params.as_tuple(), False)
