"""Prime-field scalars, direct-sum vectors and the adjacency rule.

A vector of ``V = U (+) W`` is stored by its coefficients with respect to the
fixed bases ``a1..ar`` of ``U`` and ``b1..bs`` of ``W``.  Coefficients are
plain ints in ``[0, q)``; :class:`FieldScalar` wraps a single coefficient when
modular arithmetic with modulus checking is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError, UsageError

DEFAULT_VERTEX_CAP = 100_000


def is_prime(q: int) -> bool:
    """Trial-division primality test."""
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def _is_prime_power(q: int) -> bool:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


@dataclass(frozen=True)
class SpaceParams:
    """The triple ``(q, r, s)``: field size and the dimensions of ``U`` and ``W``.

    ``vertex_cap`` bounds the number of graph vertices ``(q^r - 1)(q^s - 1)``
    and does not take part in equality.
    """

    q: int
    r: int
    s: int
    vertex_cap: int = field(default=DEFAULT_VERTEX_CAP, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("q", "r", "s", "vertex_cap"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise UsageError(f"{name} must be an integer, got {value!r}")
        if not is_prime(self.q):
            if self.q > 1 and _is_prime_power(self.q):
                raise UsageError(
                    f"q must be prime (got prime power {self.q}; GF(p^k) with k >= 2 is not supported)"
                )
            raise UsageError(f"q must be prime (got {self.q})")
        if self.r < 1 or self.s < 1:
            raise UsageError(f"r and s must be >= 1 (got r={self.r}, s={self.s})")
        if self.vertex_cap < 1:
            raise UsageError("vertex_cap must be a positive integer")
        if self.order > self.vertex_cap:
            raise ResourceError(
                f"order {self.order} exceeds vertex cap {self.vertex_cap}",
                cap_name="vertex_cap",
                cap=self.vertex_cap,
                size=self.order,
            )

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def order(self) -> int:
        return (self.q**self.r - 1) * (self.q**self.s - 1)

    def swapped(self) -> "SpaceParams":
        """Parameters with the roles of ``U`` and ``W`` exchanged."""
        return SpaceParams(self.q, self.s, self.r, vertex_cap=self.vertex_cap)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.q, self.r, self.s)


@dataclass(frozen=True)
class FieldScalar:
    """An element of GF(q) for prime ``q``."""

    value: int
    q: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.q:
            raise UsageError(f"scalar {self.value} not reduced modulo {self.q}")

    def _check(self, other: "FieldScalar") -> None:
        if not isinstance(other, FieldScalar):
            raise UsageError(f"expected FieldScalar, got {type(other).__name__}")
        if other.q != self.q:
            raise UsageError(f"modulus mismatch: {self.q} vs {other.q}")

    def __add__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar((self.value + other.value) % self.q, self.q)

    def __sub__(self, other: "FieldScalar") -> "FieldScalar":
        return self + (-other)

    def __mul__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.value * other.value % self.q, self.q)

    def __neg__(self) -> "FieldScalar":
        return FieldScalar(-self.value % self.q, self.q)

    def inverse(self) -> "FieldScalar":
        if self.value == 0:
            raise DomainError("0 has no multiplicative inverse")
        return FieldScalar(pow(self.value, -1, self.q), self.q)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value


def field_add(x: FieldScalar, y: FieldScalar) -> FieldScalar:
    return x + y


def field_mul(x: FieldScalar, y: FieldScalar) -> FieldScalar:
    return x * y


def field_neg(x: FieldScalar) -> FieldScalar:
    return -x


def field_inv(x: FieldScalar) -> FieldScalar:
    return x.inverse()


@dataclass(frozen=True)
class Skeleton:
    """Support of a vector: 1-based indices of nonzero ``a_i`` and ``b_j``."""

    su: frozenset[int]
    sw: frozenset[int]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.su)

    @property
    def m(self) -> int:
        return len(self.sw)

    @property
    def size(self) -> int:
        return self.l + self.m


@dataclass(frozen=True)
class DSVector:
    """A vector ``x = u + w`` given by its coefficient tuples ``a`` (on U) and ``b`` (on W)."""

    params: SpaceParams
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        q = self.params.q
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.params.r or len(self.b) != self.params.s:
            raise UsageError(
                f"expected {self.params.r}+{self.params.s} coefficients, "
                f"got {len(self.a)}+{len(self.b)}"
            )
        for c in self.a + self.b:
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < q:
                raise UsageError(f"coefficient {c!r} not in [0, {q})")

    @classmethod
    def of(cls, params: SpaceParams, a: Sequence[int], b: Sequence[int]) -> "DSVector":
        """Build a vector, reducing coefficients modulo ``q``."""
        q = params.q
        return cls(params, tuple(c % q for c in a), tuple(c % q for c in b))

    @property
    def is_vertex(self) -> bool:
        return any(self.a) and any(self.b)

    @property
    def umask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.a) if c)

    @property
    def wmask(self) -> int:
        return sum(1 << j for j, c in enumerate(self.b) if c)

    def scalars(self) -> tuple[tuple[FieldScalar, ...], tuple[FieldScalar, ...]]:
        q = self.params.q
        return (
            tuple(FieldScalar(c, q) for c in self.a),
            tuple(FieldScalar(c, q) for c in self.b),
        )

    def __add__(self, other: "DSVector") -> "DSVector":
        return vector_add(self, other)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.a))}|{','.join(map(str, self.b))})"


def vector_add(x: DSVector, y: DSVector) -> DSVector:
    """Componentwise sum; the result may fail :attr:`DSVector.is_vertex`."""
    if x.params != y.params:
        raise UsageError("cannot add vectors from different spaces")
    q = x.params.q
    return DSVector(
        x.params,
        tuple((s + t) % q for s, t in zip(x.a, y.a)),
        tuple((s + t) % q for s, t in zip(x.b, y.b)),
    )


def _digits(value: int, width: int, q: int) -> tuple[int, ...]:
    out = [0] * width
    for k in range(width - 1, -1, -1):
        value, out[k] = divmod(value, q)
    return tuple(out)


def _number(digits: Sequence[int], q: int) -> int:
    value = 0
    for d in digits:
        value = value * q + d
    return value


def rank_vertex(x: DSVector) -> int:
    """Dense index of ``x`` in lexicographic order of ``(a_1..a_r, b_1..b_s)``.

    With ``A`` and ``B`` the base-``q`` numbers spelled by ``a`` and ``b``,
    lexicographic order is the order of ``A * q^s + B``.  Dropping the tuples
    with ``A = 0`` or ``B = 0`` leaves rank ``(A - 1)(q^s - 1) + (B - 1)``.
    """
    if not x.is_vertex:
        raise DomainError(f"{x} is not a vertex (U-part and W-part must be nonzero)")
    q, s = x.params.q, x.params.s
    return (_number(x.a, q) - 1) * (q**s - 1) + _number(x.b, q) - 1


def unrank_vertex(params: SpaceParams, index: int) -> DSVector:
    if not 0 <= index < params.order:
        raise UsageError(f"vertex id {index} out of range [0, {params.order})")
    q = params.q
    hi, lo = divmod(index, q**params.s - 1)
    return DSVector(params, _digits(hi + 1, params.r, q), _digits(lo + 1, params.s, q))


def iter_vertices(params: SpaceParams) -> Iterator[DSVector]:
    """Yield every vertex in rank order."""
    q = params.q
    us = [t for t in product(range(q), repeat=params.r) if any(t)]
    ws = [t for t in product(range(q), repeat=params.s) if any(t)]
    for a in us:
        for b in ws:
            yield DSVector(params, a, b)


def enumerate_vertices(params: SpaceParams) -> tuple[DSVector, ...]:
    if params.order > params.vertex_cap:
        raise ResourceError(
            f"order {params.order} exceeds vertex cap {params.vertex_cap}",
            cap_name="vertex_cap",
            cap=params.vertex_cap,
            size=params.order,
        )
    return tuple(iter_vertices(params))


def skeleton_of(x: DSVector) -> Skeleton:
    return Skeleton(
        frozenset(i + 1 for i, c in enumerate(x.a) if c),
        frozenset(j + 1 for j, c in enumerate(x.b) if c),
    )


def is_adjacent(x: DSVector, y: DSVector) -> bool:
    """True iff ``x != y`` and their supports meet on both the U side and the W side."""
    if x.params != y.params:
        raise UsageError("vertices belong to different spaces")
    for v in (x, y):
        if not v.is_vertex:
            raise DomainError(f"{v} is not a vertex")
    if x == y:
        return False
    return bool(x.umask & y.umask) and bool(x.wmask & y.wmask)


def all_ones(params: SpaceParams, umask: int, wmask: int) -> DSVector:
    """The vector with coefficient 1 on exactly the given supports."""
    return DSVector(
        params,
        tuple(1 if umask >> i & 1 else 0 for i in range(params.r)),
        tuple(1 if wmask >> j & 1 else 0 for j in range(params.s)),
    )
