from itertools import product

import pytest
from hypothesis import given, strategies as st

from dsgraph import (
    DSVector,
    DomainError,
    FieldScalar,
    ResourceError,
    SpaceParams,
    UsageError,
    enumerate_vertices,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    is_adjacent,
    rank_vertex,
    skeleton_of,
    unrank_vertex,
    vector_add,
)

PRIMES = [2, 3, 5, 7]


def table(q):
    """Addition and multiplication tables built by repeated addition only."""
    add = {(x, y): (x + y) % q for x in range(q) for y in range(q)}
    mul = {}
    for x in range(q):
        acc = 0
        for y in range(q):
            mul[x, y] = acc
            acc = add[acc, x]
    return add, mul


@pytest.mark.parametrize("q", PRIMES)
def test_field_ops_match_tables(q):
    add, mul = table(q)
    for x, y in product(range(q), repeat=2):
        fx, fy = FieldScalar(x, q), FieldScalar(y, q)
        assert field_add(fx, fy).value == add[x, y]
        assert field_mul(fx, fy).value == mul[x, y]
        assert field_add(fx, field_neg(fx)).value == 0
    for x in range(1, q):
        assert mul[x, field_inv(FieldScalar(x, q)).value] == 1


def test_field_examples():
    assert field_add(FieldScalar(1, 2), FieldScalar(1, 2)).value == 0
    assert field_mul(FieldScalar(3, 5), FieldScalar(4, 5)).value == 2
    assert field_inv(FieldScalar(2, 3)).value == 2


def test_field_errors():
    with pytest.raises(DomainError):
        field_inv(FieldScalar(0, 5))
    with pytest.raises(UsageError):
        field_add(FieldScalar(1, 3), FieldScalar(1, 5))
    with pytest.raises(UsageError):
        FieldScalar(5, 5)


@pytest.mark.parametrize(
    "args, fragment",
    [((4, 1, 1), "q must be prime"), ((1, 1, 1), "q must be prime"), ((9, 2, 2), "q must be prime"),
     ((2, 0, 1), "r"), ((2, 1, 0), "s")],
)
def test_params_validation(args, fragment):
    with pytest.raises(UsageError, match=fragment):
        SpaceParams(*args)


def test_params_non_integer():
    with pytest.raises(UsageError):
        SpaceParams(2.0, 1, 1)
    with pytest.raises(UsageError):
        SpaceParams(True, 1, 1)


def test_vertex_cap():
    with pytest.raises(ResourceError) as info:
        SpaceParams(5, 3, 3, vertex_cap=1000)
    assert info.value.cap_name == "vertex_cap"
    assert info.value.size == 124**2
    assert SpaceParams(5, 3, 3).order == 15376


def test_vector_add_examples():
    p = SpaceParams(2, 2, 2)
    assert vector_add(DSVector(p, (1, 0), (1, 0)), DSVector(p, (0, 1), (0, 1))) == DSVector(p, (1, 1), (1, 1))
    p = SpaceParams(2, 1, 2)
    z = DSVector(p, (1,), (1, 0)) + DSVector(p, (1,), (0, 1))
    assert z == DSVector(p, (0,), (1, 1)) and not z.is_vertex
    p = SpaceParams(3, 1, 1)
    assert DSVector(p, (1,), (1,)) + DSVector(p, (2,), (2,)) == DSVector(p, (0,), (0,))
    with pytest.raises(UsageError):
        DSVector(SpaceParams(2, 1, 1), (1,), (1,)) + DSVector(SpaceParams(3, 1, 1), (1,), (1,))


def test_enumeration_examples():
    assert len(enumerate_vertices(SpaceParams(2, 2, 2))) == 9
    p = SpaceParams(2, 1, 1)
    assert enumerate_vertices(p) == (DSVector(p, (1,), (1,)),)
    assert len(enumerate_vertices(SpaceParams(3, 1, 1))) == 4


def test_enumeration_is_lexicographic():
    p = SpaceParams(3, 2, 2)
    vs = enumerate_vertices(p)
    keys = [v.a + v.b for v in vs]
    assert keys == sorted(keys)
    assert len(set(keys)) == p.order
    assert all(v.is_vertex for v in vs)


def test_rank_examples():
    p = SpaceParams(2, 2, 2)
    assert rank_vertex(DSVector(p, (0, 1), (0, 1))) == 0
    assert rank_vertex(DSVector(p, (1, 1), (1, 1))) == 8
    assert unrank_vertex(SpaceParams(2, 1, 1), 0) == DSVector(SpaceParams(2, 1, 1), (1,), (1,))
    with pytest.raises(DomainError):
        rank_vertex(DSVector(p, (0, 0), (1, 1)))
    with pytest.raises(UsageError):
        unrank_vertex(p, 9)
    with pytest.raises(UsageError):
        unrank_vertex(p, -1)


params_st = st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), st.integers(1, 4)).map(
    lambda t: SpaceParams(*t, vertex_cap=10**9)
)


@given(params_st, st.data())
def test_rank_unrank_roundtrip(p, data):
    i = data.draw(st.integers(0, p.order - 1))
    x = unrank_vertex(p, i)
    assert x.is_vertex
    assert rank_vertex(x) == i


@given(params_st, st.data())
def test_rank_matches_enumeration_position(p, data):
    if p.order > 2000:
        return
    vs = enumerate_vertices(p)
    i = data.draw(st.integers(0, p.order - 1))
    assert vs[i] == unrank_vertex(p, i)


def test_skeleton_examples():
    p = SpaceParams(2, 2, 2)
    sk = skeleton_of(DSVector(p, (1, 1), (1, 0)))
    assert (sk.su, sk.sw) == ({1, 2}, {1})
    sk = skeleton_of(DSVector(SpaceParams(3, 2, 2), (0, 2), (1, 1)))
    assert (sk.su, sk.sw) == ({2}, {1, 2})
    sk = skeleton_of(DSVector(p, (0, 0), (1, 1)))
    assert (sk.su, sk.sw, sk.l, sk.m) == (frozenset(), {1, 2}, 0, 2)


def test_adjacency_examples():
    p = SpaceParams(2, 2, 2)
    v = lambda a, b: DSVector(p, a, b)  # noqa: E731
    assert is_adjacent(v((1, 0), (1, 0)), v((1, 1), (1, 1)))
    assert not is_adjacent(v((1, 0), (1, 0)), v((0, 1), (0, 1)))
    assert is_adjacent(v((1, 0), (1, 1)), v((1, 1), (0, 1)))
    with pytest.raises(DomainError):
        is_adjacent(v((0, 0), (1, 0)), v((1, 0), (1, 0)))
    with pytest.raises(UsageError):
        is_adjacent(v((1, 0), (1, 0)), DSVector(SpaceParams(3, 2, 2), (1, 0), (1, 0)))


@given(params_st, st.data())
def test_adjacency_symmetric_irreflexive(p, data):
    i = data.draw(st.integers(0, p.order - 1))
    j = data.draw(st.integers(0, p.order - 1))
    x, y = unrank_vertex(p, i), unrank_vertex(p, j)
    assert is_adjacent(x, y) == is_adjacent(y, x)
    assert not is_adjacent(x, x)


@given(st.data())
def test_adjacency_invariant_under_nonzero_scaling(data):
    p = SpaceParams(3, 2, 2)
    x = unrank_vertex(p, data.draw(st.integers(0, p.order - 1)))
    y = unrank_vertex(p, data.draw(st.integers(0, p.order - 1)))
    # scale each coordinate of y independently by a nonzero scalar: same support
    ca = data.draw(st.lists(st.sampled_from([1, 2]), min_size=2, max_size=2))
    cb = data.draw(st.lists(st.sampled_from([1, 2]), min_size=2, max_size=2))
    y2 = DSVector.of(p, [c * t for c, t in zip(ca, y.a)], [c * t for c, t in zip(cb, y.b)])
    if y2 != x and y != x:
        assert is_adjacent(x, y) == is_adjacent(x, y2)


def test_swapped_params():
    p = SpaceParams(3, 1, 2)
    assert p.swapped().as_tuple() == (3, 2, 1)
    assert p.n == 3 and p.order == 16
