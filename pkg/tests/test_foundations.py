from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emtkit.errors import DomainError
from emtkit.foundations import (ExtValue, FinMap, INFINITY, Partition, ZERO, abs_diff,
                                all_partitions, join_partitions, minimum, parse_value,
                                saturating_sum)

V = ExtValue.of

finite_values = st.fractions(min_value=0, max_value=100).map(ExtValue)
values = st.one_of(finite_values, st.just(INFINITY))


def test_saturating_sum_examples():
    assert saturating_sum(V(1, 2), V(1, 3)) == V(5, 6)
    assert saturating_sum(INFINITY, ZERO) == INFINITY
    assert saturating_sum(V(2), INFINITY) == INFINITY


def test_minimum_examples():
    assert minimum(V(3), INFINITY) == V(3)
    assert minimum(V(1, 2), V(1, 3)) == V(1, 3)
    assert minimum(INFINITY, INFINITY) == INFINITY


def test_parse_and_format():
    assert parse_value("1/2") == V(1, 2)
    assert parse_value("3") == V(3)
    assert parse_value("inf") == INFINITY
    assert parse_value("2/4") == V(1, 2)
    assert str(V(5, 6)) == "5/6"
    assert str(V(7)) == "7"
    assert str(INFINITY) == "inf"
    for bad in ("-1", "1/0", "1/-2", "x", ""):
        with pytest.raises(DomainError):
            parse_value(bad)


def test_negative_rejected():
    with pytest.raises(DomainError):
        ExtValue(Fraction(-1, 2))


def test_ordering():
    assert ZERO < V(1, 3) < V(1, 2) < V(2) < INFINITY
    assert not INFINITY < INFINITY
    assert INFINITY <= INFINITY


def test_subtraction_when_defined():
    assert V(3) - V(1) == V(2)
    assert INFINITY - V(5) == INFINITY
    with pytest.raises(DomainError):
        V(1) - V(2)
    with pytest.raises(DomainError):
        V(1) - INFINITY
    assert abs_diff(V(1, 2), V(2)) == V(3, 2)


@settings(max_examples=60)
@given(values, values, values)
def test_sum_monoid_laws(a, b, c):
    assert saturating_sum(a, b) == saturating_sum(b, a)
    assert saturating_sum(saturating_sum(a, b), c) == saturating_sum(a, saturating_sum(b, c))
    assert saturating_sum(a, ZERO) == a


@settings(max_examples=60)
@given(values, values, values)
def test_min_lattice_laws(a, b, c):
    assert minimum(a, b) == minimum(b, a)
    assert minimum(minimum(a, b), c) == minimum(a, minimum(b, c))
    assert minimum(a, INFINITY) == a
    assert minimum(a, a) == a


def test_join_partitions_examples():
    p = Partition.from_classes(3, [[0], [1], [2]])
    q = Partition.from_classes(3, [[0, 1], [2]])
    assert join_partitions(p, q) == q
    r = Partition.from_classes(3, [[1, 2], [0]])
    assert join_partitions(q, r) == Partition.single_class(3)
    assert join_partitions(q, q) == q


partitions = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.lists(st.integers(0, max(0, n - 1)), min_size=n, max_size=n)).map(
    Partition.from_class_of)


@settings(max_examples=60)
@given(partitions, partitions, partitions)
def test_join_laws(p, q, r):
    n = max(p.n_points, q.n_points, r.n_points)
    p, q, r = (Partition.from_class_of(x.class_of + tuple(range(100, 100 + n - x.n_points)))
               for x in (p, q, r))
    assert join_partitions(p, q) == join_partitions(q, p)
    assert join_partitions(join_partitions(p, q), r) == join_partitions(p, join_partitions(q, r))
    assert join_partitions(p, Partition.singletons(n)) == p
    assert join_partitions(p, p) == p


def test_partition_canonical_numbering():
    p = Partition.from_class_of([2, 2, 0, 1])
    assert p.classes == ((0, 1), (2,), (3,))
    assert p.class_of == (0, 0, 1, 2)


def test_partition_size_mismatch():
    p = Partition.singletons(2)
    q = Partition.singletons(3)
    with pytest.raises(DomainError):
        join_partitions(p, q)


def test_all_partitions_counts():
    # Bell numbers 1, 1, 2, 5, 15
    assert [sum(1 for _ in all_partitions(n)) for n in range(5)] == [1, 1, 2, 5, 15]


def test_finmap_basics():
    f = FinMap(3, 2, (0, 1, 1))
    g = FinMap(2, 3, (2, 0))
    assert f.after(g).image == (1, 0)
    assert FinMap.identity(3).image == (0, 1, 2)
    assert f.is_surjective and not f.is_injective
    h = FinMap(2, 2, (1, 0))
    assert h.is_bijective and h.inverse() == h
    with pytest.raises(DomainError):
        FinMap(2, 2, (0, 2))
    with pytest.raises(DomainError):
        FinMap(2, 2, (0,))
