from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from spinhurwitz.errors import DegreeOutOfRange, InvalidPartition, ProfileDegreeMismatch
from spinhurwitz.partitions import (
    Partition,
    aut_order,
    centralizer_order,
    centralizer_order_by_multiplicity,
    euler_characteristic,
    format_profiles,
    is_odd,
    odd_partitions_of,
    parse_profiles,
    partitions_of,
    rational_component_count,
    weight,
)

P = Partition


def partition_count(n):
    """Euler's pentagonal-number recurrence; does not enumerate anything."""
    p = [1] + [0] * n
    for i in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def test_partitions_small():
    assert partitions_of(1) == [P([1])]
    assert [m.parts for m in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("d", range(1, 21))
def test_partition_counts_match_recurrence(d):
    parts = partitions_of(d)
    assert len(parts) == partition_count(d)
    assert len(set(parts)) == len(parts)
    assert all(m.d == d for m in parts)
    # descending lexicographic order
    assert [m.parts for m in parts] == sorted((m.parts for m in parts), reverse=True)


@pytest.mark.parametrize("d", [0, -1, 21])
def test_degree_guard(d):
    with pytest.raises(DegreeOutOfRange):
        partitions_of(d)
    with pytest.raises(DegreeOutOfRange):
        odd_partitions_of(d)


def test_odd_partitions():
    assert odd_partitions_of(4) == [P([3, 1]), P([1, 1, 1, 1])]
    assert odd_partitions_of(3) == [P([3]), P([1, 1, 1])]
    assert odd_partitions_of(5) == [P([5]), P([3, 1, 1]), P([1] * 5)]
    for d in range(1, 12):
        odd = odd_partitions_of(d)
        assert set(odd) <= set(partitions_of(d))
        assert all(is_odd(m) for m in odd)
        assert all(all(x % 2 for x in m) for m in odd)


@pytest.mark.parametrize("parts, w, aut, z", [
    ((3, 1), 3, 1, 3),
    ((1, 1, 1, 1), 1, 24, 24),
    ((2, 2, 1), 4, 2, 8),
    ((2, 2), 4, 2, 8),
])
def test_statistics(parts, w, aut, z):
    m = P(parts)
    assert weight(m) == w
    assert aut_order(m) == aut
    assert centralizer_order(m) == z


def test_is_odd():
    assert is_odd(P([3, 1]))
    assert not is_odd(P([2, 1, 1]))
    assert is_odd(P([5]))


@pytest.mark.parametrize("d", range(1, 11))
def test_class_equation_and_centralizers(d):
    parts = partitions_of(d)
    assert sum(Fraction(1, centralizer_order(m)) for m in parts) == 1
    assert sum(factorial(d) // centralizer_order(m) for m in parts) == factorial(d)
    for m in parts:
        assert centralizer_order(m) == centralizer_order_by_multiplicity(m)
        assert rational_component_count(m).denominator == 1


def test_euler_characteristic():
    assert euler_characteristic(4, 1, []) == 0
    assert euler_characteristic(4, 0, [P([3, 1])] * 3) == 2
    assert euler_characteristic(3, 0, [P([3])] * 3) == 0
    with pytest.raises(ProfileDegreeMismatch):
        euler_characteristic(4, 0, [P([3])])


def test_rational_component_count():
    assert rational_component_count(P([3, 1])) == 8
    assert rational_component_count(P([1, 1])) == 4
    assert rational_component_count(P([2])) == 1


def test_parsing():
    assert Partition.parse("3,1") == P([3, 1])
    assert Partition.parse("1 3") == P([3, 1])
    assert Partition.parse("1^4") == P([1, 1, 1, 1])
    assert Partition.parse("3,1^2") == P([3, 1, 1])
    assert parse_profiles("3,1; 1^4") == [P([3, 1]), P([1] * 4)]
    assert parse_profiles("") == []
    assert format_profiles([P([3, 1]), P([3, 1])]) == "3,1;3,1"
    for bad in ("", "a", "3,-1", "0"):
        with pytest.raises(InvalidPartition):
            Partition.parse(bad)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=8), st.randoms())
def test_canonical_form(parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert P(parts) == P(shuffled)
    assert P(parts).parts == tuple(sorted(parts, reverse=True))
    assert Partition.parse(P(parts).short()) == P(parts)
