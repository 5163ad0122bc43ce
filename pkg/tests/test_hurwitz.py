import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from spinhurwitz.errors import DegreeOutOfRange, OracleBudgetExceeded, ProfileDegreeMismatch
from spinhurwitz.hurwitz import ClassicalQuery, brute_force_hurwitz, classical_hurwitz
from spinhurwitz.partitions import Partition, partitions_of
from spinhurwitz.symgroup import commutator, compose, cycle_type, identity

P = Partition


def naive_count(h, d, profiles):
    """Literal enumeration of every tuple; only usable for tiny h, d."""
    group = list(itertools.permutations(range(d)))
    classes = [[g for g in group if cycle_type(g) == m] for m in profiles]
    one = identity(d)
    count = 0
    for handles in itertools.product(group, repeat=2 * h):
        prefix = one
        for a, b in zip(handles[::2], handles[1::2]):
            prefix = compose(prefix, commutator(a, b))
        for ss in itertools.product(*classes):
            x = prefix
            for s in ss:
                x = compose(x, s)
            count += x == one
    return Fraction(count, factorial(d))


@pytest.mark.parametrize("h, d, profiles, expected", [
    (0, 3, [P([3])] * 3, Fraction(1, 3)),
    (0, 4, [P([3, 1])] * 3, Fraction(4, 3)),
    (0, 4, [], Fraction(1, 24)),
    (0, 2, [P([2])] * 2, Fraction(1, 2)),
    (1, 2, [], Fraction(2)),
])
def test_anchor_values(h, d, profiles, expected):
    q = ClassicalQuery(h, d, profiles)
    assert classical_hurwitz(q) == expected
    assert brute_force_hurwitz(q) == expected


@pytest.mark.parametrize("h, d", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_convolution_oracle_matches_literal_enumeration(h, d):
    for k in range(3 if h == 1 else 2):
        for profs in itertools.combinations_with_replacement(partitions_of(d), k):
            q = ClassicalQuery(h, d, profs)
            assert brute_force_hurwitz(q) == naive_count(h, d, profs)


def test_connected_decomposition():
    h31 = classical_hurwitz(ClassicalQuery(0, 4, [P([3, 1])] * 3))
    h1 = classical_hurwitz(ClassicalQuery(0, 1, [P([1])] * 3))
    h3 = classical_hurwitz(ClassicalQuery(0, 3, [P([3])] * 3))
    assert h31 - 2 * h1 * h3 == Fraction(2, 3)


@pytest.mark.parametrize("d", range(1, 9))
def test_genus0_no_profiles(d):
    assert classical_hurwitz(ClassicalQuery(0, d)) == Fraction(1, factorial(d))


def test_errors():
    with pytest.raises(ProfileDegreeMismatch):
        ClassicalQuery(0, 4, [P([3])])
    with pytest.raises(DegreeOutOfRange):
        classical_hurwitz(ClassicalQuery(0, 13))
    with pytest.raises(DegreeOutOfRange):
        brute_force_hurwitz(ClassicalQuery(0, 7))
    with pytest.raises(OracleBudgetExceeded):
        brute_force_hurwitz(ClassicalQuery(2, 5, [P([2, 1, 1, 1])] * 3), budget=1000)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SHW_ORACLE_BUDGET", "10")
    with pytest.raises(OracleBudgetExceeded):
        brute_force_hurwitz(ClassicalQuery(1, 3))


queries = st.integers(1, 5).flatmap(lambda d: st.tuples(
    st.integers(0, 2), st.just(d), st.lists(st.sampled_from(partitions_of(d)), max_size=4)))


@settings(max_examples=60, deadline=None)
@given(queries)
def test_frobenius_equals_brute_force(args):
    h, d, profs = args
    q = ClassicalQuery(h, d, profs)
    assert classical_hurwitz(q) == brute_force_hurwitz(q)


@settings(max_examples=60, deadline=None)
@given(queries)
def test_trivial_profile_invariance(args):
    h, d, profs = args
    q = ClassicalQuery(h, d, profs)
    assert classical_hurwitz(ClassicalQuery(h, d, list(profs) + [Partition.trivial(d)])) == classical_hurwitz(q)
