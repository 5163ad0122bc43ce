import itertools
import json
from fractions import Fraction
from math import factorial

import pytest

from spinhurwitz import symgroup
from spinhurwitz.errors import DegreeOutOfRange
from spinhurwitz.partitions import Partition, centralizer_order, partitions_of
from spinhurwitz.symgroup import (
    character,
    character_table,
    class_size,
    commutator,
    compose,
    cycle_type,
    enumerate_class,
    identity,
    inverse,
)

P = Partition

# Standard S_4 table, rows (4),(3,1),(2,2),(2,1,1),(1^4); columns in the same order.
S4 = [
    [1, 1, 1, 1, 1],
    [-1, 0, -1, 1, 3],
    [0, -1, 2, 0, 2],
    [1, 0, -1, -1, 3],
    [-1, 1, 1, -1, 1],
]


def test_small_characters():
    assert character(P([2, 1]), P([3])) == -1
    assert all(character(P([3]), mu) == 1 for mu in partitions_of(3))
    assert character(P([2, 2]), P([3, 1])) == -1


def test_s4_table():
    t = character_table(4)
    assert [t.row(lam) for lam in t.irreps] == S4


def test_sign_representation():
    # chi_{(1^d)}(mu) = (-1)^(d - len(mu))
    for d in range(1, 9):
        sign = P([1] * d)
        for mu in partitions_of(d):
            assert character(sign, mu) == (-1) ** (d - len(mu))


@pytest.mark.parametrize("d", range(1, 9))
def test_table_invariants(d):
    t = character_table(d)
    n = factorial(d)
    assert sum(v * v for v in t.dims.values()) == n
    for a, b in itertools.product(t.irreps, repeat=2):
        s = sum(Fraction(n, centralizer_order(mu)) * t(a, mu) * t(b, mu) for mu in t.classes)
        assert s == (n if a == b else 0)
    for a, b in itertools.product(t.classes, repeat=2):
        s = sum(t(lam, a) * t(lam, b) for lam in t.irreps)
        assert s == (centralizer_order(a) if a == b else 0)


def test_dimension_sum_up_to_12():
    for d in range(9, 13):
        t = character_table(d)
        assert sum(v * v for v in t.dims.values()) == factorial(d)


def test_table_guard():
    with pytest.raises(DegreeOutOfRange):
        character_table(13)
    with pytest.raises(DegreeOutOfRange):
        character_table(0)


def test_class_sizes():
    assert class_size(4, P([3, 1])) == 8
    assert class_size(4, P([1] * 4)) == 1
    assert class_size(4, P([2, 2])) == 3


@pytest.mark.parametrize("d", range(1, 7))
def test_enumerate_class_cardinalities(d):
    total = 0
    for mu in partitions_of(d):
        elems = enumerate_class(d, mu)
        assert len(elems) == class_size(d, mu)
        assert all(cycle_type(p) == mu for p in elems)
        total += len(elems)
    assert total == factorial(d)


def test_permutation_helpers():
    c1, c2 = enumerate_class(3, P([3]))
    assert len(enumerate_class(3, P([3]))) == 2
    assert cycle_type(identity(4)) == P([1, 1, 1, 1])
    assert compose(c1, c1) == c2
    assert cycle_type(compose(c1, c1)) == P([3])
    assert compose(c1, c2) == identity(3)
    for p in itertools.permutations(range(4)):
        assert cycle_type(compose(p, inverse(p))) == P([1] * 4)
    a, b = (1, 0, 2), (0, 2, 1)
    assert cycle_type(commutator(a, b)) == P([3])


def test_disk_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setattr(symgroup, "_tables", {})
    t = character_table(5, cache_dir=tmp_path)
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["chartable_v1_d5.json"]
    doc = json.loads(files[0].read_text())
    assert set(doc) == {"version", "d", "irreps", "classes", "entries"}
    assert doc["entries"][0] == [1] * 7
    monkeypatch.setattr(symgroup, "_tables", {})
    monkeypatch.setattr(symgroup, "_build_table", lambda d: pytest.fail("cache not used"))
    again = character_table(5, cache_dir=tmp_path)
    assert again.entries == t.entries


def test_corrupt_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setattr(symgroup, "_tables", {})
    (tmp_path / "chartable_v1_d4.json").write_text("{not json")
    t = character_table(4, cache_dir=tmp_path)
    assert [t.row(lam) for lam in t.irreps] == S4
