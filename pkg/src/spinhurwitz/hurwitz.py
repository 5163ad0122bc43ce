"""Classical (possibly disconnected) Hurwitz numbers.

Two independent routes: the Frobenius character sum, and a direct count of
permutation tuples ``a1,b1,...,ah,bh,s1,...,sk`` with
``[a1,b1]...[ah,bh] s1...sk = 1`` and ``s_j`` of cycle type ``m^j``, divided by ``d!``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod

import numpy as np

from .errors import DegreeOutOfRange, OracleBudgetExceeded
from .partitions import Partition, check_profiles
from .symgroup import MAX_TABLE_DEGREE, character_table, class_size, compose, cycle_type, enumerate_class

MAX_ORACLE_DEGREE = 6
DEFAULT_BUDGET = 10**8
BUDGET_ENV = "SHW_ORACLE_BUDGET"


@dataclass(frozen=True)
class ClassicalQuery:
    h: int
    d: int
    profiles: tuple[Partition, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if self.h < 0:
            raise ValueError(f"genus must be non-negative, got {self.h}")
        if self.d < 1:
            raise DegreeOutOfRange(f"degree must be positive, got {self.d}")
        check_profiles(self.d, self.profiles)


def classical_hurwitz(q: ClassicalQuery) -> Fraction:
    """Frobenius formula: sum over irreps of (d!/dim)^(2h-2) prod_i |C_i| chi(C_i)/dim."""
    if q.d > MAX_TABLE_DEGREE:
        raise DegreeOutOfRange(f"classical Hurwitz numbers support d <= {MAX_TABLE_DEGREE}")
    table = character_table(q.d)
    dims = table.dims
    n = factorial(q.d)
    sizes = [class_size(q.d, m) for m in q.profiles]
    total = Fraction(0)
    for lam in table.irreps:
        dim = dims[lam]
        term = Fraction(n, dim) ** (2 * q.h - 2)
        for m, size in zip(q.profiles, sizes):
            term *= Fraction(size * table(lam, m), dim)
        total += term
    return total


def default_budget() -> int:
    return int(float(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET)))


def estimated_work(q: ClassicalQuery) -> int:
    """Rough count of group multiplications the oracle performs for ``q``."""
    if q.h == 0:
        sizes = [class_size(q.d, m) for m in q.profiles[:-1]]
        return prod(sizes) * max(q.d, 1)
    n = factorial(q.d)
    return (2 * q.h - 1 + len(q.profiles)) * n * n


@cache
def _group(d: int):
    """Elements of S_d (lexicographic), their multiplication table and inverses."""
    elems = np.array(list(itertools.permutations(range(d))), dtype=np.int64)
    codes = elems @ (d ** np.arange(d - 1, -1, -1))
    # mult[i, j] = index of elems[i] o elems[j] (apply j first)
    composed = np.take_along_axis(
        np.broadcast_to(elems[:, None, :], (len(elems), len(elems), d)),
        np.broadcast_to(elems[None, :, :], (len(elems), len(elems), d)),
        axis=2,
    )
    mult = np.searchsorted(codes, composed @ (d ** np.arange(d - 1, -1, -1)))
    inv = np.argsort(elems, axis=1) @ (d ** np.arange(d - 1, -1, -1))
    inv = np.searchsorted(codes, inv)
    return elems, mult, inv


def _convolve(f: np.ndarray, g: np.ndarray, mult: np.ndarray) -> np.ndarray:
    sf, sg = np.nonzero(f)[0], np.nonzero(g)[0]
    out = np.zeros_like(f)
    np.add.at(out, mult[np.ix_(sf, sg)], np.multiply.outer(f[sf], g[sg]))
    return out


def _count_genus0(q: ClassicalQuery) -> int:
    if not q.profiles:
        return 1
    *head, last = q.profiles
    classes = [enumerate_class(q.d, m) for m in head]
    count = 0

    def walk(i, prefix):
        nonlocal count
        if i == len(classes):
            # the last factor is forced to be prefix^-1, which has the same cycle type
            if cycle_type(prefix) == last:
                count += 1
            return
        for s in classes[i]:
            walk(i + 1, compose(prefix, s))

    walk(0, tuple(range(q.d)))
    return count


@cache
def _commutator_counts(d: int) -> np.ndarray:
    """counts[g] = #{(a, b) in S_d^2 : a b a^-1 b^-1 = g}."""
    elems, mult, inv = _group(d)
    n = len(elems)
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    comm = mult[mult[a, b], mult[inv[a], inv[b]]]
    return np.bincount(comm.ravel(), minlength=n)


@cache
def _class_indicator(d: int, m: Partition) -> np.ndarray:
    elems = _group(d)[0]
    return np.array([cycle_type(tuple(p)) == m for p in elems], dtype=np.int64)


def _count_higher_genus(q: ClassicalQuery) -> int:
    elems, mult, _ = _group(q.d)
    bound = factorial(q.d) ** (2 * q.h) * prod(class_size(q.d, m) for m in q.profiles)
    dtype = np.int64 if bound < 2**62 else object
    comm_count = _commutator_counts(q.d).astype(dtype)
    dist = comm_count
    for _ in range(q.h - 1):
        dist = _convolve(dist, comm_count, mult)
    for m in q.profiles:
        dist = _convolve(dist, _class_indicator(q.d, m).astype(dtype), mult)
    return int(dist[0])


def brute_force_hurwitz(q: ClassicalQuery, budget: int | None = None) -> Fraction:
    """Count permutation tuples directly. Independent of any character theory.

    Genus 0 enumerates the first k-1 class-constrained factors and checks the
    forced last one. Higher genus counts commutator values over all of S_d and
    folds the remaining factors in by exact convolution over the group.
    """
    if not 1 <= q.d <= MAX_ORACLE_DEGREE:
        raise DegreeOutOfRange(f"brute force supports 1 <= d <= {MAX_ORACLE_DEGREE}, got {q.d}")
    budget = default_budget() if budget is None else budget
    work = estimated_work(q)
    if work > budget:
        raise OracleBudgetExceeded(f"estimated {work} group operations exceeds budget {budget}")
    count = _count_genus0(q) if q.h == 0 else _count_higher_genus(q)
    return Fraction(count, factorial(q.d))
