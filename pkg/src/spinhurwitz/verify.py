"""Property suites run by ``shw verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

import numpy as np

from .errors import OracleBudgetExceeded
from .hurwitz import ClassicalQuery, brute_force_hurwitz, classical_hurwitz
from .partitions import Partition, centralizer_order, odd_partitions_of, partitions_of
from .spin import (
    Parity,
    SpinEngine,
    SpinQuery,
    degree3_closed_form,
    degree4_closed_form,
    eop_genus1,
)
from .symgroup import character_table
from .trflow import interpolate_scale, make_block_family, sf_by_determinant, sf_by_kernel, vanishing_check

BUILTIN_MAX_DEGREE = 4


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def spin_labels(h: int) -> list[Parity]:
    return [Parity.EVEN] if h == 0 else [Parity.EVEN, Parity.ODD]


def nontrivial_odd(d: int) -> list[Partition]:
    return [m for m in odd_partitions_of(d) if not m.is_trivial()]


def profile_multisets(d: int, k_max: int) -> Iterator[tuple[Partition, ...]]:
    pool = nontrivial_odd(d)
    for k in range(k_max + 1):
        yield from itertools.combinations_with_replacement(pool, k)


def split_suite(degree_max: int, genus_max: int, engine: SpinEngine) -> Iterator[Check]:
    for d in range(1, min(degree_max, BUILTIN_MAX_DEGREE) + 1):
        for h in range(genus_max + 1):
            for p in spin_labels(h):
                for profs in profile_multisets(d, 3):
                    q = SpinQuery(h, p, d, profs)
                    direct = engine.value(q)
                    for h1 in range(h + 1):
                        for p1 in (Parity.EVEN, Parity.ODD):
                            h2, p2 = h - h1, p1 + p
                            if (h1 == 0 and p1) or (h2 == 0 and p2):
                                continue
                            for k0 in range(len(profs) + 1):
                                got = engine.split(q, h1, h2, p1, p2, k0)
                                yield Check("split", f"{q} = ({h1},{p1})+({h2},{p2}) k0={k0}",
                                            got == direct, f"{got} vs {direct}")


def handle_suite(degree_max: int, genus_max: int, engine: SpinEngine) -> Iterator[Check]:
    forms: dict[int, Callable] = {3: degree3_closed_form, 4: degree4_closed_form}
    for d, form in forms.items():
        if d > degree_max:
            continue
        m = nontrivial_odd(d)[0]
        for h in range(genus_max + 1):
            for p in spin_labels(h):
                for k in range(9):
                    got = engine.value(SpinQuery(h, p, d, (m,) * k))
                    want = form(h, p, k)
                    yield Check("handle", f"d={d} h={h} p={p} k={k}", got == want, f"{got} vs {want}")
    for h in range(genus_max + 1):
        for p in spin_labels(h):
            for d, want in ((1, Fraction(p.sign)), (2, p.sign * Fraction(2) ** (h - 1))):
                if d <= degree_max:
                    got = engine.value(SpinQuery(h, p, d))
                    yield Check("handle", f"etale d={d} h={h} p={p}", got == want, f"{got} vs {want}")
    for d in range(1, min(degree_max, BUILTIN_MAX_DEGREE) + 1):
        one = Partition.trivial(d)
        for h in range(min(genus_max, 3) + 1):
            for p in spin_labels(h):
                for profs in profile_multisets(d, 2):
                    a = engine.value(SpinQuery(h, p, d, profs))
                    b = engine.value(SpinQuery(h, p, d, profs + (one,)))
                    yield Check("handle", f"trivial insertion d={d} h={h} p={p} {list(map(str, profs))}",
                                a == b, f"{a} vs {b}")
    if degree_max >= 4:
        for k in range(9):
            got = engine.value(SpinQuery(1, Parity.ODD, 4, (Partition((3, 1)),) * k))
            want = eop_genus1(k)
            yield Check("handle", f"genus-1 odd central characters k={k}", got == want, f"{got} vs {want}")


def gt_suite(degree_max: int, genus_max: int, engine: SpinEngine) -> Iterator[Check]:
    for d in (3, 4):
        if d > degree_max:
            continue
        for h in range(2, max(genus_max, 2) + 1):
            for p in (Parity.EVEN, Parity.ODD):
                got = engine.gt_local(h, p, d)
                want = engine.value(SpinQuery(h, p, d))
                yield Check("gt", f"d={d} h={h} p={p}", got == want, f"{got} vs {want}")


def frobenius_suite(degree_max: int, genus_max: int) -> Iterator[Check]:
    for d in range(1, min(degree_max, 8) + 1):
        t = character_table(d)
        dims = t.dims
        n = factorial(d)
        ok = sum(v * v for v in dims.values()) == n
        yield Check("frobenius", f"S_{d} dimension sum", ok)
        for a, b in itertools.combinations_with_replacement(t.irreps, 2):
            s = sum(Fraction(n, centralizer_order(mu)) * t(a, mu) * t(b, mu) for mu in t.classes)
            yield Check("frobenius", f"S_{d} row orthogonality {a} {b}", s == (n if a == b else 0), str(s))
        for a, b in itertools.combinations_with_replacement(t.classes, 2):
            s = sum(t(lam, a) * t(lam, b) for lam in t.irreps)
            yield Check("frobenius", f"S_{d} column orthogonality {a} {b}",
                        s == (centralizer_order(a) if a == b else 0), str(s))
    for d in range(1, min(degree_max, 5) + 1):
        parts = partitions_of(d)
        for h in range(min(genus_max, 2) + 1):
            for k in range(5):
                for profs in itertools.combinations_with_replacement(parts, k):
                    q = ClassicalQuery(h, d, profs)
                    try:
                        brute = brute_force_hurwitz(q)
                    except OracleBudgetExceeded:
                        continue
                    frob = classical_hurwitz(q)
                    yield Check("frobenius", f"h={h} d={d} {[str(m) for m in profs]}",
                                brute == frob, f"{frob} vs {brute}")


def block_specs(n_max: int) -> Iterator[tuple[str, ...]]:
    """All block sequences of complex dimension 1..n_max."""
    def rec(room):
        if room >= 1:
            for rest in rec(room - 1):
                yield ("kernel",) + rest
        if room >= 2:
            for rest in rec(room - 2):
                yield ("invertible",) + rest
        yield ()
    seen = set()
    for spec in rec(n_max):
        if spec and spec not in seen:
            seen.add(spec)
            yield spec


def trflow_suite(n_max: int = 8, random_conjugations: int = 200) -> Iterator[Check]:
    specs = list(block_specs(n_max))
    for spec in specs:
        f = make_block_family(spec)
        det, ker = sf_by_determinant(f), sf_by_kernel(f)
        want = (-1) ** f.kernel_blocks()
        yield Check("trflow", f"blocks {','.join(spec)}", det.sign == ker.sign == want,
                    f"det {det.sign} ker {ker.sign} expected {want}")
    rng = np.random.default_rng(20240101)
    for seed in range(random_conjugations):
        spec = specs[int(rng.integers(len(specs)))]
        f = make_block_family(spec, scale=float(rng.uniform(0.5, 2.0)), seed=seed)
        det, ker = sf_by_determinant(f), sf_by_kernel(f)
        tr = max(f.tr_residual(t) for t in np.linspace(-5, 5, 11))
        van = vanishing_check(f, np.linspace(-5, 5, 11), seed=seed)
        ok = (det.sign == ker.sign == (-1) ** f.kernel_blocks() and tr <= 1e-12
              and van["max_identity_residual"] <= 1e-10 and van["all_bounds_ok"])
        yield Check("trflow", f"seed {seed} blocks {','.join(spec)}", ok,
                    f"det {det.sign} ker {ker.sign} tr {tr:.1e} van {van['max_identity_residual']:.1e}")
    for i, spec in enumerate(specs[:20]):
        signs = interpolate_scale(spec, 0.25, 4.0, seed=i)
        yield Check("trflow", f"scale interpolation {','.join(spec)}", len(set(signs)) == 1, str(signs))


SUITES = ("split", "handle", "gt", "frobenius", "trflow")


def run_suite(name: str, degree_max: int = 4, genus_max: int = 5,
              engine: SpinEngine | None = None) -> list[Check]:
    engine = engine or SpinEngine()
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, degree_max, genus_max, engine)]
    if name == "split":
        return list(split_suite(degree_max, min(genus_max, 4), engine))
    if name == "handle":
        return list(handle_suite(degree_max, genus_max, engine))
    if name == "gt":
        return list(gt_suite(degree_max, genus_max, engine))
    if name == "frobenius":
        return list(frobenius_suite(degree_max, genus_max))
    if name == "trflow":
        return list(trflow_suite())
    raise ValueError(f"unknown suite {name!r}")
