"""Symmetric-group characters (Murnaghan-Nakayama) and permutation helpers."""

from __future__ import annotations

import itertools
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from functools import cache
from math import factorial
from pathlib import Path

from .errors import DegreeOutOfRange, OracleBudgetExceeded, ProfileDegreeMismatch
from .partitions import Partition, centralizer_order, partitions_of

log = logging.getLogger(__name__)

MAX_TABLE_DEGREE = 12
MAX_ENUM_DEGREE = 8
CACHE_VERSION = 1
CACHE_ENV = "SHW_CACHE_DIR"

Perm = tuple[int, ...]


# --- characters ------------------------------------------------------------


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    n = len(shape)
    return tuple(shape[i] + (n - 1 - i) for i in range(n))


def _shape_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    parts = tuple(beta[i] - (n - 1 - i) for i in range(n))
    return tuple(p for p in parts if p > 0)


@cache
def _mn(shape: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi_shape(mu) with mu a weakly decreasing tuple; memoized on (shape, class suffix)."""
    if not mu:
        return 1 if not shape else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    # a rim hook of length r is a bead moved from x to x - r onto an empty slot;
    # its height is the number of beads jumped over
    for x in beta:
        y = x - r
        if y < 0 or y in occupied:
            continue
        height = sum(1 for b in beta if y < b < x)
        new_beta = tuple(b if b != x else y for b in beta)
        total += (-1) ** height * _mn(_shape_from_beta(new_beta), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    if lam.d != mu.d:
        raise ProfileDegreeMismatch(f"{lam} and {mu} have different sizes")
    return _mn(lam.parts, mu.parts)


@dataclass(frozen=True)
class CharacterTable:
    d: int
    irreps: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    entries: dict[tuple[Partition, Partition], int] = field(repr=False)

    @property
    def dims(self) -> dict[Partition, int]:
        one = Partition.trivial(self.d)
        return {lam: self.entries[lam, one] for lam in self.irreps}

    def __call__(self, lam: Partition, mu: Partition) -> int:
        return self.entries[lam, mu]

    def row(self, lam: Partition) -> list[int]:
        return [self.entries[lam, mu] for mu in self.classes]

    def to_json(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "d": self.d,
            "irreps": [list(p.parts) for p in self.irreps],
            "classes": [list(p.parts) for p in self.classes],
            "entries": [self.row(lam) for lam in self.irreps],
        }

    @classmethod
    def from_json(cls, doc: dict) -> CharacterTable:
        irreps = tuple(Partition(p) for p in doc["irreps"])
        classes = tuple(Partition(p) for p in doc["classes"])
        entries = {
            (lam, mu): int(v)
            for lam, row in zip(irreps, doc["entries"])
            for mu, v in zip(classes, row)
        }
        return cls(int(doc["d"]), irreps, classes, entries)


def _check_table_degree(d: int) -> None:
    if not 1 <= d <= MAX_TABLE_DEGREE:
        raise DegreeOutOfRange(f"character tables support 1 <= d <= {MAX_TABLE_DEGREE}, got {d}")


def _build_table(d: int) -> CharacterTable:
    parts = tuple(partitions_of(d))
    entries = {(lam, mu): _mn(lam.parts, mu.parts) for lam in parts for mu in parts}
    return CharacterTable(d, parts, parts, entries)


def _cache_path(cache_dir: Path, d: int) -> Path:
    return cache_dir / f"chartable_v{CACHE_VERSION}_d{d}.json"


def _read_cache(path: Path, d: int) -> CharacterTable | None:
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if doc.get("version") != CACHE_VERSION or doc.get("d") != d:
        return None
    try:
        return CharacterTable.from_json(doc)
    except (KeyError, TypeError, ValueError):
        log.warning("ignoring malformed character-table cache %s", path)
        return None


def _write_cache(path: Path, table: CharacterTable) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(table.to_json(), fh)
        os.replace(tmp, path)
    except OSError:
        log.warning("could not write character-table cache %s", path)
        Path(tmp).unlink(missing_ok=True)


_tables: dict[int, CharacterTable] = {}


def character_table(d: int, cache_dir: str | os.PathLike | None = None) -> CharacterTable:
    """Character table of S_d. Rows and columns in descending lexicographic order.

    If ``cache_dir`` (or ``$SHW_CACHE_DIR``) is set the table is read from / written
    to a JSON file there.
    """
    _check_table_degree(d)
    if d in _tables:
        return _tables[d]
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    table = None
    path = _cache_path(Path(cache_dir), d) if cache_dir else None
    if path is not None:
        table = _read_cache(path, d)
    if table is None:
        table = _build_table(d)
        if path is not None:
            _write_cache(path, table)
    _tables[d] = table
    return table


def class_size(d: int, mu: Partition) -> int:
    if mu.d != d:
        raise ProfileDegreeMismatch(f"{mu} is not a partition of {d}")
    return factorial(d) // centralizer_order(mu)


# --- permutations ------------------------------------------------------------
# A permutation of {0..d-1} is the tuple of images. compose(a, b) applies b first.


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def commutator(a: Perm, b: Perm) -> Perm:
    """a b a^-1 b^-1."""
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            n += 1
        lengths.append(n)
    return Partition(lengths)


def enumerate_class(d: int, mu: Partition, budget: int | None = None) -> list[Perm]:
    """All permutations of cycle type ``mu``, in lexicographic order of image tuples."""
    if not 1 <= d <= MAX_ENUM_DEGREE:
        raise DegreeOutOfRange(f"class enumeration supports 1 <= d <= {MAX_ENUM_DEGREE}, got {d}")
    size = class_size(d, mu)
    if budget is not None and factorial(d) > budget:
        raise OracleBudgetExceeded(f"enumerating S_{d} needs {factorial(d)} steps > budget {budget}")
    out = [p for p in itertools.permutations(range(d)) if cycle_type(p) == mu]
    assert len(out) == size
    return out
