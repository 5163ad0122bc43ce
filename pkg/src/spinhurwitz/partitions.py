"""Integer partitions used as ramification profiles and conjugacy-class labels."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import DegreeOutOfRange, InvalidPartition, ProfileDegreeMismatch

MAX_DEGREE = 20


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``d`` stored as a weakly decreasing tuple of positive parts.

    Construct with any ordering of parts; the constructor canonicalizes.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise InvalidPartition("empty partition")
        if parts[-1] < 1:
            raise InvalidPartition(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def trivial(cls, d: int) -> Partition:
        return cls((1,) * d)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"3,1"``, ``"3 1"``, ``"1^4"`` or mixes such as ``"3,1^2"``."""
        parts: list[int] = []
        tokens = [t for t in re.split(r"[,\s]+", text.strip().strip("()")) if t]
        if not tokens:
            raise InvalidPartition(f"cannot parse partition from {text!r}")
        for tok in tokens:
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if m is None:
                raise InvalidPartition(f"bad partition token {tok!r} in {text!r}")
            part, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([part] * mult)
        return cls(parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def is_trivial(self) -> bool:
        return self.parts[0] == 1

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def short(self) -> str:
        """Exponent notation, e.g. ``3,1^2``."""
        out = []
        for k, r in sorted(self.multiplicities().items(), reverse=True):
            out.append(f"{k}^{r}" if r > 1 else str(k))
        return ",".join(out)


def _check_degree(d: int) -> None:
    if not 1 <= d <= MAX_DEGREE:
        raise DegreeOutOfRange(f"degree must be in [1, {MAX_DEGREE}], got {d}")


@cache
def _partition_tuples(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in descending lexicographic order."""
    _check_degree(d)
    return [Partition(p) for p in _partition_tuples(d, d)]


def odd_partitions_of(d: int) -> list[Partition]:
    return [m for m in partitions_of(d) if is_odd(m)]


def weight(m: Partition) -> int:
    """|m|, the product of the parts."""
    return prod(m.parts)


def aut_order(m: Partition) -> int:
    """m! = |Aut(m)|, the product of factorials of part multiplicities."""
    return prod(factorial(r) for r in m.multiplicities().values())


def centralizer_order(m: Partition) -> int:
    return weight(m) * aut_order(m)


def centralizer_order_by_multiplicity(m: Partition) -> int:
    """z_m as prod k^{r_k} r_k!; kept separate as a cross-check on centralizer_order."""
    return prod(k**r * factorial(r) for k, r in m.multiplicities().items())


def is_odd(m: Partition) -> bool:
    return weight(m) % 2 == 1


def check_profiles(d: int, profiles: Sequence[Partition]) -> None:
    for i, m in enumerate(profiles):
        if m.d != d:
            raise ProfileDegreeMismatch(f"profile #{i} ({m}) sums to {m.d}, expected {d}")


def euler_characteristic(d: int, h: int, profiles: Sequence[Partition]) -> int:
    """Riemann-Hurwitz Euler characteristic of a degree-d cover of a genus-h curve."""
    check_profiles(d, profiles)
    return 2 * d * (1 - h) + sum(len(m) - d for m in profiles)


def rational_component_count(m: Partition) -> Fraction:
    """Number of degree-d maps to a rational curve fully ramified as (m, 1^d, m): d! m! / |m|."""
    value = Fraction(factorial(m.d) * aut_order(m), weight(m))
    assert value.denominator == 1, value
    return value


def parse_profiles(text: str | None) -> list[Partition]:
    """Parse a ``;``-separated list of profiles; blank input means no profiles."""
    if text is None or not text.strip():
        return []
    return [Partition.parse(chunk) for chunk in text.split(";") if chunk.strip()]


def format_profiles(profiles: Sequence[Partition]) -> str:
    return ";".join(str(m) for m in profiles)
