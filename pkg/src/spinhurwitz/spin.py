"""Spin Hurwitz numbers by genus recursion over low-degree base tables.

Values are computed by repeatedly removing handles,

    H^{h,p}_{m^1..m^k} = sum_{m odd} z_m H^{h-1,p}_{m,m,m^1..m^k}     (h >= 2 or (h,p) = (1,even))

until the query reaches genus 0 or (genus 1, odd), where a ``BaseProvider`` must
answer. The genus-splitting identity is exposed separately as
``split_spin_hurwitz`` so that it can be checked against the recursion.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol, Sequence

from .errors import (
    BaseCaseUnavailable,
    InvalidSplit,
    NotOddProfile,
    UnrealizableSpinStructure,
)
from .partitions import Partition, centralizer_order, check_profiles, is_odd, odd_partitions_of

log = logging.getLogger(__name__)


class Parity(enum.IntEnum):
    """Parity of a theta characteristic. EVEN is written "+" (sign +1), ODD is "-" (sign -1)."""

    EVEN = 0
    ODD = 1

    @property
    def sign(self) -> int:
        return -1 if self else 1

    @property
    def symbol(self) -> str:
        return "-" if self else "+"

    def __add__(self, other):
        if isinstance(other, Parity):
            return Parity((int(self) + int(other)) % 2)
        return NotImplemented

    def __str__(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str | int | Parity) -> Parity:
        if isinstance(text, Parity):
            return text
        if isinstance(text, int):
            return cls(text % 2)
        key = text.strip().lower()
        if key in ("even", "+", "0", "plus"):
            return cls.EVEN
        if key in ("odd", "-", "1", "minus"):
            return cls.ODD
        raise ValueError(f"unknown parity {text!r}; use even/+ or odd/-")


@dataclass(frozen=True)
class SpinQuery:
    h: int
    parity: Parity
    d: int
    profiles: tuple[Partition, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity.parse(self.parity))
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if self.h < 0:
            raise ValueError(f"genus must be non-negative, got {self.h}")
        if self.d < 1:
            raise ValueError(f"degree must be positive, got {self.d}")
        if self.h == 0 and self.parity is Parity.ODD:
            raise UnrealizableSpinStructure("a genus-0 spin curve only has even parity")
        check_profiles(self.d, self.profiles)
        for m in self.profiles:
            if not is_odd(m):
                raise NotOddProfile(f"profile {m} has an even part")

    @property
    def k(self) -> int:
        return len(self.profiles)

    def key(self) -> tuple:
        return (self.h, int(self.parity), self.d, tuple(m.parts for m in self.profiles))

    def with_profiles(self, profiles: Sequence[Partition], h: int | None = None,
                      parity: Parity | None = None) -> SpinQuery:
        return SpinQuery(self.h if h is None else h,
                         self.parity if parity is None else parity,
                         self.d, tuple(profiles))

    def to_json(self) -> dict:
        return {
            "genus": self.h,
            "parity": str(self.parity),
            "degree": self.d,
            "profiles": [str(m) for m in self.profiles],
        }

    def __str__(self) -> str:
        profs = ";".join(str(m) for m in self.profiles) or "-"
        return f"H^({self.h},{self.parity.symbol})_d={self.d}[{profs}]"


def normalize(q: SpinQuery) -> SpinQuery:
    """Drop trivial (1^d) profiles and sort the rest (descending); value preserving."""
    kept = sorted((m for m in q.profiles if not m.is_trivial()), reverse=True)
    return SpinQuery(q.h, q.parity, q.d, tuple(kept))


class BaseProvider(Protocol):
    """Answers some normalized queries of genus 0 or 1; consulted in registration order."""

    name: str

    def lookup(self, q: SpinQuery) -> Fraction | None: ...


class LowDegreeTable:
    """Closed forms for degrees 1 to 4 at genus 0 (even) and genus 1.

    Degree 2 uses (-1)^p 2^(h-1), which is what the genus recursions force from
    the genus-0 value 1/2; see KNOWN_DISCREPANCIES.
    """

    name = "low-degree"

    def lookup(self, q: SpinQuery) -> Fraction | None:
        if q.h > 1 or q.d > 4:
            return None
        s = q.parity.sign
        if q.d == 1:
            return Fraction(s)
        if q.d == 2:
            return Fraction(s) * Fraction(2) ** (q.h - 1)
        # for d = 3, 4 the only non-trivial odd profile is (3) resp. (3,1)
        k = q.k
        if q.d == 3:
            if q.h == 0:
                return Fraction(1, 9) * ((-1) ** k * Fraction(2) ** (k - 1) + 1)
            if q.parity is Parity.ODD:
                return Fraction((-1) ** k * 2**k - 1)
            return None
        if q.h == 0:
            if k == 0:
                return Fraction(1, 24)
            return -Fraction(1, 18) * ((-1) ** (k - 1) * 2 ** (k - 1) - 4 ** (k - 1))
        if q.parity is Parity.ODD:
            return Fraction((-1) ** k * 2**k - 4**k)
        return None


KNOWN_DISCREPANCIES = (
    {
        "quantity": "H_2^{h,p}",
        "literature_form": "(-1)^p 2^h",
        "shipped_form": "(-1)^p 2^(h-1)",
        "note": "the literature form gives H_2^{0,+} = 1, but the trivial double cover of P^1 "
                "has weight 1/2, and the genus-splitting identity at h = 1 fails with it",
    },
)


@dataclass(frozen=True)
class CentralCharacterData:
    """Central-character values entering the genus-1 odd formula in degree 4."""

    f3_at_31: int = -4
    f3_at_4: int = 8

    @staticmethod
    def p1(m: Partition) -> Fraction:
        return m.d - Fraction(1, 24)

    @staticmethod
    def p3(m: Partition) -> Fraction:
        return sum(x**3 for x in m.parts) - Fraction(1, 240)


def eop_genus1(k: int, data: CentralCharacterData = CentralCharacterData()) -> Fraction:
    """H^{1,-}_{(3,1)^k} = 2^-k (f(3,1)^k - f(4)^k)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return Fraction(data.f3_at_31**k - data.f3_at_4**k, 2**k)


@dataclass
class SpinEngine:
    """Evaluates spin Hurwitz numbers; holds the provider list and the memo table."""

    providers: list[BaseProvider] = field(default_factory=lambda: [LowDegreeTable()])
    memoize: bool = True
    _memo: dict = field(default_factory=dict, repr=False)

    def register(self, provider: BaseProvider, first: bool = False) -> None:
        if first:
            self.providers.insert(0, provider)
        else:
            self.providers.append(provider)
        self._memo.clear()

    def clear(self) -> None:
        self._memo.clear()

    def _base(self, q: SpinQuery) -> tuple[Fraction, str] | None:
        if q.h > 1:
            return None
        for provider in self.providers:
            value = provider.lookup(q)
            if value is not None:
                return Fraction(value), provider.name
        return None

    def _handle_terms(self, q: SpinQuery):
        for m in odd_partitions_of(q.d):
            yield m, centralizer_order(m), normalize(q.with_profiles((m, m) + q.profiles, h=q.h - 1))

    def value(self, q: SpinQuery) -> Fraction:
        q = normalize(q)
        key = q.key()
        if self.memoize and key in self._memo:
            return self._memo[key]
        base = self._base(q)
        if base is not None:
            result = base[0]
        elif q.h >= 2 or (q.h == 1 and q.parity is Parity.EVEN):
            result = sum((z * self.value(sub) for _, z, sub in self._handle_terms(q)), Fraction(0))
        else:
            raise BaseCaseUnavailable(f"no base provider answers {q}")
        if self.memoize:
            self._memo[key] = result
        return result

    def explain(self, q: SpinQuery) -> dict:
        """Derivation tree: which rule produced each value, with its z_m coefficients."""
        q = normalize(q)
        base = self._base(q)
        if base is not None:
            return {"rule": f"base:{base[1]}", "query": q.to_json(), "value": _fmt(base[0])}
        if not (q.h >= 2 or (q.h == 1 and q.parity is Parity.EVEN)):
            raise BaseCaseUnavailable(f"no base provider answers {q}")
        children = []
        for m, z, sub in self._handle_terms(q):
            children.append({"partition": str(m), "coefficient": z, "node": self.explain(sub)})
        return {
            "rule": "handle-removal",
            "query": q.to_json(),
            "value": _fmt(self.value(q)),
            "terms": children,
        }

    def split(self, q: SpinQuery, h1: int, h2: int, p1: Parity, p2: Parity, k0: int) -> Fraction:
        """Evaluate q by cutting the target into genus h1 and h2 pieces.

        The first k0 profiles (of the normalized query) go to the first piece.
        """
        p1, p2 = Parity.parse(p1), Parity.parse(p2)
        q = normalize(q)
        if h1 < 0 or h2 < 0 or h1 + h2 != q.h:
            raise InvalidSplit(f"genera {h1} + {h2} do not sum to {q.h}")
        if p1 + p2 != q.parity:
            raise InvalidSplit(f"parities {p1} + {p2} do not add to {q.parity}")
        if not 0 <= k0 <= q.k:
            raise InvalidSplit(f"k0 = {k0} outside [0, {q.k}]")
        for hi, pi in ((h1, p1), (h2, p2)):
            if hi == 0 and pi is Parity.ODD:
                raise InvalidSplit("a genus-0 piece must have even parity")
        left, right = q.profiles[:k0], q.profiles[k0:]
        total = Fraction(0)
        for m in odd_partitions_of(q.d):
            a = self.value(SpinQuery(h1, p1, q.d, left + (m,)))
            b = self.value(SpinQuery(h2, p2, q.d, (m,) + right))
            total += centralizer_order(m) * a * b
        return total

    def _chain(self, h: int, d: int, extra: tuple[Partition, ...]) -> Fraction:
        """Genus-h target cut into h genus-1 odd pieces in a row; ``extra`` sits on the first."""
        odd = odd_partitions_of(d)
        z = {m: centralizer_order(m) for m in odd}

        def g1(*profiles):
            return self.value(SpinQuery(1, Parity.ODD, d, profiles))

        if h == 1:
            return g1(*extra)
        # v[m] = weighted value of the tail of the chain that attaches to the next piece along m
        v = {m: g1(m) for m in odd}
        for _ in range(h - 2):
            v = {m2: sum((z[m1] * g1(m2, m1) * v[m1] for m1 in odd), Fraction(0)) for m2 in odd}
        return sum((z[m] * g1(*extra, m) * v[m] for m in odd), Fraction(0))

    def gt_local(self, h: int, parity: Parity, d: int) -> Fraction:
        """Etale spin Hurwitz number at genus h >= 2 as a chain of genus-1 odd numbers."""
        parity = Parity.parse(parity)
        if h < 2:
            raise ValueError(f"gt_local needs genus >= 2, got {h}")
        if h % 2 == int(parity):
            return self._chain(h, d, ())
        # one handle removal first, then the chain at genus h - 1
        return sum(
            (centralizer_order(m) * self._chain(h - 1, d, (m, m)) for m in odd_partitions_of(d)),
            Fraction(0),
        )


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


DEFAULT_ENGINE = SpinEngine()


def spin_hurwitz(q: SpinQuery, engine: SpinEngine | None = None) -> Fraction:
    return (engine or DEFAULT_ENGINE).value(q)


def split_spin_hurwitz(q: SpinQuery, h1: int, h2: int, p1: Parity, p2: Parity, k0: int,
                       engine: SpinEngine | None = None) -> Fraction:
    return (engine or DEFAULT_ENGINE).split(q, h1, h2, p1, p2, k0)


def gt_local(h: int, parity: Parity, d: int, engine: SpinEngine | None = None) -> Fraction:
    return (engine or DEFAULT_ENGINE).gt_local(h, parity, d)


def degree3_closed_form(h: int, parity: Parity, k: int) -> Fraction:
    return Fraction(3) ** (2 * h - 2) * ((-1) ** k * Fraction(2) ** (k + h - 1) + Parity.parse(parity).sign)


def degree4_closed_form(h: int, parity: Parity, k: int) -> Fraction:
    s = Parity.parse(parity).sign
    return Fraction(6) ** (2 * h - 2) * 2**k * (s * Fraction(2) ** (k + h - 1) + (-1) ** k)
