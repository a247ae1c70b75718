"""Exact closed-form combinatorics of subdivided polygons.

Type vectors record how many (k+1)-gon faces a subdivided polygon has.
From a type vector alone we can compute vertex/edge/face counts, the
number of subdivisions of that type, the split of that count by central
polygon, the coefficients of powers of the generating series, and
Raney's generalized word-list count.  Everything here is exact integer
arithmetic; every division is asserted to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Mapping


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"non-exact division {num}/{den}")
    return q


@dataclass(frozen=True)
class TypeVector:
    """Multiset of polygon sizes: counts m_k of (k+1)-gon faces, k >= 2.

    Canonical and immutable: entries are sorted (k, m_k) pairs with
    m_k >= 1; absent k means zero.  Addition is entrywise.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for k, mk in self.entries:
            if k < 2:
                raise ValueError(f"gon index {k} < 2")
            if mk < 1:
                raise ValueError(f"zero/negative count stored for k={k}")
        if list(self.entries) != sorted(self.entries):
            raise ValueError("entries not sorted")

    @classmethod
    def of(cls, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> "TypeVector":
        if isinstance(counts, Mapping):
            counts = counts.items()
        merged: dict[int, int] = {}
        for k, mk in counts:
            merged[k] = merged.get(k, 0) + mk
        return cls(tuple(sorted((k, m) for k, m in merged.items() if m != 0)))

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "TypeVector":
        """Build from the JSON list form [m2, m3, ...]."""
        return cls.of(enumerate(counts, start=2))

    def to_counts(self) -> list[int]:
        """JSON list form [m2, m3, ...] with trailing zeros stripped."""
        if not self.entries:
            return []
        top = self.entries[-1][0]
        out = [0] * (top - 1)
        for k, mk in self.entries:
            out[k - 2] = mk
        return out

    def get(self, k: int) -> int:
        for kk, mk in self.entries:
            if kk == k:
                return mk
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __add__(self, other: "TypeVector") -> "TypeVector":
        merged = dict(self.entries)
        for k, mk in other.entries:
            merged[k] = merged.get(k, 0) + mk
        return TypeVector.of(merged)

    def __sub__(self, other: "TypeVector") -> "TypeVector":
        merged = dict(self.entries)
        for k, mk in other.entries:
            merged[k] = merged.get(k, 0) - mk
            if merged[k] < 0:
                raise ValueError("negative count in type vector difference")
        return TypeVector.of(merged)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def faces(self) -> int:
        return sum(mk for _, mk in self.entries)

    def max_gon(self) -> int:
        """Largest gon index with a nonzero count; 1 for the empty vector."""
        return self.entries[-1][0] if self.entries else 1

    def type_factorial(self) -> int:
        out = 1
        for _, mk in self.entries:
            out *= factorial(mk)
        return out

    def __str__(self) -> str:
        if not self.entries:
            return "[]"
        return "[" + ", ".join(f"m{k}={mk}" for k, mk in self.entries) + "]"


def unit_type(j: int) -> TypeVector:
    """The basis vector with m_j = 1 and all other counts zero."""
    if j < 2:
        raise ValueError(f"gon index {j} < 2")
    return TypeVector(((j, 1),))


@dataclass(frozen=True)
class VEF:
    """Vertex, edge and face counts of a subdivided polygon."""

    V: int
    E: int
    F: int

    def __post_init__(self):
        if self.V - self.E + self.F != 1:
            raise ValueError(f"Euler relation violated: {self}")


def vef(m: TypeVector) -> VEF:
    """V = 2 + sum (k-1) m_k,  E = 1 + sum k m_k,  F = sum m_k."""
    v = 2 + sum((k - 1) * mk for k, mk in m.items())
    e = 1 + sum(k * mk for k, mk in m.items())
    f = m.faces()
    return VEF(v, e, f)


def hyper_catalan(m: TypeVector) -> int:
    """Number of subdivided roofed polygons of type m: (E-1)!/((V-1)! m!)."""
    s = vef(m)
    # (E-1)!/(V-1)! is a falling-factorial product since E >= V always
    num = factorial(s.E - 1)
    return _exact_div(num, factorial(s.V - 1) * m.type_factorial())


def central_count(m: TypeVector, r: int) -> int:
    """Subdigons of type m whose central polygon is an (r+1)-gon.

    Equals r*m_r*C_m/(E_m - 1), computed as r*m_r*(E-2)!/((V-1)! m!)
    so the division by E-1 is cancelled symbolically.
    """
    if r < 2:
        raise ValueError(f"central gon arity {r} < 2")
    mr = m.get(r)
    if mr == 0:
        return 0
    s = vef(m)
    num = r * mr * factorial(s.E - 2)
    return _exact_div(num, factorial(s.V - 1) * m.type_factorial())


def power_coeff(m: TypeVector, r: int) -> int:
    """Coefficient of t^m in the r-th power of the subdigon series.

    Closed form r*(r-2+E_m)!/((r-2+V_m)! m!); equals the number of
    subdigons of type m + unit(r) with a central (r+1)-gon.
    """
    if r < 1:
        raise ValueError(f"power {r} < 1")
    s = vef(m)
    num = r * factorial(r - 2 + s.E)
    return _exact_div(num, factorial(r - 2 + s.V) * m.type_factorial())


@dataclass(frozen=True)
class Composition:
    """Symbol counts of a Raney string: m_1 plus the m_2, m_3, ... tail.

    The zero count m_0 is never stored; for a list of n words it is
    forced by the rank condition to n + m_2 + 2*m_3 + ...
    """

    m1: int = 0
    tail: TypeVector = field(default_factory=TypeVector)

    def __post_init__(self):
        if self.m1 < 0:
            raise ValueError("negative m_1")

    def zeros(self, n: int) -> int:
        return n + sum((k - 1) * mk for k, mk in self.tail.items())

    def length(self, n: int) -> int:
        return self.zeros(n) + self.m1 + self.tail.faces()


def raney_count(n: int, c: Composition) -> int:
    """Number of lists of n words with symbol composition c.

    L = (n/m) * multinomial(m; m_0, m_1, m_2, ...) with m_0 derived,
    computed integrally as n*(m-1)!/(m_0! m_1! m_2! ...).
    """
    if n < 1:
        raise ValueError(f"word count {n} < 1")
    m0 = c.zeros(n)
    m = c.length(n)
    num = n * factorial(m - 1)
    den = factorial(m0) * factorial(c.m1) * c.tail.type_factorial()
    return _exact_div(num, den)
