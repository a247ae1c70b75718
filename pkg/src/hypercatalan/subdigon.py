"""Roofed subdivided polygons as recursive values.

A subdigon is either null (two vertices, one edge, no faces) or a
central (k+1)-gon with k ordered subdigon children glued roof-to-side.
This module enumerates subdigons exhaustively by type, serving as the
brute-force oracle for the closed-form counts, and serializes them in
the same digit form as the corresponding plane-tree words.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .core import TypeVector, VEF, unit_type
from .series import LayeredPoly


@dataclass(frozen=True)
class Subdigon:
    """Null when children is empty, otherwise a panel of arity >= 2."""

    children: tuple["Subdigon", ...] = ()

    def __post_init__(self):
        if len(self.children) == 1:
            raise ValueError("panel arity must be >= 2")

    @property
    def is_null(self) -> bool:
        return not self.children

    def __repr__(self):
        return f"Subdigon({serialize(self)!r})"


NULL = Subdigon()


def panel(k: int, children) -> Subdigon:
    """Glue k ordered subdigons to a central (k+1)-gon."""
    children = tuple(children)
    if k < 2:
        raise ValueError(f"panel arity {k} < 2")
    if len(children) != k:
        raise ValueError(f"expected {k} children, got {len(children)}")
    return Subdigon(children)


def unpanel(s: Subdigon) -> tuple[int, tuple[Subdigon, ...]]:
    if s.is_null:
        raise ValueError("cannot unpanel the null subdigon")
    return len(s.children), s.children


def central_arity(s: Subdigon) -> int | None:
    """Arity of the root panel, None for the null subdigon."""
    return len(s.children) if s.children else None


def type_of(s: Subdigon) -> TypeVector:
    """m_k = number of panels of arity k anywhere in s."""
    counts: dict[int, int] = {}

    def walk(node: Subdigon):
        if node.children:
            k = len(node.children)
            counts[k] = counts.get(k, 0) + 1
            for c in node.children:
                walk(c)

    walk(s)
    return TypeVector.of(counts)


def vef_structural(s: Subdigon) -> VEF:
    """V/E/F by the gluing recursion, independent of the linear formulas.

    Each child shares its two roof vertices and one roof edge with the
    central polygon.
    """
    if s.is_null:
        return VEF(2, 1, 0)
    k = len(s.children)
    v, e, f = k + 1, k + 1, 1
    for c in s.children:
        sub = vef_structural(c)
        v += sub.V - 2
        e += sub.E - 1
        f += sub.F
    return VEF(v, e, f)


def _sub_vectors(m: TypeVector) -> list[TypeVector]:
    """All type vectors s with 0 <= s_k <= m_k entrywise."""
    ks = [k for k, _ in m.items()]
    ranges = [range(mk + 1) for _, mk in m.items()]
    return [
        TypeVector.of(zip(ks, picks)) for picks in itertools.product(*ranges)
    ]


@lru_cache(maxsize=None)
def _splits(m: TypeVector, parts: int) -> tuple[tuple[TypeVector, ...], ...]:
    """All ordered tuples of `parts` type vectors summing to m."""
    if parts == 0:
        return ((),) if not m else ()
    if parts == 1:
        return ((m,),)
    out = []
    for first in _sub_vectors(m):
        for rest in _splits(m - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _enumerate(m: TypeVector) -> tuple[Subdigon, ...]:
    if not m:
        return (NULL,)
    out = []
    for r, mr in m.items():
        remaining = m - unit_type(r)
        for split in _splits(remaining, r):
            child_lists = [_enumerate(part) for part in split]
            for children in itertools.product(*child_lists):
                out.append(Subdigon(children))
    return tuple(out)


DEFAULT_FACE_CAP = 8


def enumerate_subdigons(m: TypeVector, face_cap: int = DEFAULT_FACE_CAP) -> list[Subdigon]:
    """Every subdigon of type m exactly once, in deterministic order.

    Splits on the central polygon first; uniqueness of that
    decomposition rules out double counting.
    """
    if m.faces() > face_cap:
        raise ValueError(f"face count {m.faces()} exceeds cap {face_cap}")
    return list(_enumerate(m))


@lru_cache(maxsize=None)
def _count(m: TypeVector) -> int:
    if not m:
        return 1
    total = 0
    for r, _ in m.items():
        total += _count_tuple(m - unit_type(r), r)
    return total


@lru_cache(maxsize=None)
def _count_tuple(m: TypeVector, parts: int) -> int:
    """Ordered tuples of `parts` subdigons with types summing to m."""
    if parts == 0:
        return 0 if m else 1
    if parts == 1:
        return _count(m)
    total = 0
    for first in _sub_vectors(m):
        c = _count(first)
        if c:
            total += c * _count_tuple(m - first, parts - 1)
    return total


def count_subdigons(m: TypeVector) -> int:
    """|enumerate_subdigons(m)| via the same recursion, memoized, no materialization."""
    return _count(m)


def psi_sum(subdigons) -> LayeredPoly:
    """Sum of accounting monomials t^type over a multiset of subdigons."""
    acc: dict[TypeVector, int] = {}
    for s in subdigons:
        m = type_of(s)
        acc[m] = acc.get(m, 0) + 1
    return LayeredPoly(acc)


def serialize(s: Subdigon) -> str:
    """Digit form of the subdigon's plane-tree word; arities above 9 bracketed."""
    if s.is_null:
        return "0"
    k = len(s.children)
    head = str(k) if k <= 9 else f"[{k}]"
    return head + "".join(serialize(c) for c in s.children)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse(text: str) -> Subdigon:
    pos = 0

    def parse_one() -> Subdigon:
        nonlocal pos
        if pos >= len(text):
            raise ParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "0":
            pos += 1
            return NULL
        if ch == "[":
            close = text.find("]", pos)
            if close < 0:
                raise ParseError("unterminated bracket", pos)
            digits = text[pos + 1 : close]
            if not digits.isdigit():
                raise ParseError(f"bad arity {digits!r}", pos)
            k = int(digits)
            pos = close + 1
        elif ch.isdigit():
            k = int(ch)
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        if k < 2:
            raise ParseError(f"panel arity {k} < 2", pos - 1)
        return Subdigon(tuple(parse_one() for _ in range(k)))

    out = parse_one()
    if pos != len(text):
        raise ParseError("trailing input", pos)
    return out


def to_json(subdigons) -> str:
    return json.dumps([serialize(s) for s in subdigons])
