"""Sparse exact multivariate polynomials with level truncation.

A polynomial here is a finite map from TypeVector to a signed big
integer.  Layer exponents (vertex level V-2, edge level E-1, face level
F) are recomputed from each monomial's type vector, never stored.  A
LayerSpec fixes a measure and a maximum level; truncated multiplication
prunes partial products as soon as their level exceeds the bound, which
is sound because all three measures are additive.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .core import TypeVector, hyper_catalan, unit_type, vef


class Measure(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    FACE = "face"


def level(m: TypeVector, measure: Measure) -> int:
    """Shifted level of a monomial: V-2, E-1 or F depending on measure."""
    s = vef(m)
    if measure is Measure.VERTEX:
        return s.V - 2
    if measure is Measure.EDGE:
        return s.E - 1
    return s.F


@dataclass(frozen=True)
class LayerSpec:
    """A measure with a maximum level d and an optional gon bound q.

    Face layering without a gon bound has infinite support and is
    rejected.  For vertex/edge layering the level bound alone forces a
    finite gon range (k <= d+1 resp. k <= d).
    """

    measure: Measure
    d: int
    gon_bound: int | None = None

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f"negative level bound {self.d}")
        if self.gon_bound is not None and self.gon_bound < 2:
            raise ValueError(f"gon bound {self.gon_bound} < 2")
        if self.measure is Measure.FACE and self.gon_bound is None:
            raise ValueError("face layering requires a gon bound")

    def admits(self, m: TypeVector) -> bool:
        if self.gon_bound is not None and m.max_gon() > self.gon_bound:
            return False
        return level(m, self.measure) <= self.d

    def max_gon(self) -> int:
        """Largest gon index any admitted monomial can mention."""
        if self.measure is Measure.VERTEX:
            k = self.d + 1
        elif self.measure is Measure.EDGE:
            k = self.d
        else:
            k = self.gon_bound
        if self.gon_bound is not None:
            k = min(k, self.gon_bound)
        return max(k, 1)


def term_key(m: TypeVector, measure: Measure):
    """Deterministic term order: graded by level, then lex on entries."""
    return (level(m, measure), m.entries)


class NonzeroRemainder(ArithmeticError):
    """Raised when an expected-exact polynomial division leaves a remainder."""


class LayeredPoly:
    """Immutable sparse polynomial over type-vector monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[TypeVector, int] | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls) -> "LayeredPoly":
        return cls()

    @classmethod
    def one(cls) -> "LayeredPoly":
        return cls({TypeVector(): 1})

    @classmethod
    def monomial(cls, m: TypeVector, coeff: int = 1) -> "LayeredPoly":
        return cls({m: coeff})

    def __setattr__(self, *a):
        raise AttributeError("LayeredPoly is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, LayeredPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, m: TypeVector) -> int:
        return self.terms.get(m, 0)

    def __add__(self, other: "LayeredPoly") -> "LayeredPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LayeredPoly(out)

    def __sub__(self, other: "LayeredPoly") -> "LayeredPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return LayeredPoly(out)

    def __neg__(self) -> "LayeredPoly":
        return LayeredPoly({m: -c for m, c in self.terms.items()})

    def scale(self, c: int) -> "LayeredPoly":
        return LayeredPoly({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "LayeredPoly") -> "LayeredPoly":
        out: dict[TypeVector, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return LayeredPoly(out)

    def sorted_terms(self, measure: Measure) -> list[tuple[TypeVector, int]]:
        return sorted(self.terms.items(), key=lambda t: term_key(t[0], measure))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (t[0].faces(), t[0].entries)):
            mono = "".join(
                f"t{k}" + (f"^{mk}" if mk > 1 else "") for k, mk in m.items()
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> str:
        rows = [
            {"type": m.to_counts(), "coeff": str(c)}
            for m, c in sorted(self.terms.items(), key=lambda t: (t[0].faces(), t[0].entries))
        ]
        return json.dumps(rows)

    @classmethod
    def from_json(cls, text: str) -> "LayeredPoly":
        out: dict[TypeVector, int] = {}
        for row in json.loads(text):
            m = TypeVector.from_counts(row["type"])
            out[m] = out.get(m, 0) + int(row["coeff"])
        return cls(out)


def truncate(p: LayeredPoly, spec: LayerSpec) -> LayeredPoly:
    """Keep terms with level <= d (and gon index <= q if bounded)."""
    return LayeredPoly({m: c for m, c in p.terms.items() if spec.admits(m)})


def mul_truncated(p: LayeredPoly, q: LayeredPoly, spec: LayerSpec) -> LayeredPoly:
    """truncate(p*q, spec), pruning partial products eagerly.

    Sound because every measure is additive: once a pair of monomials
    exceeds level d, so does any extension of it.
    """
    out: dict[TypeVector, int] = {}
    plevels = [(m, c, level(m, spec.measure)) for m, c in p.terms.items()]
    qlevels = [(m, c, level(m, spec.measure)) for m, c in q.terms.items()]
    for m1, c1, l1 in plevels:
        if l1 > spec.d:
            continue
        for m2, c2, l2 in qlevels:
            if l1 + l2 > spec.d:
                continue
            m = m1 + m2
            if spec.gon_bound is not None and m.max_gon() > spec.gon_bound:
                continue
            out[m] = out.get(m, 0) + c1 * c2
    return LayeredPoly(out)


def enumerate_types(spec: LayerSpec) -> list[TypeVector]:
    """All type vectors admitted by spec, graded by level then lex."""
    kmax = spec.max_gon()
    found: list[TypeVector] = []

    def grow(k: int, counts: list[tuple[int, int]], lvl: int):
        if lvl > spec.d:
            return
        if k > kmax:
            found.append(TypeVector(tuple(counts)))
            return
        if spec.measure is Measure.VERTEX:
            step = k - 1
        elif spec.measure is Measure.EDGE:
            step = k
        else:
            step = 1
        grow(k + 1, counts, lvl)
        mk = 1
        while lvl + mk * step <= spec.d:
            grow(k + 1, counts + [(k, mk)], lvl + mk * step)
            mk += 1

    grow(2, [], 0)
    found.sort(key=lambda m: term_key(m, spec.measure))
    return found


def build_beta(spec: LayerSpec) -> LayeredPoly:
    """The layered truncation of the series zero: sum of C_m * t^m."""
    return LayeredPoly({m: hyper_catalan(m) for m in enumerate_types(spec)})


def _power_range(spec: LayerSpec) -> range:
    # only n with level(t_n) <= d can contribute: t_n alone has
    # vertex level n-1, edge level n, face level 1
    if spec.measure is Measure.VERTEX:
        hi = spec.d + 1
    elif spec.measure is Measure.EDGE:
        hi = spec.d
    else:
        hi = spec.gon_bound
    if spec.gon_bound is not None:
        hi = min(hi, spec.gon_bound)
    return range(2, hi + 1)


def evaluate_geometric(beta: LayeredPoly, spec: LayerSpec) -> LayeredPoly:
    """truncate(1 - beta + sum_n t_n * beta^n, spec).

    Zero whenever beta is the layered series truncation for spec.
    """
    acc = LayeredPoly.one() - truncate(beta, spec)
    power = truncate(beta, spec)  # beta^1
    for n in _power_range(spec):
        power = mul_truncated(power, beta, spec)  # beta^n
        acc = acc + mul_truncated(LayeredPoly.monomial(unit_type(n)), power, spec)
    return acc


def layer_slice(p: LayeredPoly, measure: Measure, n: int) -> LayeredPoly:
    """Sub-polynomial of terms at exactly level n."""
    return LayeredPoly({m: c for m, c in p.terms.items() if level(m, measure) == n})


def _lead(p: LayeredPoly) -> tuple[TypeVector, int]:
    # lex-descending on the exponent list [m2, m3, ...]
    m = max(p.terms, key=lambda t: t.to_counts())
    return m, p.terms[m]


def _monomial_divides(a: TypeVector, b: TypeVector) -> bool:
    return all(b.get(k) >= mk for k, mk in a.items())


def divide_exact(p: LayeredPoly, divisor: LayeredPoly) -> LayeredPoly:
    """Single-divisor multivariate division; the remainder must vanish."""
    if not divisor:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_m, lead_c = _lead(divisor)
    quotient: dict[TypeVector, int] = {}
    rem = p
    while rem:
        rm, rc = _lead(rem)
        if not _monomial_divides(lead_m, rm) or rc % lead_c != 0:
            raise NonzeroRemainder(f"leading term {rc}*{rm} not divisible")
        qm = rm - lead_m
        qc = rc // lead_c
        quotient[qm] = quotient.get(qm, 0) + qc
        rem = rem - LayeredPoly.monomial(qm, qc) * divisor
    return LayeredPoly(quotient)


def geode_quotient(d: int, q: int) -> LayeredPoly:
    """Face-layer-d slice of beta - 1 divided exactly by t_2 + ... + t_q."""
    if d < 1:
        raise ValueError(f"face level {d} < 1")
    if q < 2:
        raise ValueError(f"gon bound {q} < 2")
    spec = LayerSpec(Measure.FACE, d, q)
    beta = build_beta(spec)
    sliced = layer_slice(beta - LayeredPoly.one(), Measure.FACE, d)
    divisor = LayeredPoly({unit_type(k): 1 for k in range(2, q + 1)})
    return divide_exact(sliced, divisor)


def table_rows(spec: LayerSpec) -> list[tuple[str, LayeredPoly]]:
    """Per-level, per-source-term decomposition of the layering identity.

    For each level up to d, one row per contributing source term
    t_n*beta^n (slice at that level) plus the total row, the slice of
    beta - 1.  Row label convention matches the layer tables:
    "[v^3] t2 b^2" style source rows, "[v^3] total" for totals.
    """
    sym = {Measure.VERTEX: "v", Measure.EDGE: "e", Measure.FACE: "f"}[spec.measure]
    beta = build_beta(spec)
    powers: dict[int, LayeredPoly] = {1: beta}
    for n in _power_range(spec):
        powers[n] = mul_truncated(powers[n - 1], beta, spec)
    rows: list[tuple[str, LayeredPoly]] = []
    total_all = beta - LayeredPoly.one()
    for lvl in range(spec.d + 1):
        for n in _power_range(spec):
            source = mul_truncated(
                LayeredPoly.monomial(unit_type(n)), powers[n], spec
            )
            part = layer_slice(source, spec.measure, lvl)
            if part:
                rows.append((f"[{sym}^{lvl}] t{n} b^{n}", part))
        rows.append((f"[{sym}^{lvl}] total", layer_slice(total_all, spec.measure, lvl)))
    return rows


def table_csv(spec: LayerSpec) -> str:
    lines = ["row,polynomial"]
    for label, poly in table_rows(spec):
        lines.append(f'{label},"{poly}"')
    return "\n".join(lines) + "\n"
