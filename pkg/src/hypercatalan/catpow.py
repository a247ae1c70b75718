"""Powers of the Catalan generating series, exactly and by reduction.

T = 1 + t T^2 lets every power of T be rewritten as a linear
combination P_r T + Q_r with polynomial coefficients; this module
holds the reduction polynomials, the closed form for the power
coefficients, and finite truncated checks of the identities.
"""

from __future__ import annotations

from math import comb, factorial


class UniPoly:
    """Dense univariate polynomial with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self or not other:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        return UniPoly((0,) * k + self.coeffs)

    def truncated(self, order: int) -> "UniPoly":
        """Drop all terms of degree above order."""
        return UniPoly(self.coeffs[: order + 1])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"negative index {n}")
    return comb(2 * n, n) // (n + 1)


def catalan_series(order: int) -> UniPoly:
    """T truncated at the given order."""
    return UniPoly(catalan(n) for n in range(order + 1))


def catalan_power(r: int, m: int) -> int:
    """Coefficient of t^m in T^r: (r/(2m+r)) * binom(2m+r, m)."""
    if r < 1:
        raise ValueError(f"power {r} < 1")
    if m < 0:
        raise ValueError(f"negative index {m}")
    num = r * factorial(2 * m + r - 1)
    q, rem = divmod(num, factorial(m + r) * factorial(m))
    assert rem == 0
    return q


def p_poly(r: int) -> UniPoly:
    """P_0 = 0, P_1 = 1, P_r = P_{r-1} - t P_{r-2}."""
    if r < 0:
        raise ValueError(f"negative index {r}")
    prev, cur = UniPoly.zero(), UniPoly.one()
    if r == 0:
        return prev
    t = UniPoly.x_power(1)
    for _ in range(r - 1):
        prev, cur = cur, cur - t * prev
    return cur


def q_poly(r: int) -> UniPoly:
    """Q_1 = 0 and Q_{r+1} = -P_r."""
    if r < 1:
        raise ValueError(f"power {r} < 1")
    if r == 1:
        return UniPoly.zero()
    return -p_poly(r - 1)


def verify_power_identity(r: int, d: int) -> UniPoly:
    """Residual of t^{r-1} T^r = P_r T + Q_r, truncated at order d.

    Both sides are computed with T truncated at order d + r; the
    contract is the zero polynomial.
    """
    if r < 1:
        raise ValueError(f"power {r} < 1")
    if d < 0:
        raise ValueError(f"negative order {d}")
    order = d + r
    T = catalan_series(order)
    lhs = UniPoly.one()
    for _ in range(r):
        lhs = (lhs * T).truncated(order)
    lhs = lhs.shift(r - 1)
    rhs = p_poly(r) * T + q_poly(r)
    return (lhs - rhs).truncated(d)


def power_recurrence_check(r: int, m: int) -> bool:
    """C^(r)_m = C^(r-1)_{m+1} - C^(r-2)_{m+1}, via the closed form."""
    if r < 3:
        raise ValueError(f"recurrence needs power >= 3, got {r}")
    return catalan_power(r, m) == catalan_power(r - 1, m + 1) - catalan_power(r - 2, m + 1)
