"""The polynomials G_{k,i}(x) of non-backtracking walk counts.

    G_{k,0} = 1,  G_{k,1} = x + 1,  G_{k,i+1} = x G_{k,i} - (k-1) G_{k,i-1}

Coefficients are exact Python ints built once per (k, d) and cached. Real
evaluation goes through mpmath at a configurable working precision; the
closed forms and the derivative formula are cross-checks against that path,
never the primary route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

DEFAULT_PRECISION = 128


# ---------------------------------------------------------------------------
# Z[sqrt(m)]
# ---------------------------------------------------------------------------


def _sign_of(a, b, m: int) -> int:
    """Exact sign of a + b*sqrt(m) for rationals a, b and integer m >= 0."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or m == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 m
    lhs, rhs = a * a, b * b * m
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@dataclass(frozen=True)
class QuadInt:
    """Exact element a + b*sqrt(m) with integer a, b."""

    a: int
    b: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("radicand must be >= 1")

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            if other.m != self.m:
                raise ValueError(f"mixed radicands {self.m} and {other.m}")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.m)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.a + o.a, self.b + o.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(
            self.a * o.a + self.b * o.b * self.m,
            self.a * o.b + self.b * o.a,
            self.m,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        return _sign_of(self.a, self.b, self.m)

    def compare(self, other) -> int:
        """-1, 0, 1 as self <, ==, > other; other is a QuadInt or a rational."""
        if isinstance(other, QuadInt):
            return (self - other).sign()
        if isinstance(other, Rational):
            return _sign_of(self.a - Fraction(other), self.b, self.m)
        raise TypeError(f"cannot compare QuadInt with {type(other).__name__}")

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def to_mpf(self, precision_bits: int = DEFAULT_PRECISION):
        with mpmath.workprec(precision_bits + 32):
            v = mpmath.mpf(self.a) + self.b * mpmath.sqrt(self.m)
        return v

    def __float__(self):
        return float(self.to_mpf(64))

    def decimal(self, digits: int = 30) -> str:
        bits = int(digits * 3.33) + 64
        return mpmath.nstr(self.to_mpf(bits), digits, strip_zeros=False)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.m})"


# ---------------------------------------------------------------------------
# the polynomial family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GPoly:
    k: int
    d: int
    coeffs: tuple[int, ...]  # ascending degree

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out


@lru_cache(maxsize=None)
def _coeff_table(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    prev, cur = [1], [1, 1]
    table = [tuple(prev), tuple(cur)]
    for _ in range(1, d):
        nxt = [0] + cur  # x * G_i
        for j, c in enumerate(prev):
            nxt[j] -= (k - 1) * c
        prev, cur = cur, nxt
        table.append(tuple(cur))
    return tuple(table[: d + 1])


def build(k: int, d: int) -> GPoly:
    """G_{k,d} with exact integer coefficients."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    return GPoly(k, d, _coeff_table(k, d)[d])


def eval_exact(g: GPoly, x):
    """Horner evaluation in whatever exact ring x lives in (int, Fraction, QuadInt)."""
    acc = 0
    for c in reversed(g.coeffs):
        acc = acc * x + c
    return acc


def horner_error_bound(g: GPoly, x, precision_bits: int = DEFAULT_PRECISION):
    """A priori absolute error bound of eval_real.

    Standard Horner analysis: |computed - exact| <= gamma_{2d} * sum |c_i| |x|^i
    with gamma_n = n u / (1 - n u) and unit roundoff u = 2^-precision_bits.
    Input x is taken as exact (it is a float or mpf already).
    """
    with mpmath.workprec(precision_bits + 32):
        ax = abs(mpmath.mpf(x))
        mag = mpmath.mpf(0)
        for c in reversed(g.coeffs):
            mag = mag * ax + abs(c)
        nu = 2 * max(g.degree, 1) * mpmath.ldexp(1, -precision_bits)
        return mag * nu / (1 - nu)


def eval_real(g: GPoly, x, precision_bits: int = DEFAULT_PRECISION):
    """Evaluate at a real x with `precision_bits` of working precision (mpf result).

    See horner_error_bound for the error guarantee.
    """
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")
    with mpmath.workprec(precision_bits):
        xv = mpmath.mpf(x)
        acc = mpmath.mpf(0)
        for c in reversed(g.coeffs):
            acc = acc * xv + c
    return acc


def _outer_x(k: int, x, what: str):
    xv = mpmath.mpf(x)
    if k < 3:
        raise ValueError(f"{what} needs k >= 3")
    edge = 2 * mpmath.sqrt(k - 1)
    # a double-precision rounding of the double root counts as the double root
    if abs(xv) <= edge * (1 + mpmath.ldexp(1, -48)):
        raise ValueError(
            f"{what}: x = {mpmath.nstr(xv, 10)} lies in [-2sqrt(k-1), 2sqrt(k-1)] "
            "where t^2 - x t + (k-1) has no distinct real roots"
        )
    if abs(xv) >= k:
        raise ValueError(f"{what}: need |x| < k, got {mpmath.nstr(xv, 10)}")
    return xv


def closed_form(k: int, d: int, x, precision_bits: int = DEFAULT_PRECISION):
    """Two-term explicit formula, valid for 2sqrt(k-1) < |x| < k."""
    with mpmath.workprec(precision_bits):
        xv = _outer_x(k, x, "closed_form")
        s = mpmath.sqrt(xv * xv - 4 * k + 4)
        plus = (xv + 2 + s) / (2 * s) * ((xv + s) / 2) ** d
        minus = (xv + 2 - s) / (2 * s) * ((xv - s) / 2) ** d
        return plus - minus


def derivative_eval(k: int, d: int, x, precision_bits: int = DEFAULT_PRECISION):
    """G'_{k,d}(x) from the six-term closed form; singular at x = +-2sqrt(k-1)."""
    with mpmath.workprec(precision_bits):
        xv = _outer_x(k, x, "derivative_eval")
        q = xv * xv - 4 * k + 4
        s = mpmath.sqrt(q)
        lo, hi = xv - s, xv + s
        den = mpmath.ldexp(1, d + 1)
        q32 = q * s
        terms = (
            d * lo**d * (xv + 2 - s) / (den * q),
            lo ** (d + 1) / (den * q),
            xv * lo**d * (xv + 2 - s) / (den * q32),
            d * hi**d * (xv + 2 + s) / (den * q),
            hi ** (d + 1) / (den * q),
            -xv * hi**d * (xv + 2 + s) / (den * q32),
        )
        return mpmath.fsum(terms)


def _normalize_sign(sign) -> int:
    if sign in ("+", 1, "pos", "positive"):
        return 1
    if sign in ("-", -1, "neg", "negative"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def sqrt_power(m: int, e: int) -> QuadInt:
    """sqrt(m)^e as an element of Z[sqrt(m)], e >= 0."""
    if e % 2 == 0:
        return QuadInt(m ** (e // 2), 0, m)
    return QuadInt(0, m ** (e // 2), m)


def special_value(k: int, d: int, sign) -> QuadInt:
    """Exact G_{k,d}(+-2sqrt(k-1)), the double-root values.

    G(2r)  = (d+1) r^d + d r^(d-1)
    G(-2r) = (-1)^d ((d+1) r^d - d r^(d-1)),   r = sqrt(k-1)
    """
    if k < 3:
        raise ValueError("special_value needs k >= 3")
    if d < 0:
        raise ValueError("d must be >= 0")
    sgn = _normalize_sign(sign)
    m = k - 1
    main = (d + 1) * sqrt_power(m, d)
    tail = d * sqrt_power(m, d - 1) if d >= 1 else QuadInt(0, 0, m)
    if sgn > 0:
        return main + tail
    val = main - tail
    return val if d % 2 == 0 else -val


def double_root(k: int, sign) -> QuadInt:
    """+-2sqrt(k-1) as a QuadInt."""
    return QuadInt(0, 2 * _normalize_sign(sign), k - 1)


def monotonicity_scan(
    k: int,
    d: int,
    interval: str,
    samples: int,
    precision_bits: int = DEFAULT_PRECISION,
) -> bool:
    """Check strict monotonicity of G_{k,d} on equally spaced samples.

    interval="positive": increasing on [2sqrt(k-1), k].
    interval="negative": decreasing on [-k, -2sqrt(k-1)] (even d only).
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    if interval not in ("positive", "negative"):
        raise ValueError(f"interval must be 'positive' or 'negative', got {interval!r}")
    if interval == "negative" and d % 2:
        raise ValueError("the decreasing claim on the negative interval needs even d")
    g = build(k, d)
    with mpmath.workprec(precision_bits):
        edge = 2 * mpmath.sqrt(k - 1)
        lo, hi = (edge, mpmath.mpf(k)) if interval == "positive" else (mpmath.mpf(-k), -edge)
        xs = mpmath.linspace(lo, hi, samples)
        vals = [eval_real(g, x, precision_bits) for x in xs]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    if interval == "positive":
        return all(v > 0 for v in diffs)
    return all(v < 0 for v in diffs)


def sup_norm_derivative_bound(g: GPoly, radius) -> float:
    """Upper bound of |G'(x)| on |x| <= radius, from absolute coefficients."""
    total = 0.0
    r = float(radius)
    for i, c in enumerate(g.coeffs[1:], start=1):
        total += i * abs(c) * r ** (i - 1)
    return total


def moore_value(k: int, d: int) -> int:
    """G_{k,d}(k), which equals the Moore bound."""
    return eval_exact(build(k, d), k)


def is_monic(g: GPoly) -> bool:
    return g.coeffs[-1] == 1 and len(g.coeffs) == g.d + 1


__all__ = [
    "DEFAULT_PRECISION",
    "GPoly",
    "QuadInt",
    "build",
    "closed_form",
    "derivative_eval",
    "double_root",
    "eval_exact",
    "eval_real",
    "horner_error_bound",
    "monotonicity_scan",
    "moore_value",
    "special_value",
    "sqrt_power",
    "sup_norm_derivative_bound",
]
