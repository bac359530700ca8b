"""Certified interval arithmetic over exact rationals.

Every irrational quantity in this package (square roots, logarithms and
their rational combinations) is evaluated as a two-sided enclosure: an
``Interval`` whose ``Fraction`` endpoints are guaranteed to bracket the
exact real value.  Rational operations on intervals are exact; sqrt and
log leaves are bounded with directed-rounding MPFR (gmpy2), so soundness
rests only on MPFR's correct rounding plus exact big-integer arithmetic.

Adaptive helpers (:func:`certified_floor`, :func:`certified_sign`,
:func:`nearest_integer_distance`) re-evaluate at doubled precision until
the requested predicate is decided, up to a hard cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

import gmpy2

DEFAULT_START_BITS = 192
MAX_BITS = 1_000_000

_EVAL_RETRIES = 8
_CACHE_LIMIT = 1 << 18

Rat = Union[int, Fraction]


class PrecisionError(Exception):
    """Base class for certified-evaluation failures."""


class PrecisionExhausted(PrecisionError):
    """A predicate stayed undecided at the maximum working precision.

    For floor/nearest queries this usually signals that the true value is
    an integer or half-integer (e.g. a rational fed to a routine that
    expects an irrational).
    """


class DivisionByIntervalContainingZero(PrecisionError):
    pass


class LogOfIntervalTouchingZero(PrecisionError):
    pass


def set_max_bits(bits: int) -> None:
    """Override the global precision cap (used by the CLI)."""
    global MAX_BITS
    if bits < 256:
        raise ValueError("precision cap must be at least 256 bits")
    MAX_BITS = bits


# ---------------------------------------------------------------------------
# Interval


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints.

    ``bits`` records the precision that was requested when the interval
    was produced; it does not affect arithmetic.
    """

    lo: Fraction
    hi: Fraction
    bits: int = 0

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: Rat, bits: int = 0) -> "Interval":
        f = Fraction(x)
        return Interval(f, f, bits)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Rat) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def sign(self):
        """-1, 0 or +1 when certain, None when the interval straddles 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.point(other, self.bits)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi, min(self.bits, o.bits))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Interval(self.lo - o.hi, self.hi - o.lo, min(self.bits, o.bits))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return Interval(-self.hi, -self.lo, self.bits)

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi), self.bits)

    def __mul__(self, other):
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products), min(self.bits, o.bits))

    __rmul__ = __mul__

    def inverse(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise DivisionByIntervalContainingZero(str(self))
        return Interval(1 / self.hi, 1 / self.lo, self.bits)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def max_with(self, c: Rat) -> "Interval":
        c = Fraction(c)
        return Interval(max(self.lo, c), max(self.hi, c), self.bits)

    def __str__(self):
        return f"[{float(self.lo)!r}, {float(self.hi)!r}]@{self.bits}b"


# ---------------------------------------------------------------------------
# Expression trees


class RealExpr:
    """Symbolic expression over integers, rationals, sqrt, log and ring ops.

    Nodes are immutable and hash structurally, so shared subterms (log α,
    τ = log b / log α, ...) hit the evaluation cache across callers.
    """

    __slots__ = ()

    def __add__(self, other):
        return Add(self, as_expr(other))

    def __radd__(self, other):
        return Add(as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __rsub__(self, other):
        return Sub(as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __rmul__(self, other):
        return Mul(as_expr(other), self)

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __rtruediv__(self, other):
        return Div(as_expr(other), self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("only integer powers are supported")
        if exponent == 0:
            return IntLit(1)
        if exponent == 1:
            return self
        return Pow(self, exponent)

    def __neg__(self):
        return Sub(IntLit(0), self)


@dataclass(frozen=True)
class IntLit(RealExpr):
    value: int


@dataclass(frozen=True)
class RatLit(RealExpr):
    value: Fraction


@dataclass(frozen=True)
class SqrtInt(RealExpr):
    radicand: int


@dataclass(frozen=True)
class Log(RealExpr):
    arg: RealExpr


@dataclass(frozen=True)
class Add(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Sub(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Mul(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Div(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Pow(RealExpr):
    base: RealExpr
    exponent: int


def as_expr(x) -> RealExpr:
    if isinstance(x, RealExpr):
        return x
    if isinstance(x, int):
        return IntLit(x)
    if isinstance(x, Fraction):
        return RatLit(x) if x.denominator != 1 else IntLit(x.numerator)
    raise TypeError(f"cannot lift {type(x).__name__} to RealExpr")


def sqrt(n: int) -> RealExpr:
    if not isinstance(n, int) or n < 0:
        raise ValueError("sqrt takes a non-negative integer")
    r = isqrt(n)
    if r * r == n:
        return IntLit(r)
    return SqrtInt(n)


def log(x) -> RealExpr:
    e = as_expr(x)
    if isinstance(e, IntLit) and e.value <= 0:
        raise ValueError("log of a non-positive constant")
    if isinstance(e, RatLit) and e.value <= 0:
        raise ValueError("log of a non-positive constant")
    return Log(e)


SQRT2 = sqrt(2)
ALPHA = IntLit(1) + SQRT2           # 1 + sqrt(2), dominant Pell root
BETA = IntLit(1) - SQRT2            # 1 - sqrt(2), the conjugate root
LOG_ALPHA = log(ALPHA)


_size_cache: dict = {}


def _size(expr: RealExpr) -> int:
    cached = _size_cache.get(expr)
    if cached is not None:
        return cached
    if isinstance(expr, (IntLit, RatLit, SqrtInt)):
        n = 1
    elif isinstance(expr, Log):
        n = 1 + _size(expr.arg)
    elif isinstance(expr, Pow):
        n = 1 + _size(expr.base)
    else:
        n = 1 + _size(expr.left) + _size(expr.right)
    if len(_size_cache) > _CACHE_LIMIT:
        _size_cache.clear()
    _size_cache[expr] = n
    return n


def is_exact(expr: RealExpr) -> bool:
    """True when the expression is sqrt-free and log-free."""
    if isinstance(expr, (IntLit, RatLit)):
        return True
    if isinstance(expr, (SqrtInt, Log)):
        return False
    if isinstance(expr, Pow):
        return is_exact(expr.base)
    return is_exact(expr.left) and is_exact(expr.right)


def exact_value(expr: RealExpr) -> Fraction:
    if isinstance(expr, IntLit):
        return Fraction(expr.value)
    if isinstance(expr, RatLit):
        return expr.value
    if isinstance(expr, Add):
        return exact_value(expr.left) + exact_value(expr.right)
    if isinstance(expr, Sub):
        return exact_value(expr.left) - exact_value(expr.right)
    if isinstance(expr, Mul):
        return exact_value(expr.left) * exact_value(expr.right)
    if isinstance(expr, Div):
        denom = exact_value(expr.right)
        if denom == 0:
            raise DivisionByIntervalContainingZero("exact zero divisor")
        return exact_value(expr.left) / denom
    if isinstance(expr, Pow):
        base = exact_value(expr.base)
        if expr.exponent < 0 and base == 0:
            raise DivisionByIntervalContainingZero("exact zero base")
        return base ** expr.exponent
    raise TypeError(f"not an exact expression: {expr!r}")


# ---------------------------------------------------------------------------
# Directed-rounding leaf enclosures


_ctx_cache: dict = {}


def _ctx(bits: int, up: bool) -> gmpy2.context:
    key = (bits, up)
    ctx = _ctx_cache.get(key)
    if ctx is None:
        ctx = gmpy2.context(precision=bits,
                            round=gmpy2.RoundUp if up else gmpy2.RoundDown)
        _ctx_cache[key] = ctx
    return ctx


def _mpfr_fraction(x) -> Fraction:
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


def _log_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    # log is increasing, so rounding the argument and the result in the
    # same direction preserves the bound.
    q = gmpy2.mpq(x.numerator, x.denominator)
    lo = _ctx(bits, up=False).log(q)
    hi = _ctx(bits, up=True).log(q)
    return _mpfr_fraction(lo), _mpfr_fraction(hi)


def _sqrt_lower(x: Fraction, frac_bits: int) -> Fraction:
    scaled = (x.numerator << (2 * frac_bits)) // x.denominator
    return Fraction(isqrt(scaled), 1 << frac_bits)


def _sqrt_upper(x: Fraction, frac_bits: int) -> Fraction:
    scaled = (x.numerator << (2 * frac_bits)) // x.denominator
    return Fraction(isqrt(scaled) + 1, 1 << frac_bits)


def _round_out(lo: Fraction, hi: Fraction, frac_bits: int) -> tuple[Fraction, Fraction]:
    den = 1 << frac_bits
    lo_r = Fraction((lo.numerator * den) // lo.denominator, den)
    hi_r = Fraction(-((-hi.numerator * den) // hi.denominator), den)
    return lo_r, hi_r


# ---------------------------------------------------------------------------
# Evaluation


class _Retry(Exception):
    def __init__(self, cause: PrecisionError):
        self.cause = cause


_eval_cache: dict = {}


def clear_eval_cache() -> None:
    _eval_cache.clear()
    _size_cache.clear()


def _eval(expr: RealExpr, F: int) -> tuple[Fraction, Fraction]:
    key = (expr, F)
    hit = _eval_cache.get(key)
    if hit is not None:
        return hit

    if isinstance(expr, IntLit):
        v = Fraction(expr.value)
        out = (v, v)
    elif isinstance(expr, RatLit):
        out = (expr.value, expr.value)
    elif isinstance(expr, SqrtInt):
        x = Fraction(expr.radicand)
        out = (_sqrt_lower(x, F), _sqrt_upper(x, F))
    elif isinstance(expr, Log):
        alo, ahi = _eval(expr.arg, F)
        if ahi <= 0:
            raise LogOfIntervalTouchingZero("argument enclosure is non-positive")
        if alo <= 0:
            if alo == ahi:
                raise LogOfIntervalTouchingZero("argument is exactly non-positive")
            raise _Retry(LogOfIntervalTouchingZero("argument enclosure touches zero"))
        out = (_log_bounds(alo, F)[0], _log_bounds(ahi, F)[1])
    elif isinstance(expr, Add):
        llo, lhi = _eval(expr.left, F)
        rlo, rhi = _eval(expr.right, F)
        out = (llo + rlo, lhi + rhi)
    elif isinstance(expr, Sub):
        llo, lhi = _eval(expr.left, F)
        rlo, rhi = _eval(expr.right, F)
        out = (llo - rhi, lhi - rlo)
    elif isinstance(expr, Mul):
        llo, lhi = _eval(expr.left, F)
        rlo, rhi = _eval(expr.right, F)
        p = (llo * rlo, llo * rhi, lhi * rlo, lhi * rhi)
        out = (min(p), max(p))
    elif isinstance(expr, Div):
        rlo, rhi = _eval(expr.right, F)
        if rlo <= 0 <= rhi:
            if rlo == rhi:
                raise DivisionByIntervalContainingZero("exact zero divisor")
            raise _Retry(DivisionByIntervalContainingZero("divisor enclosure contains zero"))
        llo, lhi = _eval(expr.left, F)
        p = (llo / rlo, llo / rhi, lhi / rlo, lhi / rhi)
        out = (min(p), max(p))
    elif isinstance(expr, Pow):
        blo, bhi = _eval(expr.base, F)
        e = expr.exponent
        if e < 0:
            plo, phi = _pow_bounds(blo, bhi, -e, F)
            if plo <= 0 <= phi:
                raise _Retry(DivisionByIntervalContainingZero("power enclosure contains zero"))
            out = (min(1 / plo, 1 / phi), max(1 / plo, 1 / phi))
        else:
            out = _pow_bounds(blo, bhi, e, F)
    else:
        raise TypeError(f"unknown expression node {type(expr).__name__}")

    if len(_eval_cache) > _CACHE_LIMIT:
        _eval_cache.clear()
    _eval_cache[key] = out
    return out


def _pow_bounds(lo: Fraction, hi: Fraction, e: int, F: int) -> tuple[Fraction, Fraction]:
    # square-and-multiply with outward rounding so exact denominators do
    # not blow up for exponents in the hundreds
    rlo, rhi = Fraction(1), Fraction(1)
    base_lo, base_hi = lo, hi
    started = False
    while e:
        if e & 1:
            if not started:
                rlo, rhi = base_lo, base_hi
                started = True
            else:
                p = (rlo * base_lo, rlo * base_hi, rhi * base_lo, rhi * base_hi)
                rlo, rhi = _round_out(min(p), max(p), F)
        e >>= 1
        if e:
            p = (base_lo * base_lo, base_lo * base_hi, base_hi * base_hi)
            if base_lo <= 0 <= base_hi:
                sq_lo = Fraction(0)
            else:
                sq_lo = min(p)
            base_lo, base_hi = _round_out(sq_lo, max(p), F)
    return rlo, rhi


def eval_expr(expr: RealExpr, bits: int) -> Interval:
    """Enclose the exact value of ``expr`` at the requested precision.

    The returned interval always contains the exact real value; its width
    shrinks at least geometrically as ``bits`` doubles.  Division by an
    enclosure containing zero and log of an enclosure touching zero are
    retried a bounded number of times at higher internal precision before
    the corresponding error is raised.
    """
    if bits < 32:
        raise ValueError("bits must be >= 32")
    if is_exact(expr):
        v = exact_value(expr)
        return Interval(v, v, bits)
    F = bits + 32 + _size(expr)
    last: PrecisionError | None = None
    for _ in range(_EVAL_RETRIES):
        try:
            lo, hi = _eval(expr, F)
            return Interval(lo, hi, bits)
        except _Retry as r:
            last = r.cause
            F *= 2
    assert last is not None
    raise last


def _bit_schedule(bits_start: int, max_bits: int | None):
    cap = MAX_BITS if max_bits is None else max_bits
    bits = max(bits_start, 32)
    while bits <= cap:
        yield bits
        bits *= 2


def certified_floor(expr: RealExpr, bits_start: int = DEFAULT_START_BITS,
                    max_bits: int | None = None) -> int:
    """Exact floor of the value of ``expr``.

    Doubles precision until both endpoints share a floor.  Raises
    :class:`PrecisionExhausted` if undecided at the cap, which signals
    that the value may be an exact integer.
    """
    if is_exact(expr):
        return math.floor(exact_value(expr))
    for bits in _bit_schedule(bits_start, max_bits):
        iv = eval_expr(expr, bits)
        f_lo = math.floor(iv.lo)
        if f_lo == math.floor(iv.hi):
            return f_lo
    raise PrecisionExhausted("floor undecided; value may be an integer")


def _nearest_int(x: Fraction) -> int:
    # half-up; adaptive callers re-refine around exact halves anyway
    return math.floor(x + Fraction(1, 2))


def nearest_integer_distance(expr: RealExpr, bits_start: int = DEFAULT_START_BITS,
                             max_bits: int | None = None) -> tuple[Interval, int]:
    """Distance from the value of ``expr`` to its nearest integer.

    Returns ``(distance, nearest)`` where ``distance`` encloses
    ``|x - nearest|`` in [0, 1/2].  For exact rational input the answer is
    computed exactly (ties resolved to the even integer); otherwise the
    precision doubles until the nearest integer is certified.
    """
    if is_exact(expr):
        x = exact_value(expr)
        n = round(x)
        d = abs(x - n)
        return Interval(d, d), n
    for bits in _bit_schedule(bits_start, max_bits):
        iv = eval_expr(expr, bits)
        n = _nearest_int(iv.lo)
        if n != _nearest_int(iv.hi):
            continue
        lo_d, hi_d = iv.lo - n, iv.hi - n
        if lo_d >= 0:
            dist = Interval(lo_d, hi_d, bits)
        elif hi_d <= 0:
            dist = Interval(-hi_d, -lo_d, bits)
        else:
            dist = Interval(Fraction(0), max(-lo_d, hi_d), bits)
        return dist, n
    raise PrecisionExhausted("nearest integer undecided; value may be half-integral")


def certified_sign(expr: RealExpr, bits_start: int = DEFAULT_START_BITS,
                   max_bits: int | None = None) -> int:
    """Sign of the value of ``expr`` (-1, 0, +1); 0 only on the exact path."""
    if is_exact(expr):
        v = exact_value(expr)
        return (v > 0) - (v < 0)
    for bits in _bit_schedule(bits_start, max_bits):
        s = eval_expr(expr, bits).sign()
        if s is not None:
            return s
    raise PrecisionExhausted("sign undecided; value may be exactly zero")


def certified_compare(expr: RealExpr, threshold: Rat,
                      bits_start: int = DEFAULT_START_BITS,
                      max_bits: int | None = None) -> int:
    """Compare the value of ``expr`` against an exact rational threshold."""
    return certified_sign(Sub(expr, as_expr(Fraction(threshold))),
                          bits_start=bits_start, max_bits=max_bits)


def log_interval(iv: Interval, bits: int) -> Interval:
    """Directed-rounding log of an interval with positive lower endpoint."""
    if iv.lo <= 0:
        raise LogOfIntervalTouchingZero("interval must be strictly positive")
    return Interval(_log_bounds(iv.lo, bits)[0], _log_bounds(iv.hi, bits)[1], bits)


def floor_of_upper(expr: RealExpr, bits: int = 320) -> int:
    """Floor of the upper enclosure endpoint.

    For an integer unknown ``w`` constrained by ``w < x`` this is a sound
    upper bound on ``w`` regardless of how tight the enclosure is, which
    is all the reduction step needs.
    """
    return math.floor(eval_expr(expr, bits).hi)
