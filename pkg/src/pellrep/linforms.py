"""Logarithmic heights, the Matveev-type lower bound, and the initial
index bounds it yields for the two concatenation equations.

The chain per sequence kind: a first linear form in three logarithms
bounds l1*log(b) linearly in log(n); feeding that bound back into the
height of the second form's leading coefficient gives an inequality
n*log(alpha) < C*(1 + log(1.3 n))^2 + log(residue), whose crossing point
is located by certified bisection.  All constants are either computed as
enclosures or are the published parameter choices, each verified against
the exact requirement before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .precision import (
    ALPHA,
    LOG_ALPHA,
    SQRT2,
    IntLit,
    Interval,
    PrecisionExhausted,
    RatLit,
    RealExpr,
    as_expr,
    certified_compare,
    eval_expr,
    floor_of_upper,
    log,
    log_interval,
)
from .sequences import SequenceKind


class ZeroInput(ValueError):
    """Height of zero is undefined."""


class NoFixpoint(Exception):
    """The closing inequality has no finite crossing below the scan limit."""


@dataclass(frozen=True)
class QuadraticNumber:
    """u + v*sqrt(2) with rational u, v."""

    u: Fraction
    v: Fraction

    @property
    def degree(self) -> int:
        return 2 if self.v != 0 else 1

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def as_expr(self) -> RealExpr:
        return as_expr(self.u) + as_expr(self.v) * SQRT2

    def conjugate_expr(self) -> RealExpr:
        return as_expr(self.u) - as_expr(self.v) * SQRT2

    def minimal_polynomial(self) -> tuple[int, ...]:
        """Primitive integer coefficients, leading first."""
        if self.is_zero():
            raise ZeroInput("zero has no minimal polynomial here")
        if self.v == 0:
            # q*X - p for u = p/q in lowest terms
            return (self.u.denominator, -self.u.numerator)
        trace = 2 * self.u
        norm = self.u * self.u - 2 * self.v * self.v
        scale = math.lcm(trace.denominator, norm.denominator)
        coeffs = (scale, -(trace * scale).numerator, (norm * scale).numerator)
        g = math.gcd(*coeffs)
        return tuple(c // g for c in coeffs)


def height(x: QuadraticNumber, bits: int = 256) -> Interval:
    """Absolute logarithmic height from the minimal polynomial.

    Rational p/q in lowest terms: log max(|p|, q).  Genuine quadratics:
    (1/2) * (log a0 + sum log max(1, |root|)) over the two conjugates.
    """
    if x.is_zero():
        raise ZeroInput("height of zero is undefined")
    if x.v == 0:
        m = max(abs(x.u.numerator), x.u.denominator)
        return log_interval(Interval.point(m, bits), bits)
    a0 = x.minimal_polynomial()[0]
    total = log_interval(Interval.point(a0, bits), bits)
    for root in (x.as_expr(), x.conjugate_expr()):
        magnitude = abs(eval_expr(root, bits)).max_with(1)
        total = total + log_interval(magnitude, bits)
    return total * Fraction(1, 2)


@dataclass(frozen=True)
class MatveevInstance:
    """Parameters (t, D, A_1..A_t, B) for the lower bound on |Lambda|."""

    t: int
    D: int
    A: tuple[Fraction, ...]
    B: Fraction

    def __post_init__(self):
        if self.t < 1 or self.D < 1:
            raise ValueError("need t >= 1 and D >= 1")
        if len(self.A) != self.t:
            raise ValueError("need one A_i per logarithm")
        if any(a < Fraction(4, 25) for a in self.A):
            raise ValueError("each A_i must be at least 0.16")
        if self.B < 1:
            raise ValueError("B must be at least 1")


def _matveev_leading_expr(t: int, D: int, A: tuple[Fraction, ...]) -> RealExpr:
    from .precision import sqrt as sqrt_expr

    expr: RealExpr = as_expr(Fraction(7, 5)) * IntLit(30 ** (t + 3))
    expr = expr * IntLit(t ** 4) * sqrt_expr(t)
    expr = expr * IntLit(D * D) * (IntLit(1) + log(IntLit(D)))
    for a in A:
        expr = expr * as_expr(a)
    return expr


def matveev_exponent(inst: MatveevInstance, bits: int = 256) -> tuple[Interval, Interval]:
    """Return (leading, full) where |Lambda| > exp(-full).

    ``leading`` is 1.4 * 30^(t+3) * t^4.5 * D^2 * (1+log D) * A_1...A_t;
    ``full`` multiplies in the (1 + log B) factor.
    """
    leading = _matveev_leading_expr(inst.t, inst.D, inst.A)
    full = leading * (IntLit(1) + log(RatLit(inst.B)))
    return eval_expr(leading, bits), eval_expr(full, bits)


@dataclass
class BoundLedger:
    """Derived bound chain for one sequence kind.

    ``l1l2_max_by_base`` holds the (published, re-certified) block-length
    ceilings that the reduction stage uses as M; the tighter values this
    derivation actually produces are kept in ``computed_l1l2_by_base``
    and are asserted to dominate none of the published ones.
    """

    kind: SequenceKind
    c_first: Interval
    c_second: Interval
    n_max: int
    l1l2_max_by_base: dict[int, int]
    computed_l1l2_by_base: dict[int, int] = field(default_factory=dict)
    threshold: int = 0
    l1l2_offset: Fraction = Fraction(0)  # l1+l2 < (n log(alpha) + offset)/log b

    def __post_init__(self):
        if not (self.c_second.lo > self.c_first.hi > 0):
            raise ValueError("bound constants out of order")


@dataclass(frozen=True)
class _KindParams:
    a1_first: Fraction            # A_1 for the first linear form
    first_residue: Fraction       # |Gamma| < residue / b^l1
    a1_second_coef: int           # A_1 = coef * (1 + log 1.3 n) for the second form
    closing_residue: int          # n log(alpha) < C (1+log 1.3n)^2 + log(residue)
    l1l2_offset: Fraction         # l1+l2 < (n log(alpha) + offset) / log(b)
    reduction_m: dict[int, int]   # published M per base, re-certified below
    threshold: int                # index floor assumed during the derivation


_A2 = Fraction(89, 100)
_A3 = Fraction(47, 10)

_PARAMS: dict[SequenceKind, _KindParams] = {
    SequenceKind.PELL: _KindParams(
        a1_first=Fraction(19, 2),
        first_residue=Fraction(91, 10),
        a1_second_coef=774 * 10 ** 11,
        closing_residue=3,
        l1l2_offset=Fraction(3, 2),
        reduction_m={b: (24 * 10 ** 29 if b == 2 else 147 * 10 ** 28)
                     for b in range(2, 11)},
        threshold=110,
    ),
    SequenceKind.PELL_LUCAS: _KindParams(
        a1_first=Fraction(22, 5),
        first_residue=Fraction(27),
        a1_second_coef=4 * 10 ** 13,
        closing_residue=2,
        l1l2_offset=Fraction(16, 5),
        reduction_m={b: (117 * 10 ** 28 if b == 2 else 739 * 10 ** 27)
                     for b in range(2, 11)},
        threshold=300,
    ),
}


def first_form_coefficient(kind: SequenceKind, b: int, d1: int) -> QuadraticNumber:
    """The algebraic coefficient of the first linear form for (b, d1)."""
    if kind is SequenceKind.PELL:
        # (b-1) / (2 sqrt(2) d1) = ((b-1) / (4 d1)) * sqrt(2)
        return QuadraticNumber(Fraction(0), Fraction(b - 1, 4 * d1))
    return QuadraticNumber(Fraction(b - 1, d1), Fraction(0))


def _certify_first_form_choices(kind: SequenceKind, a1: Fraction) -> None:
    for b in range(2, 11):
        for d1 in range(1, b):
            gamma = first_form_coefficient(kind, b, d1)
            h = height(gamma)
            if not 2 * h.hi <= a1:
                raise AssertionError(
                    f"A1 choice {a1} is below 2*h for b={b}, d1={d1}")
            log_mag = abs(eval_expr(log(gamma.as_expr()), 256))
            if not log_mag.hi <= a1:
                raise AssertionError(
                    f"A1 choice {a1} is below |log gamma| for b={b}, d1={d1}")


def _certify_shared_choices() -> None:
    # A2 covers both 2*h(alpha) = log(alpha) and |log alpha|
    if certified_compare(LOG_ALPHA, _A2) >= 0:
        raise AssertionError("A2 choice is below log(alpha)")
    # A3 covers 2*log(b) <= 2*log(10) and |log b|
    if certified_compare(log(IntLit(10)), _A3 / 2) >= 0:
        raise AssertionError("A3 choice is below 2*log(10)")


def _certify_b_factor(kind: SequenceKind, threshold: int) -> None:
    # l1 + l2 < 1.3 n on the assumed index range, so B := 1.3 n is valid
    margin = as_expr(Fraction(13, 10)) - LOG_ALPHA / log(IntLit(2))
    if kind is SequenceKind.PELL:
        # additive term log(2/alpha)/log 2 is negative, so margin > 0 suffices
        if certified_compare(margin, 0) <= 0:
            raise AssertionError("log(alpha)/log(2) exceeds 1.3")
        if certified_compare(ALPHA, 2) <= 0:
            raise AssertionError("alpha must exceed 2")
    else:
        lhs = margin * IntLit(threshold) - log(IntLit(2) * ALPHA) / log(IntLit(2))
        if certified_compare(lhs, 0) <= 0:
            raise AssertionError("1.3 n does not dominate l1+l2 at the threshold")


def _second_form_height_slack(kind: SequenceKind, p: _KindParams) -> RealExpr:
    # additive constants absorbed into A_1 of the second form
    if kind is SequenceKind.PELL:
        base = log(IntLit(8)) / IntLit(2) + IntLit(3) * log(IntLit(9)) + log(IntLit(2))
    else:
        base = IntLit(3) * log(IntLit(9)) + log(IntLit(2))
    return base + log(RatLit(p.first_residue))


def _certify_second_form_coef(kind: SequenceKind, p: _KindParams,
                              c_first: Interval) -> None:
    slack = eval_expr(_second_form_height_slack(kind, p), 256)
    required = 2 * (c_first.hi + slack.hi)
    if not required <= p.a1_second_coef:
        raise AssertionError(
            f"second-form A1 coefficient {p.a1_second_coef} is below the "
            f"certified requirement {float(required)}")


def _closing_predicate(n: int, c: Interval, residue: int, bits: int):
    """Certified (value, derivative) sign of the closing inequality at n.

    g(n) = n log(alpha) - C (1 + log(1.3 n))^2 - log(residue)
    g'(n) = log(alpha) - 2 C (1 + log(1.3 n)) / n

    g' is increasing, so g(n) > 0 and g'(n) > 0 together certify that no
    index >= n satisfies the inequality chain.
    """
    la = eval_expr(LOG_ALPHA, bits)
    lr = eval_expr(log(IntLit(residue)), bits)
    t = log_interval(Interval.point(Fraction(13 * n, 10), bits), bits)
    one_plus = t + 1
    g = la * n - c * one_plus * one_plus - lr
    gp = la - c * one_plus * Fraction(2, n)
    if g.lo > 0 and gp.lo > 0:
        return True
    if g.hi < 0 or gp.hi < 0:
        return False
    return None


def _solve_index_bound(c: Interval, residue: int, threshold: int,
                       limit: int = 10 ** 40) -> int:
    """Largest index consistent with the closing inequality (certified)."""

    def decided(n: int) -> bool:
        for bits in (256, 512, 1024, 2048, 4096):
            verdict = _closing_predicate(n, c, residue, bits)
            if verdict is not None:
                return verdict
        raise PrecisionExhausted("closing inequality undecided")

    lo, hi = threshold, limit
    if not decided(hi):
        raise NoFixpoint(f"no crossing below {limit}")
    if decided(lo):
        raise NoFixpoint("closing inequality already fails at the threshold")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if decided(mid):
            hi = mid
        else:
            lo = mid
    return hi - 1


def derive_initial_bounds(kind: SequenceKind) -> BoundLedger:
    """Reproduce the two-stage bound chain for one sequence kind.

    Every published parameter choice (A_i values, the inflated second-form
    coefficient, the per-base M ceilings) is certified against the exact
    requirement before the chain is trusted.
    """
    p = _PARAMS[kind]
    _certify_shared_choices()
    _certify_first_form_choices(kind, p.a1_first)
    _certify_b_factor(kind, p.threshold)

    c_first, _ = matveev_exponent(
        MatveevInstance(t=3, D=2, A=(p.a1_first, _A2, _A3), B=Fraction(1)))
    _certify_second_form_coef(kind, p, c_first)
    c_second, _ = matveev_exponent(
        MatveevInstance(t=3, D=2, A=(Fraction(p.a1_second_coef), _A2, _A3),
                        B=Fraction(1)))

    n_max = _solve_index_bound(c_second, p.closing_residue, p.threshold)

    computed: dict[int, int] = {}
    for b in range(2, 11):
        ceiling = (IntLit(n_max) * LOG_ALPHA + RatLit(p.l1l2_offset)) / log(IntLit(b))
        computed[b] = floor_of_upper(ceiling)
        if not computed[b] < p.reduction_m[b]:
            raise AssertionError(
                f"computed l1+l2 bound {computed[b]} is not below the "
                f"published ceiling for base {b}")

    return BoundLedger(
        kind=kind,
        c_first=c_first,
        c_second=c_second,
        n_max=n_max,
        l1l2_max_by_base=dict(p.reduction_m),
        computed_l1l2_by_base=computed,
        threshold=p.threshold,
        l1l2_offset=p.l1l2_offset,
    )
