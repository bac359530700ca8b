"""Certified continued fractions of irrational expressions.

Partial quotients are extracted by the Gauss map acting on an interval
enclosure of the input.  A quotient is emitted only when both endpoints
agree on the floor; if certification fails anywhere, the whole prefix is
recomputed from a fresh enclosure at doubled precision.  Deep quotients
are therefore immune to the silent corruption that floating-point
expansions suffer from.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import precision as _precision
from .precision import (
    DEFAULT_START_BITS,
    RealExpr,
    PrecisionExhausted,
    as_expr,
    certified_sign,
    eval_expr,
    is_exact,
)


class InsufficientExpansion(Exception):
    """The expansion does not reach the requested denominator or index."""


class ContinuedFraction:
    """Expandable continued fraction [a0; a1, a2, ...] of an irrational.

    ``quotients[k]`` is a_k and ``convergents[k] == (p_k, q_k)`` with the
    usual seeds p_0 = a_0, q_0 = 1.  Completed prefixes never change when
    the expansion is extended.
    """

    def __init__(self, tau: RealExpr, bits_start: int = DEFAULT_START_BITS):
        if is_exact(tau):
            raise ValueError("continued-fraction input must be irrational")
        self.tau = tau
        self.quotients: list[int] = []
        self.convergents: list[tuple[int, int]] = []
        self._bits = bits_start

    def q(self, k: int) -> int:
        return self.convergents[k][1]

    def p(self, k: int) -> int:
        return self.convergents[k][0]

    def __len__(self) -> int:
        return len(self.quotients)

    def _recompute(self, done) -> bool:
        """One full expansion pass at the current precision.

        Returns True when ``done(quotients, convergents)`` was reached,
        False when certification failed first (caller doubles precision).
        Deterministic: a completed prefix is always reproduced verbatim.
        """
        iv = eval_expr(self.tau, self._bits)
        lo, hi = iv.lo, iv.hi
        quotients: list[int] = []
        convergents: list[tuple[int, int]] = []
        p_prev, p_cur = 0, 1  # p_{-2}, p_{-1}
        q_prev, q_cur = 1, 0  # q_{-2}, q_{-1}
        while not done(quotients, convergents):
            a_lo = math.floor(lo)
            if a_lo != math.floor(hi):
                return False
            quotients.append(a_lo)
            p_prev, p_cur = p_cur, a_lo * p_cur + p_prev
            q_prev, q_cur = q_cur, a_lo * q_cur + q_prev
            convergents.append((p_cur, q_cur))
            lo, hi = lo - a_lo, hi - a_lo
            if lo <= 0:
                return False  # fractional part not certified positive
            lo, hi = 1 / hi, 1 / lo
        self.quotients = quotients
        self.convergents = convergents
        return True

    def _expand(self, done) -> None:
        if done(self.quotients, self.convergents):
            return
        while True:
            if self._recompute(done):
                return
            if self._bits >= _precision.MAX_BITS:
                raise PrecisionExhausted(
                    "expansion stalled at the precision cap; "
                    "input may be rational")
            self._bits = min(self._bits * 2, _precision.MAX_BITS)

    def extend_until_q_exceeds(self, threshold: int) -> None:
        self._expand(lambda qs, cs: bool(cs) and cs[-1][1] > threshold)

    def extend_to_length(self, count: int) -> None:
        self._expand(lambda qs, cs: len(qs) >= count)


def expand_until_q_exceeds(tau: RealExpr, threshold: int) -> ContinuedFraction:
    """Expand tau until the last convergent denominator exceeds threshold."""
    if threshold < 1:
        raise ValueError("threshold must be positive")
    cf = ContinuedFraction(tau)
    cf.extend_until_q_exceeds(threshold)
    return cf


def a_max(cf: ContinuedFraction, M: int) -> tuple[int, int]:
    """Smallest index N with q_N > M and the largest quotient a_0..a_N."""
    if M < 1:
        raise ValueError("M must be positive")
    for k, (_, q_k) in enumerate(cf.convergents):
        if q_k > M:
            return k, max(cf.quotients[: k + 1])
    raise InsufficientExpansion(f"no convergent denominator exceeds {M}")


def legendre_lower_bound(cf: ContinuedFraction, M: int, y: int) -> Fraction:
    """Certified lower bound on |tau - x/y| over all integers x.

    Valid for 0 < y < M: any rational this close to tau would be a
    convergent, and quotients up to the first q_N > M cap how good a
    convergent can be.
    """
    if not 0 < y < M:
        raise ValueError("need 0 < y < M")
    _, a_m = a_max(cf, M)
    return Fraction(1, (a_m + 2) * y * y)


def legendre_locate(tau: RealExpr, x: int, y: int) -> bool:
    """Certified test of |tau - x/y| < 1/(2 y^2); on success the pair is
    asserted to be a convergent of tau."""
    if y < 1:
        raise ValueError("denominator must be positive")
    if math.gcd(x, y) != 1:
        raise ValueError("x/y must be in lowest terms")
    target = Fraction(x, y)
    gap = Fraction(1, 2 * y * y)
    # sign of (tau - x/y)^2 - gap^2 decides |tau - x/y| vs gap without
    # needing the sign of the difference itself
    diff = tau - as_expr(target)
    close = certified_sign(diff * diff - as_expr(gap * gap)) < 0
    if close:
        cf = expand_until_q_exceeds(tau, y)
        assert (x, y) in cf.convergents, (
            "certified Legendre-close rational is not a convergent")
    return close


def convergent_gap_certified(cf: ContinuedFraction, k: int,
                             bits: int = 512) -> bool:
    """Check |tau - p_k/q_k| < 1/(q_k * q_{k+1}) for a completed index."""
    if k + 1 >= len(cf.convergents):
        raise InsufficientExpansion("need convergent k+1")
    p_k, q_k = cf.convergents[k]
    q_next = cf.convergents[k + 1][1]
    iv = eval_expr(cf.tau, bits)
    diff_hi = max(abs(iv.lo - Fraction(p_k, q_k)), abs(iv.hi - Fraction(p_k, q_k)))
    return diff_hi < Fraction(1, q_k * q_next)
