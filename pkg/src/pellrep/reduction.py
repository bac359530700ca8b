"""Reduction of the astronomical initial bounds to searchable ranges.

Two passes per sequence kind and base.  The first pass bounds the
leading block length l1 through the inequality
``0 < |(l1+l2) tau - n + mu| < A * b^(-l1)`` with tau = log b / log alpha;
the second bounds the index n through
``0 < |l2 tau - n + mu| < A * alpha^(-n)``.  Inhomogeneous instances
(mu != 0) go through the classical convergent/epsilon criterion; the
finitely many homogeneous instances fall back to the Legendre
best-approximation bound driven by the largest partial quotient a(M).

Every epsilon is sign-certified with interval arithmetic; every returned
bound is the floor of a certified upper enclosure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .contfrac import ContinuedFraction, a_max
from .precision import (
    ALPHA,
    DEFAULT_START_BITS,
    LOG_ALPHA,
    IntLit,
    Interval,
    PrecisionExhausted,
    RatLit,
    RealExpr,
    as_expr,
    certified_compare,
    floor_of_upper,
    log,
    nearest_integer_distance,
    SQRT2,
)
from .linforms import BoundLedger
from .sequences import SequenceKind

_EPSILON_BITS_CAP = 1 << 15


class EpsilonNeverPositive(Exception):
    """No convergent in the scan window certified epsilon > 0."""


class RationalTau(Exception):
    """The continued-fraction input behaved like a rational number."""


class Stage(enum.Enum):
    L1_STAGE = "l1"
    N_STAGE = "n"


_checked_b: dict[RealExpr, bool] = {}


@dataclass(frozen=True)
class ReductionInstance:
    """One (tau, mu, A, B, M) problem for the convergent criterion."""

    tau: RealExpr
    mu: RealExpr
    A: Fraction
    B: RealExpr
    M: int

    def __post_init__(self):
        if self.A <= 0:
            raise ValueError("A must be positive")
        if self.M < 1:
            raise ValueError("M must be positive")
        if self.B not in _checked_b:
            _checked_b[self.B] = certified_compare(self.B, 1) > 0
        if not _checked_b[self.B]:
            raise ValueError("B must exceed 1")


@dataclass(frozen=True)
class ReductionOutcome:
    q_used: int
    epsilon: Interval
    w_max: int


@dataclass(frozen=True)
class LegendreOutcome:
    a_m: int
    convergent_index: int
    q_n: int
    w_max: int


Outcome = Union[ReductionOutcome, LegendreOutcome]


@dataclass
class FamilyBound:
    kind: SequenceKind
    base: int
    stage: Stage
    bound: int
    per_instance: list[tuple[dict, Outcome]] = field(default_factory=list)


def tau_for_base(b: int) -> RealExpr:
    """tau = log b / log alpha, irrational for every base 2..10."""
    if not 2 <= b <= 10:
        raise ValueError("base must be in [2, 10]")
    return log(IntLit(b)) / LOG_ALPHA


_cf_registry: dict[int, ContinuedFraction] = {}


def continued_fraction_for_base(b: int) -> ContinuedFraction:
    cf = _cf_registry.get(b)
    if cf is None:
        cf = ContinuedFraction(tau_for_base(b))
        _cf_registry[b] = cf
    return cf


def clear_reduction_caches() -> None:
    _cf_registry.clear()
    _checked_b.clear()


# Reduced-form coefficients: |Lambda| < 2*raw/B^w turns into the stated A
# after dividing the linear form by log alpha, so A * log(alpha) >= 2*raw
# must hold.  Verified once, below, with certified arithmetic.
_BRIDGE_PAIRS = (
    (Fraction(207, 10), Fraction(91, 10)),   # l1 stage, Pell
    (Fraction(62), Fraction(27)),            # l1 stage, Pell-Lucas
    (Fraction(681, 100), Fraction(3)),       # n stage, Pell
    (Fraction(23, 5), Fraction(2)),          # n stage, Pell-Lucas
)
_bridges_verified = False


def _verify_bridges() -> None:
    global _bridges_verified
    if _bridges_verified:
        return
    for a_reduced, a_raw in _BRIDGE_PAIRS:
        lhs = as_expr(a_reduced) * LOG_ALPHA - as_expr(2 * a_raw)
        if certified_compare(lhs, 0) <= 0:
            raise AssertionError(
                f"reduced coefficient {a_reduced} does not absorb 2*{a_raw}")
    _bridges_verified = True


def _tau_distance(cf: ContinuedFraction, q: int, bits: int) -> Interval:
    cache = getattr(cf, "_tau_dist_cache", None)
    if cache is None:
        cache = {}
        cf._tau_dist_cache = cache
    key = (q, bits)
    hit = cache.get(key)
    if hit is None:
        hit, _ = nearest_integer_distance(cf.tau * IntLit(q), bits_start=bits,
                                          max_bits=_EPSILON_BITS_CAP)
        cache[key] = hit
    return hit


def _certified_epsilon(inst: ReductionInstance, cf: ContinuedFraction,
                       q: int) -> Optional[Interval]:
    """Sign-certified epsilon = ||mu q|| - M ||tau q|| at one denominator.

    Returns the enclosure when epsilon > 0 is certified, None when it is
    certified non-positive or stays undecided at the bits cap.
    """
    mu_q = inst.mu * IntLit(q)
    bits = DEFAULT_START_BITS
    while bits <= _EPSILON_BITS_CAP:
        try:
            d_mu, _ = nearest_integer_distance(mu_q, bits_start=bits,
                                               max_bits=_EPSILON_BITS_CAP)
            d_tau = _tau_distance(cf, q, bits)
        except PrecisionExhausted:
            return None
        eps = d_mu - d_tau * inst.M
        if eps.lo > 0:
            return eps
        if eps.hi <= 0:
            return None
        bits *= 2
    return None


def _w_bound(a: Fraction, q: int, eps_lo: Fraction, b_expr: RealExpr) -> int:
    # any admissible w satisfies w < log(A q / eps) / log B
    ratio = RatLit(a * q / eps_lo)
    return floor_of_upper(log(ratio) / log(b_expr))


def baker_davenport(inst: ReductionInstance,
                    cf: Optional[ContinuedFraction] = None,
                    max_attempts: int = 50,
                    scan_all: bool = False) -> ReductionOutcome:
    """Scan convergent denominators q > 6M for a certified epsilon > 0.

    Default behaviour returns the first success.  With ``scan_all`` the
    whole window is examined and the outcome with the smallest w-bound is
    returned (every success yields a sound bound, so taking the minimum
    is sound and matches the sharpest published tables).
    """
    if cf is None:
        try:
            cf = ContinuedFraction(inst.tau)
        except ValueError as exc:
            raise RationalTau(str(exc)) from exc
    elif cf.tau != inst.tau:
        raise ValueError("continued fraction does not match the instance tau")

    six_m = 6 * inst.M
    try:
        cf.extend_until_q_exceeds(six_m)
    except PrecisionExhausted as exc:
        raise RationalTau(str(exc)) from exc

    start = next(k for k, (_, q_k) in enumerate(cf.convergents) if q_k > six_m)
    best: Optional[ReductionOutcome] = None
    for k in range(start, start + max_attempts):
        if k >= len(cf):
            try:
                cf.extend_to_length(k + 8)
            except PrecisionExhausted as exc:
                raise RationalTau(str(exc)) from exc
        q = cf.q(k)
        eps = _certified_epsilon(inst, cf, q)
        if eps is None:
            continue
        outcome = ReductionOutcome(q, eps, _w_bound(inst.A, q, eps.lo, inst.B))
        if not scan_all:
            return outcome
        if best is None or outcome.w_max < best.w_max:
            best = outcome
    if best is None:
        raise EpsilonNeverPositive(
            f"no positive epsilon among {max_attempts} denominators past 6M")
    return best


def _legendre_bound(a: Fraction, a_m: int, m: int, b_expr: RealExpr) -> int:
    # A/B^w > 1/((a(M)+2) y) >= 1/((a(M)+2) M) for homogeneous forms
    ratio = RatLit(a * (a_m + 2) * m)
    return floor_of_upper(log(ratio) / log(b_expr))


# Coefficients of the reduced inequalities per kind and stage.
_L1_COEFF = {SequenceKind.PELL: Fraction(207, 10),
             SequenceKind.PELL_LUCAS: Fraction(62)}
_N_COEFF = {SequenceKind.PELL: Fraction(681, 100),
            SequenceKind.PELL_LUCAS: Fraction(23, 5)}

# The l1 derivation assumed l1 >= 5 (Pell) / l1 >= 6 (Pell-Lucas), so the
# family bound can never drop below threshold - 1.
_L1_ASSUMED = {SequenceKind.PELL: 5, SequenceKind.PELL_LUCAS: 6}


def _l1_mu(kind: SequenceKind, b: int, d1: int) -> RealExpr:
    if kind is SequenceKind.PELL:
        # -log((b-1) / (2 sqrt(2) d1)) == log(2 sqrt(2) d1 / (b-1))
        return log(IntLit(2 * d1) * SQRT2 / IntLit(b - 1)) / LOG_ALPHA
    return log(as_expr(Fraction(d1, b - 1))) / LOG_ALPHA


def _n_mu(kind: SequenceKind, b: int, numerator: int) -> RealExpr:
    if kind is SequenceKind.PELL:
        return log(IntLit(2 * numerator) * SQRT2 / IntLit(b - 1)) / LOG_ALPHA
    return log(as_expr(Fraction(numerator, b - 1))) / LOG_ALPHA


def reduce_l1(kind: SequenceKind, b: int, ledger: BoundLedger,
              cf: Optional[ContinuedFraction] = None) -> FamilyBound:
    """Bound the leading block length for every admissible leading digit.

    Pell-Lucas with d1 = b-1 has mu identically zero, where the
    convergent criterion is useless; the Legendre route covers it.
    """
    _verify_bridges()
    if cf is None:
        cf = continued_fraction_for_base(b)
    a = _L1_COEFF[kind]
    m = ledger.l1l2_max_by_base[b]
    tau = cf.tau
    per: list[tuple[dict, Outcome]] = []
    bounds = [_L1_ASSUMED[kind] - 1]
    for d1 in range(1, b):
        params = {"d1": d1}
        if kind is SequenceKind.PELL_LUCAS and d1 == b - 1:
            cf.extend_until_q_exceeds(m)
            idx, quot = a_max(cf, m)
            bound = _legendre_bound(a, quot, m, IntLit(b))
            outcome: Outcome = LegendreOutcome(quot, idx, cf.q(idx), bound)
        else:
            inst = ReductionInstance(tau, _l1_mu(kind, b, d1), a, IntLit(b), m)
            outcome = baker_davenport(inst, cf, scan_all=True)
            bound = outcome.w_max
        per.append((params, outcome))
        bounds.append(bound)
    return FamilyBound(kind, b, Stage.L1_STAGE, max(bounds), per)


def reduce_n(kind: SequenceKind, b: int, l1_max: int, ledger: BoundLedger,
             cf: Optional[ContinuedFraction] = None) -> FamilyBound:
    """Bound the index over the full digit/block family below l1_max.

    The digit space {1..b-1} x {0..b-1} \\ {d1 = d2} x {1..l1_max} is
    enumerated exactly once; homogeneous Pell-Lucas instances (the block
    numerator collapsing to b-1, i.e. (d1, l1, d2) = (1, 1, 0)) take the
    Legendre route.
    """
    _verify_bridges()
    if cf is None:
        cf = continued_fraction_for_base(b)
    a = _N_COEFF[kind]
    m = ledger.l1l2_max_by_base[b]
    tau = cf.tau
    per: list[tuple[dict, Outcome]] = []
    bounds = [0]
    legendre_cache: Optional[LegendreOutcome] = None
    for d1 in range(1, b):
        for d2 in range(0, b):
            if d2 == d1:
                continue
            for l1 in range(1, l1_max + 1):
                numerator = d1 * b ** l1 - (d1 - d2)
                params = {"d1": d1, "d2": d2, "l1": l1}
                if kind is SequenceKind.PELL_LUCAS and numerator == b - 1:
                    if legendre_cache is None:
                        cf.extend_until_q_exceeds(m)
                        idx, quot = a_max(cf, m)
                        bound = _legendre_bound(a, quot, m, ALPHA)
                        legendre_cache = LegendreOutcome(quot, idx, cf.q(idx), bound)
                    outcome: Outcome = legendre_cache
                    bound = legendre_cache.w_max
                else:
                    inst = ReductionInstance(
                        tau, _n_mu(kind, b, numerator), a, ALPHA, m)
                    try:
                        outcome = baker_davenport(inst, cf)
                    except EpsilonNeverPositive as exc:
                        raise EpsilonNeverPositive(
                            f"base {b}, d1={d1}, d2={d2}, l1={l1}: {exc}") from exc
                    bound = outcome.w_max
                per.append((params, outcome))
                bounds.append(bound)
    expected = (b - 1) * (b - 1) * l1_max
    assert len(per) == expected, "digit family enumeration is incomplete"
    return FamilyBound(kind, b, Stage.N_STAGE, max(bounds), per)
