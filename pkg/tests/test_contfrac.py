import random
from fractions import Fraction
from math import gcd

import pytest

from helpers import random_quadratic_irrational
from pellrep import precision
from pellrep.contfrac import (
    ContinuedFraction,
    InsufficientExpansion,
    a_max,
    convergent_gap_certified,
    expand_until_q_exceeds,
    legendre_locate,
    legendre_lower_bound,
)
from pellrep.precision import (
    IntLit,
    PrecisionExhausted,
    Pow,
    SQRT2,
    as_expr,
    eval_expr,
    sqrt,
)
from pellrep.reduction import tau_for_base

GOLDEN = (IntLit(1) + sqrt(5)) / IntLit(2)


def test_sqrt2_expansion():
    cf = expand_until_q_exceeds(SQRT2, 1000)
    assert cf.quotients[0] == 1
    assert all(a == 2 for a in cf.quotients[1:])
    assert cf.convergents[:5] == [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]
    assert cf.q(len(cf) - 1) > 1000


def test_golden_ratio_expansion():
    cf = expand_until_q_exceeds(GOLDEN, 100)
    assert all(a == 1 for a in cf.quotients)
    fib = [1, 1, 2, 3, 5, 8, 13, 21]
    assert [q for _, q in cf.convergents[:8]] == fib


def test_rational_input_rejected_structurally():
    with pytest.raises(ValueError):
        ContinuedFraction(as_expr(Fraction(3, 7)))


def test_stealth_rational_exhausts_precision():
    # sqrt(2)^2 / 2 is exactly 1 but not structurally so; the expansion
    # must stall rather than emit garbage quotients
    expr = Pow(SQRT2, 2) / IntLit(2)
    old_cap = precision.MAX_BITS
    precision.set_max_bits(4096)
    try:
        with pytest.raises(PrecisionExhausted):
            expand_until_q_exceeds(expr, 100)
    finally:
        precision.set_max_bits(old_cap)


def test_determinant_identity_for_all_tau():
    for b in range(2, 11):
        cf = expand_until_q_exceeds(tau_for_base(b), 10 ** 12)
        for k in range(1, len(cf)):
            p1, q1 = cf.convergents[k]
            p0, q0 = cf.convergents[k - 1]
            assert p1 * q0 - p0 * q1 == (-1) ** (k - 1)
            assert gcd(p1, q1) == 1
        assert all(cf.q(k) > cf.q(k - 1) for k in range(2, len(cf)))


def test_convergent_gap_bound():
    cf = expand_until_q_exceeds(tau_for_base(2), 10 ** 9)
    for k in range(len(cf) - 1):
        assert convergent_gap_certified(cf, k)


def test_re_expansion_reproduces_prefix():
    cf = expand_until_q_exceeds(tau_for_base(3), 10 ** 6)
    prefix = list(cf.quotients)
    cf.extend_until_q_exceeds(10 ** 24)
    assert cf.quotients[: len(prefix)] == prefix
    fresh = expand_until_q_exceeds(tau_for_base(3), 10 ** 24)
    assert fresh.quotients[: len(prefix)] == prefix


def test_a_max_single_step():
    cf = expand_until_q_exceeds(GOLDEN, 10 ** 7)
    n_idx, quot = a_max(cf, 10 ** 6)
    assert quot == 1
    assert cf.q(n_idx) > 10 ** 6 and cf.q(n_idx - 1) <= 10 ** 6
    with pytest.raises(InsufficientExpansion):
        a_max(cf, cf.q(len(cf) - 1) + 1)


def test_legendre_lower_bound_examples():
    cf = expand_until_q_exceeds(GOLDEN, 2 * 10 ** 6)
    assert legendre_lower_bound(cf, 10 ** 6, 10) == Fraction(1, 300)
    cf2 = expand_until_q_exceeds(SQRT2, 3000)
    assert legendre_lower_bound(cf2, 1000, 5) == Fraction(1, 100)
    with pytest.raises(ValueError):
        legendre_lower_bound(cf2, 1000, 1000)


def test_legendre_lower_bound_holds_by_brute_force():
    # min over x of |sqrt(2) - x/5| must beat 1/((a(M)+2)*25)
    iv = eval_expr(SQRT2, 256)
    best = min(abs(Fraction(x, 5) - iv.lo) for x in range(0, 20))
    assert best > Fraction(1, 100)


def test_legendre_locate_examples():
    assert legendre_locate(SQRT2, 7, 5) is True
    assert legendre_locate(SQRT2, 3, 2) is True      # |sqrt2 - 1.5| < 1/8
    assert legendre_locate(tau_for_base(2), 0, 1) is False
    with pytest.raises(ValueError):
        legendre_locate(SQRT2, 6, 4)


def test_legendre_locate_on_random_quadratics():
    rng = random.Random(0xC0FFEE)
    convergent_hits = 0
    non_convergent_true = 0
    for _ in range(120):
        tau = random_quadratic_irrational(rng)
        cf = expand_until_q_exceeds(tau, 10 ** 5)
        usable = [(p, q) for p, q in cf.convergents[1:] if q > 1]
        if not usable:
            continue
        p, q = usable[rng.randrange(len(usable))]
        if legendre_locate(tau, p, q):
            convergent_hits += 1  # membership asserted inside on success
        x, y = p + 1, q
        if gcd(x, y) == 1 and (x, y) not in cf.convergents:
            assert legendre_locate(tau, x, y) is False
        else:
            non_convergent_true += 1
    assert convergent_hits > 40


def test_best_approximation_spot_check():
    # strict best approximation: |q_k tau - p_k| < |y tau - x| whenever
    # 1 <= y < q_k, for every integer x
    for tau in (SQRT2, tau_for_base(2)):
        cf = expand_until_q_exceeds(tau, 10 ** 4)
        iv = eval_expr(tau, 512)
        mid = (iv.lo + iv.hi) / 2
        for p_k, q_k in cf.convergents:
            if not 1 < q_k <= 10 ** 4:
                continue
            d_k_hi = max(abs(q_k * iv.lo - p_k), abs(q_k * iv.hi - p_k))
            for y in range(1, q_k):
                x = round(y * mid)  # the only competitive numerator
                lo_d, hi_d = y * iv.lo - x, y * iv.hi - x
                d_y_lo = Fraction(0) if lo_d <= 0 <= hi_d else min(abs(lo_d), abs(hi_d))
                assert d_y_lo > d_k_hi, (q_k, y)
