"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately avoid the library's own arithmetic paths:
digit strings come from numpy's base_repr, reference values from mpmath.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import groupby
from math import isqrt

import mpmath
import numpy as np

from pellrep.precision import IntLit, RealExpr, as_expr, eval_expr, sqrt


def two_run_pattern(value: int, base: int):
    """Independent two-block detector via string rendering + run grouping.

    Returns (d1, l1, d2, l2) when the base-b digit string of value is
    exactly two maximal homogeneous runs with distinct digits, else None.
    """
    if value < 1:
        return None
    s = np.base_repr(value, base=base)
    runs = [(ch, len(list(grp))) for ch, grp in groupby(s)]
    if len(runs) != 2:
        return None
    (c1, l1), (c2, l2) = runs
    return int(c1), l1, int(c2), l2


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of an mpmath float."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def mpmath_log_ratio(num: int, den_expr: str = "1+sqrt(2)", dps: int = 80) -> Fraction:
    """Independent high-precision reference for log(num)/log(1+sqrt(2))."""
    with mpmath.workdps(dps):
        val = mpmath.log(num) / mpmath.log(mpmath.mpf(1) + mpmath.sqrt(2))
        return mpf_to_fraction(val)


def random_quadratic_irrational(rng: random.Random) -> RealExpr:
    """Positive irrational of the form (a + c*sqrt(d)) / e."""
    while True:
        d = rng.randint(2, 80)
        if isqrt(d) ** 2 == d:
            continue
        a = rng.randint(-15, 15)
        c = rng.randint(1, 15)
        e = rng.randint(1, 12)
        expr = (as_expr(a) + IntLit(c) * sqrt(d)) / IntLit(e)
        if eval_expr(expr, 64).lo > 0:
            return expr


def random_fraction(rng: random.Random, max_num: int = 50,
                    max_den: int = 50) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
