"""Concatenations of two repdigit blocks in bases 2..10.

A value is represented by (b, d1, l1, d2, l2): l1 copies of digit d1
followed by l2 copies of digit d2.  The canonical decomposition uses
maximal homogeneous runs, so d1 != d2 always and every integer has at
most one representation per base.  d2 = 0 is allowed (trailing-zero
blocks occur in genuine solutions); d1 = 0 is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ConcatRepdigit:
    b: int
    d1: int
    l1: int
    d2: int
    l2: int

    def __post_init__(self):
        if not 2 <= self.b <= 10:
            raise ValueError("base must be in [2, 10]")
        if not 1 <= self.d1 <= self.b - 1:
            raise ValueError("leading digit must be in [1, b-1]")
        if not 0 <= self.d2 <= self.b - 1:
            raise ValueError("trailing digit must be in [0, b-1]")
        if self.d1 == self.d2:
            raise ValueError("blocks must use distinct digits")
        if self.l1 < 1 or self.l2 < 1:
            raise ValueError("block lengths must be positive")

    def value(self) -> int:
        b, d1, l1, d2, l2 = self.b, self.d1, self.l1, self.d2, self.l2
        numerator = d1 * b ** (l1 + l2) - (d1 - d2) * b ** l2 - d2
        quotient, remainder = divmod(numerator, b - 1)
        assert remainder == 0, "block formula must divide exactly"
        return quotient

    def digit_string(self) -> str:
        return str(self.d1) * self.l1 + str(self.d2) * self.l2


def value(r: ConcatRepdigit) -> int:
    return r.value()


def digits(n: int, b: int) -> list[int]:
    """Base-b digits, most significant first; digits(0, b) == [0]."""
    if n < 0:
        raise ValueError("value must be non-negative")
    if not 2 <= b <= 10:
        raise ValueError("base must be in [2, 10]")
    if n == 0:
        return [0]
    out: list[int] = []
    while n:
        n, d = divmod(n, b)
        out.append(d)
    out.reverse()
    return out


def decompose(n: int, b: int) -> Optional[ConcatRepdigit]:
    """Maximal-run decomposition of n into exactly two repdigit blocks.

    Returns None unless the base-b expansion of n consists of exactly two
    maximal homogeneous runs (so e.g. 111 in base 10 is a single
    repdigit, not a concatenation).
    """
    if n < 1:
        return None
    ds = digits(n, b)
    runs: list[tuple[int, int]] = []
    for d in ds:
        if runs and runs[-1][0] == d:
            runs[-1] = (d, runs[-1][1] + 1)
        else:
            runs.append((d, 1))
    if len(runs) != 2:
        return None
    (d1, l1), (d2, l2) = runs
    return ConcatRepdigit(b, d1, l1, d2, l2)
