"""Pell and Pell-Lucas sequences with certified growth checks.

Both sequences satisfy x_n = 2 x_{n-1} + x_{n-2}; Pell starts 0, 1 and
Pell-Lucas starts 2, 2.  Closed forms in alpha = 1 + sqrt(2) and
beta = 1 - sqrt(2) are used only through interval enclosures, never as
floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .precision import (
    ALPHA,
    BETA,
    SQRT2,
    IntLit,
    RealExpr,
    certified_compare,
    eval_expr,
)


class SequenceKind(enum.Enum):
    PELL = "pell"
    PELL_LUCAS = "pell-lucas"

    @property
    def initial(self) -> tuple[int, int]:
        return (0, 1) if self is SequenceKind.PELL else (2, 2)

    @property
    def symbol(self) -> str:
        return "P" if self is SequenceKind.PELL else "Q"


@dataclass(frozen=True)
class SequenceTerm:
    kind: SequenceKind
    n: int
    value: int

    def label(self) -> str:
        return f"{self.kind.symbol}_{self.n}"


def term(kind: SequenceKind, n: int) -> SequenceTerm:
    """n-th term via the recurrence (exact integers, O(n) steps)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = kind.initial
    if n == 0:
        return SequenceTerm(kind, 0, a)
    for _ in range(n - 1):
        a, b = b, 2 * b + a
    return SequenceTerm(kind, n, b)


def terms_up_to(kind: SequenceKind, n_max: int) -> list[SequenceTerm]:
    """Terms 0..n_max in index order."""
    if n_max < 0:
        raise ValueError("index must be non-negative")
    a, b = kind.initial
    out = [SequenceTerm(kind, 0, a)]
    for n in range(1, n_max + 1):
        out.append(SequenceTerm(kind, n, b))
        a, b = b, 2 * b + a
    return out


def _binet_expr(kind: SequenceKind, n: int) -> RealExpr:
    if kind is SequenceKind.PELL:
        return (ALPHA ** n - BETA ** n) / (IntLit(2) * SQRT2)
    return ALPHA ** n + BETA ** n


def binet_check(kind: SequenceKind, n: int, bits: int) -> bool:
    """Does the closed-form enclosure contain the recurrence value?"""
    if n < 1:
        raise ValueError("index must be positive")
    enclosure = eval_expr(_binet_expr(kind, n), bits)
    return enclosure.contains(term(kind, n).value)


def growth_bounds_hold(kind: SequenceKind, n: int) -> bool:
    """Certified alpha-power sandwich for the n-th term (n >= 1).

    Pell terms satisfy alpha^(n-2) <= P_n <= alpha^(n-1); Pell-Lucas
    terms satisfy alpha^(n-2) <= Q_n < alpha^(n+1).
    """
    if n < 1:
        raise ValueError("index must be positive")
    v = term(kind, n).value
    if certified_compare(ALPHA ** (n - 2), v) > 0:
        return False
    upper_exp = n - 1 if kind is SequenceKind.PELL else n + 1
    return certified_compare(ALPHA ** upper_exp, v) >= 0
