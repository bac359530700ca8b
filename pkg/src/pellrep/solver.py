"""End-to-end pipeline: initial bounds -> reduction -> exhaustive search.

``solve`` certifies that every reduced index bound falls below the
assumption threshold the derivation started from (110 for Pell, 300 for
Pell-Lucas), which is exactly the contradiction that makes the search
box exhaustive, then enumerates the box and reports the complete
solution sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .linforms import BoundLedger, derive_initial_bounds
from .precision import (
    ALPHA,
    IntLit,
    LOG_ALPHA,
    RatLit,
    SQRT2,
    as_expr,
    certified_sign,
    floor_of_upper,
    log,
)
from .reduction import (
    FamilyBound,
    LegendreOutcome,
    ReductionOutcome,
    continued_fraction_for_base,
    reduce_l1,
    reduce_n,
)
from .repdigits import ConcatRepdigit, decompose
from .sequences import SequenceKind, terms_up_to


class ReductionInsufficient(Exception):
    """A reduced index bound failed to undercut the assumption threshold."""


@dataclass(frozen=True)
class Solution:
    kind: SequenceKind
    n: int
    value: int
    rep: ConcatRepdigit

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "value": self.value,
            "base": self.rep.b,
            "d1": self.rep.d1,
            "l1": self.rep.l1,
            "d2": self.rep.d2,
            "l2": self.rep.l2,
            "digits": self.rep.digit_string(),
        }


@dataclass
class SolverReport:
    ledger: BoundLedger
    family_bounds: list[FamilyBound]
    search_box: dict
    solutions: list[Solution] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "sequence": self.ledger.kind.value,
            "ledger": _ledger_dict(self.ledger),
            "family_bounds": [_family_dict(fb) for fb in self.family_bounds],
            "search_box": self.search_box,
            "solutions": [s.to_dict() for s in self.solutions],
        }


def _interval_dict(iv) -> dict:
    return {"lo": float(iv.lo), "hi": float(iv.hi)}


def _ledger_dict(ledger: BoundLedger) -> dict:
    return {
        "sequence": ledger.kind.value,
        "c_first": _interval_dict(ledger.c_first),
        "c_second": _interval_dict(ledger.c_second),
        "n_max": str(ledger.n_max),
        "l1l2_max_by_base": {str(b): str(v)
                             for b, v in sorted(ledger.l1l2_max_by_base.items())},
        "computed_l1l2_by_base": {str(b): str(v)
                                  for b, v in sorted(ledger.computed_l1l2_by_base.items())},
        "threshold": ledger.threshold,
    }


def _outcome_dict(outcome) -> dict:
    if isinstance(outcome, ReductionOutcome):
        return {
            "method": "baker-davenport",
            "q_used": str(outcome.q_used),
            "epsilon_lo": float(outcome.epsilon.lo),
            "w_max": outcome.w_max,
        }
    assert isinstance(outcome, LegendreOutcome)
    return {
        "method": "legendre",
        "a_m": outcome.a_m,
        "convergent_index": outcome.convergent_index,
        "q_n": str(outcome.q_n),
        "w_max": outcome.w_max,
    }


def _family_dict(fb: FamilyBound) -> dict:
    binding = None
    for params, outcome in fb.per_instance:
        w = outcome.w_max
        if w == fb.bound:
            binding = {"params": params, **_outcome_dict(outcome)}
            break
    return {
        "sequence": fb.kind.value,
        "base": fb.base,
        "stage": fb.stage.value,
        "bound": fb.bound,
        "instances": len(fb.per_instance),
        "binding": binding,
    }


def _nonvanishing_guard(sol: Solution) -> None:
    """Certify that both linear forms are nonzero at a found solution.

    Each form equals zero only if a power of alpha collapses to a
    rational, which the certified sign test refutes directly.
    """
    r = sol.rep
    b, n = r.b, sol.n
    block = IntLit(r.d1 * b ** r.l1 - (r.d1 - r.d2))
    if sol.kind is SequenceKind.PELL:
        lead = as_expr(Fraction(b - 1, 2 * r.d1)) / SQRT2
        trail = IntLit(2) * SQRT2 * block / IntLit(b - 1)
    else:
        lead = as_expr(Fraction(b - 1, r.d1))
        trail = block / IntLit(b - 1)
    first = lead * ALPHA ** n / IntLit(b ** (r.l1 + r.l2)) - IntLit(1)
    second = trail * ALPHA ** (-n) * IntLit(b ** r.l2) - IntLit(1)
    assert certified_sign(first) != 0, f"first linear form vanishes at {sol}"
    assert certified_sign(second) != 0, f"second linear form vanishes at {sol}"


def search_exhaustive(kind: SequenceKind, n_max: int,
                      bases: Iterable[int] = range(2, 11)) -> list[Solution]:
    """All two-block representations of terms with index <= n_max.

    Complete by construction: every term in the box is decomposed in
    every base.  Ordered by (n, base).
    """
    bases = sorted(set(bases))
    out: list[Solution] = []
    for t in terms_up_to(kind, n_max):
        for b in bases:
            rep = decompose(t.value, b)
            if rep is not None:
                out.append(Solution(kind, t.n, t.value, rep))
    return out


def solve(kind: SequenceKind,
          bases: Iterable[int] = range(2, 11)) -> SolverReport:
    """Run the full certified pipeline for one sequence kind.

    Raises :class:`ReductionInsufficient` if any reduced index bound
    reaches the assumption threshold, since that would break the
    exhaustiveness argument for the final search box.
    """
    bases = sorted(set(bases))
    if any(not 2 <= b <= 10 for b in bases):
        raise ValueError("bases must lie in [2, 10]")
    ledger = derive_initial_bounds(kind)
    family_bounds: list[FamilyBound] = []
    l1_box: dict[int, int] = {}
    n_bounds: list[int] = []
    for b in bases:
        cf = continued_fraction_for_base(b)
        fb_l1 = reduce_l1(kind, b, ledger, cf)
        fb_n = reduce_n(kind, b, fb_l1.bound, ledger, cf)
        if fb_n.bound >= ledger.threshold:
            raise ReductionInsufficient(
                f"base {b}: reduced index bound {fb_n.bound} does not "
                f"undercut the threshold {ledger.threshold}")
        family_bounds.extend((fb_l1, fb_n))
        l1_box[b] = fb_l1.bound
        n_bounds.append(fb_n.bound)

    box_n = max([ledger.threshold] + n_bounds)
    l2_box = {
        b: floor_of_upper(
            (IntLit(box_n) * LOG_ALPHA + RatLit(ledger.l1l2_offset)) / log(IntLit(b)))
        for b in bases
    }
    solutions = search_exhaustive(kind, box_n, bases)
    for sol in solutions:
        # box domination: any violation would mean the reduction lied
        assert sol.n <= box_n
        assert sol.rep.l1 <= l1_box[sol.rep.b], (
            f"solution {sol} violates the reduced block bound")
        assert sol.rep.l1 + sol.rep.l2 <= l2_box[sol.rep.b]
        _nonvanishing_guard(sol)

    search_box = {
        "n_max": box_n,
        "l1_max": {str(b): l1_box[b] for b in bases},
        "l2_max": {str(b): l2_box[b] for b in bases},
    }
    return SolverReport(ledger, family_bounds, search_box, solutions)
