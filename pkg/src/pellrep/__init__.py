"""Certified solver for Pell and Pell-Lucas numbers that are
concatenations of two repdigits in bases 2 through 10.

The pipeline mirrors the standard strategy for this family of
exponential Diophantine equations: linear-forms-in-logarithms bounds
give an astronomical ceiling on the index, continued-fraction reduction
(Baker-Davenport, plus the Legendre convergent criterion in homogeneous
cases) shrinks it to double digits, and an exhaustive search certifies
the final solution sets.  All irrational arithmetic is done with
rigorous interval enclosures.
"""

from .precision import (
    Interval,
    RealExpr,
    eval_expr,
    certified_floor,
    certified_sign,
    nearest_integer_distance,
    sqrt,
    log,
    ALPHA,
    BETA,
    SQRT2,
    LOG_ALPHA,
    PrecisionError,
    PrecisionExhausted,
)
from .sequences import SequenceKind, SequenceTerm, term, terms_up_to, binet_check
from .repdigits import ConcatRepdigit, value, decompose, digits
from .contfrac import (
    ContinuedFraction,
    expand_until_q_exceeds,
    a_max,
    legendre_lower_bound,
    legendre_locate,
)
from .linforms import (
    QuadraticNumber,
    MatveevInstance,
    BoundLedger,
    height,
    matveev_exponent,
    derive_initial_bounds,
)
from .reduction import (
    ReductionInstance,
    ReductionOutcome,
    LegendreOutcome,
    FamilyBound,
    Stage,
    baker_davenport,
    reduce_l1,
    reduce_n,
)
from .solver import Solution, SolverReport, search_exhaustive, solve

__all__ = [
    "Interval",
    "RealExpr",
    "eval_expr",
    "certified_floor",
    "certified_sign",
    "nearest_integer_distance",
    "sqrt",
    "log",
    "ALPHA",
    "BETA",
    "SQRT2",
    "LOG_ALPHA",
    "PrecisionError",
    "PrecisionExhausted",
    "SequenceKind",
    "SequenceTerm",
    "term",
    "terms_up_to",
    "binet_check",
    "ConcatRepdigit",
    "value",
    "decompose",
    "digits",
    "ContinuedFraction",
    "expand_until_q_exceeds",
    "a_max",
    "legendre_lower_bound",
    "legendre_locate",
    "QuadraticNumber",
    "MatveevInstance",
    "BoundLedger",
    "height",
    "matveev_exponent",
    "derive_initial_bounds",
    "ReductionInstance",
    "ReductionOutcome",
    "LegendreOutcome",
    "FamilyBound",
    "Stage",
    "baker_davenport",
    "reduce_l1",
    "reduce_n",
    "Solution",
    "SolverReport",
    "search_exhaustive",
    "solve",
]

__version__ = "0.1.0"
