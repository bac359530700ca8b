"""Tour of the certified interval layer.

Every irrational the solver touches is handled as a two-sided enclosure
with exact rational endpoints.  This script shows the basic moves:
evaluating expressions at a requested precision, certified floors, and
distances to the nearest integer.
"""

from fractions import Fraction

from pellrep.precision import (
    ALPHA,
    LOG_ALPHA,
    SQRT2,
    IntLit,
    as_expr,
    certified_floor,
    eval_expr,
    log,
    nearest_integer_distance,
)

print("alpha = 1 + sqrt(2), enclosed at 64 bits:")
iv = eval_expr(ALPHA, 64)
print(f"  [{float(iv.lo)}, {float(iv.hi)}], width = {float(iv.width):.3e}")

print("\nThe same enclosure at 256 bits is ~2^-192 times tighter:")
iv256 = eval_expr(ALPHA, 256)
print(f"  width = {float(iv256.width):.3e}")

tau = log(IntLit(2)) / LOG_ALPHA
print("\ntau = log(2)/log(alpha) at 128 bits:")
t = eval_expr(tau, 128)
print(f"  ~{float(t.lo):.15f}, width < 2^-120: {t.width < Fraction(1, 2**120)}")

print("\nCertified integer extraction (precision doubles until decided):")
print(f"  floor(tau)        = {certified_floor(tau)}")
print(f"  floor(1/tau)      = {certified_floor(IntLit(1) / tau)}")
print(f"  floor(sqrt2 + 1)  = {certified_floor(SQRT2 + 1)}")

print("\nDistance to the nearest integer (the ||.|| operator):")
for label, expr in [("sqrt(2)", SQRT2), ("3/10", as_expr(Fraction(3, 10))),
                    ("41 * tau", IntLit(41) * tau)]:
    dist, nearest = nearest_integer_distance(expr)
    print(f"  ||{label}|| ~ {float(dist.lo):.6f}  (nearest integer {nearest})")
