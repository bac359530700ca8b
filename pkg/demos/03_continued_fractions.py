"""Certified continued fractions of tau = log(b)/log(alpha).

Quotients come from the Gauss map on interval enclosures; a quotient is
emitted only when both endpoints agree on its floor, so deep quotients
are trustworthy.  The largest quotient below the first denominator
exceeding M (the a(M) statistic) drives the homogeneous reduction route.
"""

from pellrep.contfrac import a_max, expand_until_q_exceeds
from pellrep.reduction import tau_for_base

print("Expansion of tau_2 = log(2)/log(1+sqrt(2)) until q > 10^9:")
cf = expand_until_q_exceeds(tau_for_base(2), 10 ** 9)
print("  quotients:", cf.quotients)
print("  last convergents:", cf.convergents[-2:])

print("\nThe a(M) statistic for the reduction M-values:")
for b, m in [(2, 117 * 10 ** 28), (6, 739 * 10 ** 27)]:
    cf = expand_until_q_exceeds(tau_for_base(b), m)
    idx, quot = a_max(cf, m)
    print(f"  base {b}: first q_N > M at index {idx}, a(M) = {quot}")

print("\nPartial quotients are certified: re-expanding at any higher")
print("precision reproduces the same prefix bit for bit.")
cf3 = expand_until_q_exceeds(tau_for_base(3), 10 ** 6)
prefix = list(cf3.quotients)
cf3.extend_until_q_exceeds(10 ** 30)
print("  prefix stable:", cf3.quotients[: len(prefix)] == prefix)
