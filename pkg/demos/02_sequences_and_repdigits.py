"""Pell / Pell-Lucas terms and two-block repdigit decompositions.

A term is a "concatenation of two repdigits" in base b when its digit
string is one repeated digit followed by another, e.g. 5741 = 7778 in
base 9.  The decomposition uses maximal runs, so it is unique.
"""

from pellrep.repdigits import ConcatRepdigit, decompose, digits
from pellrep.sequences import SequenceKind, binet_check, term, terms_up_to

print("First Pell numbers:      ", [t.value for t in terms_up_to(SequenceKind.PELL, 8)])
print("First Pell-Lucas numbers:", [t.value for t in terms_up_to(SequenceKind.PELL_LUCAS, 8)])

print("\nClosed-form check (enclosure of the alpha/beta expression must")
print("contain the recurrence value):")
for kind, n in [(SequenceKind.PELL, 11), (SequenceKind.PELL_LUCAS, 5)]:
    t = term(kind, n)
    print(f"  {t.label()} = {t.value}: binet_check -> {binet_check(kind, n, 128)}")

print("\nDecompositions of 5741 = P_11 across bases:")
for b in range(2, 11):
    rep = decompose(5741, b)
    rendered = "".join(map(str, digits(5741, b)))
    mark = f"two blocks: {rep.d1}x{rep.l1} then {rep.d2}x{rep.l2}" if rep else "no"
    print(f"  base {b:2d}: {rendered:>14}  -> {mark}")

print("\nBlock tuples evaluate back to the integer they denote:")
rep = ConcatRepdigit(b=9, d1=7, l1=3, d2=8, l2=1)
print(f"  {rep} -> {rep.value()}")
