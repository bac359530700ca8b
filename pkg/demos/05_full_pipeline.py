"""End to end: the complete certified solution sets.

Runs the whole pipeline for both sequences and prints every term that is
a concatenation of two repdigits in some base 2..10.
"""

import time

from pellrep.sequences import SequenceKind
from pellrep.solver import solve

for kind in SequenceKind:
    start = time.perf_counter()
    report = solve(kind)
    elapsed = time.perf_counter() - start
    symbol = kind.symbol
    values = sorted({s.value for s in report.solutions})
    print(f"\n{kind.value}: solved in {elapsed:.1f}s, "
          f"search box n <= {report.search_box['n_max']}")
    print(f"  solution values: {values}")
    for s in report.solutions:
        print(f"    {s.value:5d} = {symbol}_{s.n:<2d} = {s.rep.digit_string()}"
              f" (base {s.rep.b})")
