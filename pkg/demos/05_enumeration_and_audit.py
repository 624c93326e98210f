"""
Enumerating small rings and auditing splittings
================================================

Commutative unital rings up to isomorphism, then the two-clause audit on the
weakly tripotent ones.
"""

import time

from finring.predicates import is_weakly_tripotent_ring
from finring.search import audit_theorem, catalog, enumerate_rings, hunt

t0 = time.perf_counter()
for n in range(1, 9):
    rings = enumerate_rings(n)
    print(n, len(rings), [R.label for R in rings])
print(f"orders 1..8 in {time.perf_counter() - t0:.2f}s")

weak = [R for R in catalog(8) if is_weakly_tripotent_ring(R)]
print(len(weak), "weakly tripotent rings of order <= 8")

for R in weak:
    rep = audit_theorem(R)
    print(f"{R.label:<24} literal={rep.holds_literal!s:<6} "
          f"criterion={rep.holds_criterion}")

# rings where the two readings of the second clause disagree
for e in hunt(8, "weakly-tripotent AND verdicts-disagree"):
    print("disagree:", e["ring"].label)
