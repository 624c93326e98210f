"""
Element and ring predicates
===========================
"""

from finring import build_cyclic, build_ring, direct_product
from finring.predicates import (
    classify_element,
    invo_clean_status,
    is_tripotent_ring,
    is_weakly_tripotent_ring,
    ring_properties,
)

# which Z_n have a^3 = a for every a, and which only need it for a or 1 + a
for n in range(2, 13):
    Z = build_cyclic(n)
    print(f"Z{n:<3} tripotent={is_tripotent_ring(Z)!s:<6} "
          f"weakly={is_weakly_tripotent_ring(Z)}")

# per-element flags
R = build_ring("Z2[x]/(x^2)")
for a in R.elements:
    f = classify_element(R, a)
    print(a, "idempotent" if f.idempotent else "",
          "nilpotent" if f.nilpotent else "", "unit" if f.unit else "")

# weakly tripotent is not closed under products
P = direct_product(build_cyclic(4), build_cyclic(4))
print("Z4 x Z4 weakly tripotent?", is_weakly_tripotent_ring(P))
print("(2,1):", classify_element(P, 9))

# invo-clean: a = v + r with v^2 = 1, r^2 = r
invo, strong, wit = invo_clean_status(build_cyclic(8))
print("Z8 invo-clean", invo, "strongly", strong, "e.g.", wit[3])

print(ring_properties(build_ring("GF(4)")).to_dict())
