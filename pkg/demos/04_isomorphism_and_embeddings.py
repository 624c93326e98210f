"""
Homomorphisms, embeddings and isomorphism
=========================================
"""

from finring import build_ring
from finring.morphisms import (
    enumerate_unital_homs,
    find_embedding,
    find_isomorphism,
    fingerprint,
)

A = build_ring("Z6")
B = build_ring("Z2 * Z3")
h = find_isomorphism(A, B)
print("Z6 -> Z2 x Z3:", h.to_list())

# fingerprints are cheap invariants; equal fingerprints still need a search
print(fingerprint(build_ring("Z4")).to_dict())
print(fingerprint(build_ring("Z2[x]/(x^2)")).to_dict())

# every unital map Z4 -> Z4 x Z2
for h in enumerate_unital_homs(build_ring("Z4"), build_ring("Z4 * Z2")):
    print("hom", h.to_list(), "injective" if h.injective else "")

print("Z2 embeds in Z4?", find_embedding(build_ring("Z2"), build_ring("Z4")))
print("Z4 embeds in Z4 x Z2:",
      find_embedding(build_ring("Z4"), build_ring("Z4 * Z2")).to_list())
