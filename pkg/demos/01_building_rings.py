"""
Building finite rings
=====================

Rings are stored as two Cayley tables over the indices 0..n-1, with 0 the
zero element.
"""

import numpy as np
from finring import build_cyclic, build_gf, build_ring, direct_product

# the integers mod 6
Z6 = build_cyclic(6)
print(Z6.label, "order", Z6.order, "one at index", Z6.one)
print(Z6.mul)

# element arithmetic goes through the tables
print("4 * 5 =", Z6.times(4, 5), " 4 - 5 =", Z6.minus(4, 5))

# products index pairs as i * |B| + j
P = direct_product(build_cyclic(2), build_cyclic(3))
print(P.label, "(1,2) is index", 1 * 3 + 2)

# a small expression language does the same from a string
R = build_ring("Z2[x]/(x^2)")
print(R.label, "tables:")
print(R.add)
print(R.mul)

# GF(q) uses the least monic irreducible, so in GF(8) x^3 = 1 + x^2
F = build_gf(8)
x = 2
print("x^3 in GF(8) has index", F.times(x, F.times(x, x)))

# tables are read-only
try:
    R.mul[0, 0] = 1
except ValueError as exc:
    print("read-only:", exc)

print("units of Z6:", [a for a in Z6.elements
                       if np.any(Z6.mul[a] == Z6.one)])
