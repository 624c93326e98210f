"""
Ideals and radicals
===================
"""

from finring import build_cyclic, build_ring
from finring.structure import (
    all_ideals,
    find_trivial_meet_maximal,
    jacobson_radical,
    maximal_ideals,
    nilradical,
    peirce_splittings,
    quotient_by_ideal,
)

R = build_cyclic(12)
print("ideals of Z12:", [str(I) for I in all_ideals(R)])
print("maximal:", [str(M) for M in maximal_ideals(R)])
print("J:", jacobson_radical(R), " nilradical:", nilradical(R))

# a maximal ideal meeting J(R) only in 0 exists for Z6 but not for Z4
for spec in ("Z6", "Z4", "Z2[x]/(x^2)"):
    S = build_ring(spec)
    print(spec, "trivial-meet maximal ideal:", find_trivial_meet_maximal(S))

# quotients keep the least element of each coset
Q = quotient_by_ideal(R, maximal_ideals(R)[0])
print(Q.label, "order", Q.order)

# each idempotent e splits the ring as eR x (1-e)R
for sp in peirce_splittings(build_cyclic(6)):
    print("e =", sp.e, "parts", sp.part1_elements, sp.part2_elements)
