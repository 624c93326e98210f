"""
Two order-4 rings in detail
===========================
"""

from finring import build_ring
from finring.search import audit_theorem
from finring.verify import verify_paper

for spec in ("0 * Z2[x]/(x^2)", "Z4 * 0"):
    R = build_ring(spec)
    rep = audit_theorem(R, embed_bound=8, boolean_factor_bound=2)
    print(spec)
    for s in rep.splittings:
        print("  e =", s.idempotent, "R1 =", s.r1["label"], "R2 =", s.r2["label"])
        print("    clause 1:", s.clause1_literal, "/", s.clause1_paper_variant)
        print("    clause 2 criterion:", s.clause2_criterion,
              " embedding:", s.clause2_bounded_embedding)
        for w in s.embedding_witnesses:
            print("     ", w.r0, "x Z2 ^", w.m, w.map)

for r in verify_paper():
    print(r.id, r.status)
