"""Acceptance gate: one test per criterion, each recording a pass/fail
line that is printed again in the terminal summary."""

import subprocess
import sys
import time

import numpy as np
import pytest

from oracles import brute_commutative_rings, brute_homs, brute_ideals, brute_isomorphic, raw
from finring.dsl import build_ring
from finring.morphisms import enumerate_unital_homs
from finring.predicates import (
    classify_element,
    invo_clean_status,
    is_boolean_ring,
    is_tripotent_element,
    is_tripotent_ring,
    is_weakly_tripotent_element,
    is_weakly_tripotent_ring,
    ring_properties,
)
from finring.ring import build_cyclic, characteristic, direct_product
from finring.search import audit_theorem, enumerate_rings
from finring.structure import all_ideals, jacobson_radical, nilradical

EXPECTED_STATUS = {"A1": "PASS", "A2": "PASS", "A3": "PASS", "A4": "PASS",
                   "B1": "PASS", "B2": "PASS", "B3": "PASS", "B4": "INFO",
                   "N1": "PASS"}


def finring(*args):
    return subprocess.run([sys.executable, "-m", "finring", *args],
                          capture_output=True, check=False)


def test_criterion_1_verify_paper(acceptance):
    t0 = time.perf_counter()
    proc = finring("verify-paper")
    elapsed = time.perf_counter() - t0
    got = {}
    for line in proc.stdout.decode().splitlines():
        parts = line.split()
        if parts and parts[0] in EXPECTED_STATUS:
            got[parts[0]] = parts[1]
    ok = acceptance(1, f"verify-paper statuses ({elapsed:.2f}s wall)", {
        "exit code 0": proc.returncode == 0,
        "statuses": got == EXPECTED_STATUS,
        "under 1 s": elapsed < 1.0,
    })
    assert ok, (got, elapsed, proc.stderr)


def test_criterion_2_order_four_census(acceptance):
    t0 = time.perf_counter()
    classes = enumerate_rings(4)
    elapsed = time.perf_counter() - t0
    weak = [R for R in classes if is_weakly_tripotent_ring(R)]
    non_weak = [R for R in classes if not is_weakly_tripotent_ring(R)]
    gf4 = build_ring("GF(4)")
    oracle = brute_commutative_rings(4)
    ok = acceptance(2, f"order-4 census ({elapsed:.2f}s)", {
        "4 classes": len(classes) == 4,
        "3 weakly tripotent": len(weak) == 3,
        "GF(4) is the exception": len(non_weak) == 1
            and brute_isomorphic(raw(non_weak[0]), raw(gf4)),
        "oracle agrees": len(oracle) == 4 and all(
            sum(brute_isomorphic(t, raw(R)) for R in classes) == 1
            for t in oracle),
        "under 10 s": elapsed < 10.0,
    })
    assert ok


def test_criterion_3_cyclic_rings(acceptance):
    weak, trip, trip1 = set(), set(), set()
    oracle_weak, oracle_trip = set(), set()
    for n in range(1, 13):
        Z = build_cyclic(n)
        if is_weakly_tripotent_ring(Z):
            weak.add(n)
        if is_tripotent_ring(Z):
            trip.add(n)
        if all(pow(a, 3, n) == a % n or pow(a + 1, 3, n) == (a + 1) % n
               for a in range(n)):
            oracle_weak.add(n)
        if all(pow(a, 3, n) == a % n for a in range(n)):
            oracle_trip.add(n)
    rng = set(range(2, 13))
    ok = acceptance(3, "Z_n weak tripotency and tripotency, n = 2..12", {
        "weakly tripotent set": weak & rng == {2, 3, 4, 6, 8, 12},
        "tripotent set": trip == {1, 2, 3, 6},
        "residue oracle agrees": weak == oracle_weak and trip == oracle_trip,
    })
    assert ok


def _invariants(R):
    p = ring_properties(R)
    # element and inverse are indices; everything else is label-free
    flags = sorted(tuple(v for k, v in vars(classify_element(R, a)).items()
                         if k not in ("element", "inverse"))
                   for a in R.elements)
    invo, strong, _ = invo_clean_status(R)
    return (p.to_dict() | {"label": None}, flags, invo, strong)


def test_criterion_4_property_suite(acceptance, catalog8, shuffle):
    rng = np.random.default_rng(20261016)
    checks = {k: True for k in (
        "tripotent => weakly tripotent", "Boolean => tripotent",
        "weakly tripotent => strongly invo-clean", "J(R) = nilradical",
        "characteristic divides order", "invariant under 100 relabelings")}
    for R in catalog8:
        if is_tripotent_ring(R) and not is_weakly_tripotent_ring(R):
            checks["tripotent => weakly tripotent"] = False
        if is_boolean_ring(R) and not is_tripotent_ring(R):
            checks["Boolean => tripotent"] = False
        if is_weakly_tripotent_ring(R) and not invo_clean_status(R)[1]:
            checks["weakly tripotent => strongly invo-clean"] = False
        if R.order > 1 and jacobson_radical(R) != nilradical(R):
            checks["J(R) = nilradical"] = False
        if R.order % characteristic(R):
            checks["characteristic divides order"] = False
        base = _invariants(R)
        base_ideals = sorted(len(I) for I in all_ideals(R))
        for _ in range(100):
            S = shuffle(R, rng)
            if _invariants(S) != base or \
                    sorted(len(I) for I in all_ideals(S)) != base_ideals:
                checks["invariant under 100 relabelings"] = False
    ok = acceptance(4, f"property suite over {len(catalog8)} catalog rings "
                       "of order <= 8", checks)
    assert ok


def test_criterion_5_ideal_oracle(acceptance, catalog12):
    bad = [R.label for R in catalog12
           if [I.elements for I in all_ideals(R)]
           != brute_ideals(R.add.tolist(), R.mul.tolist())]
    ok = acceptance(5, f"ideal lattices vs subset oracle, {len(catalog12)} "
                       "rings of order <= 12", {"exact match": not bad})
    assert ok, bad


def test_criterion_6_hom_oracle(acceptance):
    rings = [R for n in range(1, 7) for R in enumerate_rings(n)]
    extra = [build_ring(s) for s in ("Z2 * Z2", "Z2 * Z3", "0 * Z2")]
    rings += extra
    bad = []
    for A in rings:
        for B in rings:
            want = brute_homs(raw(A), raw(B))
            got = sorted(h.map for h in enumerate_unital_homs(A, B, "generators"))
            if got != want:
                bad.append((A.label, B.label))
    ok = acceptance(6, f"unital homs vs full-map oracle, {len(rings) ** 2} "
                       "pairs of order <= 6", {"exact match": not bad})
    assert ok, bad


def test_criterion_7_audit_z4(acceptance):
    rep = audit_theorem(build_cyclic(4), embed_bound=8, boolean_factor_bound=2)
    whole = [s for s in rep.splittings if s.r1["order"] == 4 and s.r2["order"] == 1]
    s = whole[0] if whole else None
    witnesses = {} if s is None else {(w.r0, w.m): w.map
                                      for w in s.embedding_witnesses}
    mod2 = [a * 2 + a % 2 for a in range(4)]
    ok = acceptance(7, "audit of Z4 at embed bound 8, Boolean bound 2", {
        "(Z4, 0) splitting present": s is not None,
        "criterion fails": s is not None and not s.clause2_criterion,
        "bounded embedding succeeds": s is not None
            and s.clause2_bounded_embedding,
        ">= 2 distinct witnesses": len(set(map(tuple, witnesses.values()))) >= 2,
        "m=0 identity": witnesses.get(("Z4", 0)) == [0, 1, 2, 3],
        "m=1 a -> (a, a mod 2)": witnesses.get(("Z4", 1)) == mod2,
    })
    assert ok, witnesses


def test_criterion_8_deterministic_catalog(acceptance, tmp_path):
    outs = []
    for jobs in ("1", "8"):
        path = tmp_path / f"catalog-{jobs}.json"
        proc = finring("search", "--max-order", "8", "--jobs", jobs,
                       "--catalog", str(path))
        outs.append((proc.returncode, path.read_bytes() if path.exists() else b""))
    ok = acceptance(8, "search --max-order 8 catalog, jobs 1 vs 8", {
        "both runs succeed": all(code == 0 for code, _ in outs),
        "non-empty": all(data for _, data in outs),
        "byte-identical": outs[0][1] == outs[1][1],
    })
    assert ok


def test_criterion_9_product_witness(acceptance):
    Z4 = build_cyclic(4)
    P = direct_product(Z4, Z4)
    w = 2 * 4 + 1
    ok = acceptance(9, "Z4 x Z4 is not weakly tripotent, witness (2,1)", {
        "factor weakly tripotent": is_weakly_tripotent_ring(Z4),
        "product not weakly tripotent": not is_weakly_tripotent_ring(P),
        "(2,1)^3 != (2,1)": not is_tripotent_element(P, w),
        "(3,2)^3 != (3,2)": P.plus(P.one, w) == 3 * 4 + 2
            and not is_tripotent_element(P, P.plus(P.one, w)),
        "(2,1) not weakly tripotent": not is_weakly_tripotent_element(P, w),
    })
    assert ok
