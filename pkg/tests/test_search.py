import json

import numpy as np
import pytest

from oracles import brute_commutative_rings, brute_isomorphic, raw
from finring.dsl import build_ring
from finring.morphisms import are_isomorphic, fingerprint
from finring.predicates import is_weakly_tripotent_ring, nilpotency_index
from finring.ring import FiniteRing, build_cyclic, characteristic
from finring.search import (
    FilterError,
    abelian_group_types,
    audit_theorem,
    catalog_json,
    enumerate_rings,
    hunt,
    load_catalog,
    parse_filter,
)

Z = build_cyclic


def types(n):
    return [gt.factors for gt in abelian_group_types(n)]


def test_group_types():
    assert types(1) == [()]
    assert types(4) == [(4,), (2, 2)]
    assert len(types(6)) == 1
    assert types(8) == [(8,), (4, 2), (2, 2, 2)]
    assert types(12) == [(4, 3), (2, 2, 3)]
    assert len(types(16)) == 5
    for n in range(1, 33):
        for gt in abelian_group_types(n):
            assert gt.order == n


def test_order_four_census():
    rings = enumerate_rings(4)
    assert len(rings) == 4
    named = [build_ring(s) for s in ("Z4", "Z2 * Z2", "GF(4)", "Z2[x]/(x^2)")]
    for R in named:
        assert sum(are_isomorphic(R, S) for S in rings) == 1
    hits = [R for R in rings if characteristic(R) == 2 and
            sum(nilpotency_index(R, a) is not None for a in R.elements) == 2]
    assert len(hits) == 1
    assert are_isomorphic(hits[0], build_ring("Z2[x]/(x^2)"))


def test_prime_orders():
    for p in (2, 3, 5, 7, 11, 13):
        rings = enumerate_rings(p, allow_large=True)
        assert len(rings) == 1 and are_isomorphic(rings[0], Z(p))
    assert enumerate_rings(1)[0].order == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_brute_force_oracle(n):
    mine = [raw(R) for R in enumerate_rings(n)]
    theirs = brute_commutative_rings(n)
    assert len(mine) == len(theirs)
    for t in theirs:
        assert sum(brute_isomorphic(t, m) for m in mine) == 1


def test_known_class_counts():
    counts = [len(enumerate_rings(n, allow_large=True)) for n in range(1, 13)]
    assert counts == [1, 1, 1, 4, 1, 1, 1, 10, 4, 1, 1, 4]


@pytest.mark.slow
def test_order_sixteen_count(catalog16):
    assert sum(R.order == 16 for R in catalog16) == 37


def test_no_duplicates_and_constructors_found(catalog8):
    for i, A in enumerate(catalog8):
        for B in catalog8[i + 1:]:
            assert not are_isomorphic(A, B)
    specs = ["0", "Z2", "Z3", "Z4", "Z2*Z2", "GF(4)", "Z2[x]/(x^2)", "Z5",
             "Z6", "Z2*Z3", "Z7", "Z8", "GF(8)", "Z2[x]/(x^3)", "Z4*Z2",
             "Z2*Z2*Z2", "GF(4)*Z2", "Z2[x]/(x^3+x+1)", "Z2[x]/(x^3+1)"]
    for s in specs:
        R = build_ring(s)
        assert sum(are_isomorphic(R, S) for S in catalog8) == 1, s


def test_catalog_sorted(catalog8):
    keys = [(R.order, fingerprint(R), R.table_bytes) for R in catalog8]
    assert keys == sorted(keys)


def test_bounds():
    with pytest.raises(ValueError):
        enumerate_rings(9)
    with pytest.raises(ValueError):
        enumerate_rings(17, allow_large=True)
    with pytest.raises(NotImplementedError):
        enumerate_rings(4, commutative=False)


def test_catalog_json_roundtrip(tmp_path, catalog8):
    path = tmp_path / "cat.json"
    path.write_text(catalog_json(catalog8))
    doc = json.loads(path.read_text())
    rec = doc["rings"][0]
    assert set(rec) >= {"label", "order", "one", "add", "mul", "properties",
                        "fingerprint"}
    assert set(rec["properties"]) >= {
        "commutative", "boolean_ring", "tripotent_ring",
        "weakly_tripotent_ring", "invo_clean", "strongly_invo_clean",
        "has_nontrivial_idempotents", "characteristic", "counts"}
    back = load_catalog(path)
    assert all(a.same_tables(b) for a, b in zip(back, catalog8))
    assert catalog_json(catalog8) == path.read_text()


def split_by_factors(rep, r1, r2):
    return [s for s in rep.splittings
            if s.r1["label"] == r1 and s.r2["label"] == r2]


def test_audit_dual_numbers():
    R = build_ring("Z2[x]/(x^2)")
    rep = audit_theorem(R)
    assert len(rep.splittings) == 2
    (first,) = [s for s in rep.splittings if s.r1["zero_ring"]]
    assert not first.clause1_literal and not first.clause1_paper_variant
    (second,) = [s for s in rep.splittings if s.r2["zero_ring"]]
    assert not second.clause2_criterion and second.criterion_witness is None
    assert second.clause2_bounded_embedding
    w = second.embedding_witnesses[0]
    assert w.m == 0 and w.empty_boolean_family and w.map == [0, 1, 2, 3]
    assert w.r0 == "Z2[x]/(x^2)"


def test_audit_z4():
    rep = audit_theorem(Z(4), embed_bound=8, boolean_factor_bound=2)
    (s,) = [s for s in rep.splittings if s.r2["zero_ring"]]
    assert not s.clause2_criterion
    maps = {(w.r0, w.m): w.map for w in s.embedding_witnesses}
    assert maps[("Z4", 0)] == [0, 1, 2, 3]
    assert maps[("Z4", 1)] == [a * 2 + a % 2 for a in range(4)]
    assert rep.holds_literal and not rep.holds_criterion


def test_audit_z6():
    rep = audit_theorem(Z(6))
    (s,) = split_by_factors(rep, "Z2", "Z3")
    assert s.idempotent == 3
    assert s.clause1_literal and s.clause1_paper_variant
    assert s.clause2_criterion and s.clause2_bounded_embedding
    assert rep.holds_literal and rep.holds_criterion


def test_audit_rejects_non_weakly_tripotent():
    with pytest.raises(ValueError):
        audit_theorem(build_ring("GF(4)"))


def test_audit_invariant_under_relabeling(catalog8, shuffle):
    rng = np.random.default_rng(11)

    def verdicts(rep):
        return sorted((s.r1["label"], s.r2["label"], s.clause1_literal,
                       s.clause1_paper_variant, s.clause2_criterion,
                       s.clause2_bounded_embedding,
                       len(s.embedding_witnesses)) for s in rep.splittings)

    for R in catalog8:
        if not is_weakly_tripotent_ring(R):
            continue
        base = audit_theorem(R)
        for _ in range(3):
            other = audit_theorem(shuffle(R, rng))
            assert verdicts(other) == verdicts(base)
            assert (other.holds_literal, other.holds_criterion) == \
                (base.holds_literal, base.holds_criterion)


def test_disagreements_carry_both_witnesses(catalog8):
    for R in catalog8:
        if not is_weakly_tripotent_ring(R):
            continue
        rep = audit_theorem(R)
        assert len(rep.splittings) == fingerprint(R).idempotents
        if rep.holds_literal != rep.holds_criterion:
            lit = [s for s in rep.splittings if s.satisfied_literal]
            assert lit and all(s.embedding_witnesses for s in lit
                               if not s.r1["zero_ring"])
            assert all(s.criterion_witness is None for s in lit
                       if not s.r1["zero_ring"])
            assert all(s.r1_maximal_ideals for s in lit
                       if not s.r1["zero_ring"])


def test_hunt_weakly_tripotent_order_four():
    found = hunt(4, "weakly-tripotent")
    labels = sorted(e["ring"].label for e in found)
    assert labels == sorted(["0", "Z2", "Z3", "Z4", "Z2 * Z2", "Z2[x]/(x^2)"])
    assert all(e["audit"] is not None for e in found)


def test_hunt_counterexamples():
    found = hunt(4, "weakly-tripotent AND clause2-criterion-fails-for-some-splitting")
    labels = {e["ring"].label for e in found}
    assert {"Z4", "Z2[x]/(x^2)"} <= labels


def test_hunt_non_invo_clean_order_eight():
    assert hunt(8, "weakly-tripotent AND NOT strongly-invo-clean") == []


@pytest.mark.slow
def test_hunt_non_invo_clean_order_sixteen(catalog16):
    found = hunt(16, "weakly-tripotent AND NOT strongly-invo-clean",
                 allow_large=True)
    assert found == []


def test_filter_errors():
    assert parse_filter("") == []
    assert parse_filter("NOT boolean AND tripotent") == [
        (True, "boolean"), (False, "tripotent")]
    with pytest.raises(FilterError):
        parse_filter("weakly-tripotent AND shiny")
    with pytest.raises(FilterError):
        hunt(4, "noetherian")
