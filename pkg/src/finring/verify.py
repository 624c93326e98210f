"""Machine-checked reproduction of the two order-4 counterexamples.

Each assertion is recomputed from scratch; statuses are never hardcoded.
Assertion ids: A1-A4 concern the characteristic-2 ring ``0 x Z2[x]/(x^2)``,
B1-B4 concern ``Z4 x 0``, and N1 the factor swap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dsl import build_ring
from .morphisms import find_embedding, find_isomorphism
from .predicates import (
    is_tripotent_element,
    is_tripotent_ring,
    is_weakly_tripotent_element,
    is_weakly_tripotent_ring,
    nilpotency_index,
)
from .ring import build_cyclic, characteristic, direct_product, power, zero_ring
from .search import enumerate_rings
from .structure import (
    find_trivial_meet_maximal,
    jacobson_radical,
    maximal_ideals,
    nilradical,
)

__all__ = ["PaperAssertion", "verify_paper"]

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"


@dataclass
class PaperAssertion:
    id: str
    description: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return dict(self.__dict__)


def _status(ok):
    return PASS if ok else FAIL


def _check_a1():
    classes = enumerate_rings(4)
    hits = [R for R in classes if characteristic(R) == 2
            and sum(nilpotency_index(R, a) is not None for a in R.elements) == 2]
    return PaperAssertion(
        "A1", "exactly one commutative ring of order 4 and characteristic 2 "
        "has exactly one nonzero nilpotent",
        _status(len(hits) == 1),
        {"classes_of_order_4": [R.label for R in classes],
         "matching": [R.label for R in hits]})


def _check_a2(R2):
    # a = 1, b = 1 + x, c = x in Z2[x]/(x^2)
    a, c = R2.one, 2
    b = R2.plus(a, c)
    rel = {
        "a+b=c": R2.plus(a, b) == c,
        "a+c=b": R2.plus(a, c) == b,
        "b+c=a": R2.plus(b, c) == a,
        "a^2=a": power(R2, a, 2) == a,
        "b^2=a": power(R2, b, 2) == a,
        "c^2=0": power(R2, c, 2) == 0,
    }
    classes = [S for S in enumerate_rings(4) if find_isomorphism(R2, S)]
    return PaperAssertion(
        "A2", "relation table a+b=c, a+c=b, b+c=a, a^2=b^2=a, c^2=0 holds in "
        "Z2[x]/(x^2) with a=1, b=1+x, c=x",
        _status(all(rel.values()) and len(classes) == 1),
        {"naming": {"a": a, "b": b, "c": c}, "relations": rel,
         "catalog_class": [S.label for S in classes]})


def _check_a3(R2):
    R = direct_product(zero_ring(), R2)
    a, c = R2.one, 2
    b = R2.plus(a, c)
    cubes = {}
    if R.order == 4:
        # pair (0, t) has index t
        for name, t in (("(0,0)", 0), ("(0,a)", a), ("(0,b)", b),
                        ("(0,a)+(0,c)", R.plus(a, c))):
            cubes[name] = power(R, t, 3) == t
    ok = R.order == 4 and is_weakly_tripotent_ring(R) and len(cubes) == 4 \
        and all(cubes.values())
    return PaperAssertion(
        "A3", "0 x Z2[x]/(x^2) is a commutative weakly tripotent ring and the "
        "displayed cubes hold",
        _status(ok),
        {"order": R.order, "weakly_tripotent": is_weakly_tripotent_ring(R),
         "cubes": cubes, "commutative": R.is_commutative})


def _check_a4(R2):
    c = 2
    char = characteristic(R2)
    not_trip = not is_tripotent_ring(R2)
    return PaperAssertion(
        "A4", "R2 = Z2[x]/(x^2) is not tripotent and has characteristic 2, so "
        "clause (1) fails under both readings (tripotent / weakly tripotent "
        "of characteristic 3)",
        _status(not_trip and char != 3 and not is_tripotent_element(R2, c)),
        {"characteristic": char, "tripotent_ring": not not_trip,
         "weakly_tripotent_ring": is_weakly_tripotent_ring(R2),
         "non_tripotent_witness": {"element": "c = x", "c^3": power(R2, c, 3)}})


def _check_b1(Z4):
    R = direct_product(Z4, zero_ring())
    # (i, 0) has index i
    cubes = {"(0,0)^3=(0,0)": power(R, 0, 3) == 0,
             "(1,0)^3=(1,0)": power(R, 1, 3) == 1,
             "(3,0)^3=(3,0)": power(R, 3, 3) == 3}
    s = R.plus(1, 2)
    cubes["[(1,0)+(2,0)]^3=(1,0)+(2,0)"] = power(R, s, 3) == s
    printed_rhs = R.plus(3, 2)
    ok = is_weakly_tripotent_ring(R) and all(cubes.values()) \
        and is_weakly_tripotent_element(R, 2)
    return PaperAssertion(
        "B1", "Z4 x 0 is a commutative weakly tripotent ring with the displayed "
        "cubes",
        _status(ok),
        {"cubes": cubes,
         "note": "the printed right side (3,0)+(2,0) equals "
                 f"({printed_rhs},0), not (3,0); checked instead: "
                 f"[(1,0)+(2,0)]^3 = ({power(R, s, 3)},0) = (1,0)+(2,0)"})


def _check_b2(Z4):
    J = jacobson_radical(Z4)
    N = nilradical(Z4)
    return PaperAssertion(
        "B2", "J(Z4) coincides with the nilradical of Z4",
        _status(J == N),
        {"jacobson_radical": list(J.elements), "nilradical": list(N.elements),
         "maximal_ideals": [list(M.elements) for M in maximal_ideals(Z4)]})


def _check_b3(Z4):
    L = find_trivial_meet_maximal(Z4)
    return PaperAssertion(
        "B3", "Z4 has no maximal ideal L with L meet J(Z4) = 0",
        _status(L is None),
        {"maximal_ideals": [list(M.elements) for M in maximal_ideals(Z4)],
         "jacobson_radical": list(jacobson_radical(Z4).elements),
         "trivial_meet_ideal": None if L is None else list(L.elements)})


def _check_b4(Z4):
    found = []
    for m, target in ((0, Z4), (1, direct_product(Z4, build_cyclic(2)))):
        h = find_embedding(Z4, target)
        if h is not None:
            found.append({"r0": "Z4", "m": m, "target": target.label,
                          "map": h.to_list()})
    return PaperAssertion(
        "B4", "a literal unital embedding Z4 -> R0 x Z2^m with R0 = Z4 (weakly "
        "tripotent, no nontrivial idempotents) nevertheless exists",
        INFO if found else FAIL,
        {"embeddings": found,
         "note": "the maximal-ideal criterion fails (B3) while a literal "
                 "embedding exists; both facts are reported, neither reading "
                 "is adjudicated"})


def _check_n1(R2):
    left = direct_product(zero_ring(), R2)
    right = direct_product(R2, zero_ring())
    h = find_isomorphism(left, right)
    return PaperAssertion(
        "N1", "0 x R2 is isomorphic to R2 x 0",
        _status(h is not None and h.is_valid() and h.bijective),
        {"isomorphism": None if h is None else h.to_list()})


def verify_paper() -> list[PaperAssertion]:
    R2 = build_ring("Z2[x]/(x^2)")
    Z4 = build_cyclic(4)
    return [
        _check_a1(), _check_a2(R2), _check_a3(R2), _check_a4(R2),
        _check_b1(Z4), _check_b2(Z4), _check_b3(Z4), _check_b4(Z4),
        _check_n1(R2),
    ]
