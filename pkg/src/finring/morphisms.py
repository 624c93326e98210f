"""Unital homomorphisms, embeddings and isomorphism tests.

Searches assign images to a small generating set and propagate them through
the ring operations; every candidate is discarded as soon as two derivations
of the same element disagree.  Only maps with ``1 -> 1`` are considered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .predicates import classify_element, cubes, ring_properties
from .ring import FiniteRing, additive_order, characteristic

__all__ = [
    "Fingerprint",
    "Homomorphism",
    "are_isomorphic",
    "enumerate_unital_homs",
    "find_embedding",
    "find_isomorphism",
    "fingerprint",
    "iter_unital_homs",
    "minimal_generators",
    "subring_closure",
]


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FiniteRing
    target: FiniteRing
    map: tuple

    def __call__(self, a):
        return self.map[a]

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def bijective(self) -> bool:
        return self.injective and len(self.map) == self.target.order

    def is_valid(self) -> bool:
        """Pointwise check of +, * and the identity."""
        A, B = self.source, self.target
        m = np.asarray(self.map)
        if len(m) != A.order or m[A.one] != B.one:
            return False
        return bool((m[A.add] == B.add[m[:, None], m[None, :]]).all()
                    and (m[A.mul] == B.mul[m[:, None], m[None, :]]).all())

    def to_list(self) -> list[int]:
        return list(self.map)


@dataclass(frozen=True, order=True)
class Fingerprint:
    order: int
    characteristic: int
    idempotents: int
    nilpotents: int
    units: int
    tripotent: int
    weakly_tripotent: int
    additive_orders: tuple
    unit_orders: tuple

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "characteristic": self.characteristic,
            "idempotents": self.idempotents,
            "nilpotents": self.nilpotents,
            "units": self.units,
            "tripotent": self.tripotent,
            "weakly_tripotent": self.weakly_tripotent,
            "additive_orders": list(self.additive_orders),
            "unit_orders": list(self.unit_orders),
        }


def _mult_order(R, u):
    k, x = 1, u
    while x != R.one:
        x = int(R.mul[x, u])
        k += 1
    return k


def fingerprint(R: FiniteRing) -> Fingerprint:
    cache = R.__dict__.setdefault("_fp", [])
    if cache:
        return cache[0]
    props = ring_properties(R)
    units = [a for a in R.elements if classify_element(R, a).unit]
    fp = Fingerprint(
        order=R.order,
        characteristic=props.characteristic,
        idempotents=props.idempotents,
        nilpotents=props.nilpotents,
        units=props.units,
        tripotent=props.tripotent,
        weakly_tripotent=props.weakly_tripotent,
        additive_orders=tuple(sorted(additive_order(R, a) for a in R.elements)),
        unit_orders=tuple(sorted(_mult_order(R, u) for u in units)),
    )
    cache.append(fp)
    return fp


def subring_closure(R: FiniteRing, gens) -> list[int]:
    """Elements of the smallest unital subring containing ``gens``,
    in the order they are discovered."""
    seen = {0, R.one}
    order = [0, R.one] if R.one else [0]
    for g in gens:
        if g not in seen:
            seen.add(g)
            order.append(int(g))
    i = 0
    while i < len(order):
        x = order[i]
        for y in order[: i + 1]:
            for z in (int(R.add[x, y]), int(R.mul[x, y])):
                if z not in seen:
                    seen.add(z)
                    order.append(z)
        i += 1
    return order


def minimal_generators(R: FiniteRing) -> list[int]:
    """Greedy inclusion-minimal generating set (``one`` is implicit)."""
    gens: list[int] = []
    span = set(subring_closure(R, gens))
    for a in R.elements:
        if a not in span:
            gens.append(a)
            span = set(subring_closure(R, gens))
            if len(span) == R.order:
                break
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if len(subring_closure(R, rest)) == R.order:
            gens = rest
    return gens


def _element_signature(R):
    """Isomorphism-invariant label of each element, used for pruning."""
    cache = R.__dict__.get("_sig")
    if cache is None:
        cu = cubes(R)
        sig = []
        for a in R.elements:
            f = classify_element(R, a)
            sig.append((additive_order(R, a), f.idempotent, f.nilpotency_index,
                        _mult_order(R, a) if f.unit else 0, f.involution,
                        bool(cu[a] == a), f.weakly_tripotent))
        cache = R.__dict__["_sig"] = sig
    return cache


class _Propagator:
    """Partial map ``A -> B`` closed under + and * on its domain."""

    def __init__(self, A, B, injective):
        self.A, self.B = A, B
        self.injective = injective
        self.img = [-1] * A.order
        self.used = set()
        self.dom: list[int] = []

    def snapshot(self):
        return len(self.dom)

    def restore(self, size):
        for a in self.dom[size:]:
            if self.injective:
                self.used.discard(self.img[a])
            self.img[a] = -1
        del self.dom[size:]

    def _set(self, a, b):
        cur = self.img[a]
        if cur >= 0:
            return cur == b
        if self.injective and b in self.used:
            return False
        self.img[a] = b
        self.dom.append(a)
        if self.injective:
            self.used.add(b)
        return True

    def assign(self, a, b) -> bool:
        """Set ``a -> b`` and propagate; False on contradiction."""
        start = len(self.dom)
        if not self._set(a, b):
            return False
        A, B, img = self.A, self.B, self.img
        i = start
        # new elements must be combined with every mapped element
        while i < len(self.dom):
            x = self.dom[i]
            for y in self.dom[: i + 1]:
                bx, by = img[x], img[y]
                if not (self._set(int(A.add[x, y]), int(B.add[bx, by]))
                        and self._set(int(A.mul[x, y]), int(B.mul[bx, by]))
                        and self._set(int(A.mul[y, x]), int(B.mul[by, bx]))):
                    return False
            i += 1
        return True


def _candidates(A, B, a, pred):
    oa = additive_order(A, a)
    for b in B.elements:
        if oa % additive_order(B, b) == 0 and (pred is None or pred(a, b)):
            yield b


def _search(A, B, order, injective, pred) -> Iterator[tuple]:
    prop = _Propagator(A, B, injective)
    if not (prop.assign(0, 0) and prop.assign(A.one, B.one)):
        return
    cands = {}

    def rec(k):
        if len(prop.dom) == A.order:
            yield tuple(prop.img)
            return
        while k < len(order) and prop.img[order[k]] >= 0:
            k += 1
        if k == len(order):
            return
        a = order[k]
        if a not in cands:
            cands[a] = list(_candidates(A, B, a, pred))
        for b in cands[a]:
            mark = prop.snapshot()
            if prop.assign(a, b):
                yield from rec(k + 1)
            prop.restore(mark)

    yield from rec(0)


def iter_unital_homs(A: FiniteRing, B: FiniteRing, method="auto",
                     injective=False, pred=None) -> Iterator[Homomorphism]:
    """Lazily enumerate unital homomorphisms ``A -> B``.

    ``method="generators"`` assigns images to ``minimal_generators(A)`` only;
    ``method="full"`` assigns every element in index order.  ``"auto"`` uses
    the full search when ``|A| <= 6``.  Candidate images are tried in
    increasing index order, so the first map found is deterministic.
    """
    if method == "auto":
        method = "full" if A.order <= 6 else "generators"
    if method == "generators":
        order = minimal_generators(A)
    elif method == "full":
        order = list(A.elements)
    else:
        raise ValueError(f"unknown method {method!r}")
    for m in _search(A, B, order, injective, pred):
        yield Homomorphism(A, B, m)


def enumerate_unital_homs(A: FiniteRing, B: FiniteRing,
                          method="auto") -> list[Homomorphism]:
    return list(iter_unital_homs(A, B, method))


def find_embedding(A: FiniteRing, B: FiniteRing,
                   method="auto") -> Optional[Homomorphism]:
    """First injective unital homomorphism ``A -> B``, or None."""
    if A.order > B.order or characteristic(A) != characteristic(B):
        return None
    return next(iter_unital_homs(A, B, method, injective=True), None)


def find_isomorphism(A: FiniteRing, B: FiniteRing) -> Optional[Homomorphism]:
    if A.order != B.order or A.is_commutative != B.is_commutative:
        return None
    if fingerprint(A) != fingerprint(B):
        return None
    sa, sb = _element_signature(A), _element_signature(B)
    return next(iter_unital_homs(A, B, "generators", injective=True,
                                 pred=lambda a, b: sa[a] == sb[b]), None)


def are_isomorphic(A: FiniteRing, B: FiniteRing) -> bool:
    return find_isomorphism(A, B) is not None

