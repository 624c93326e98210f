"""Element and ring predicates: idempotent, nilpotent, unit, involution,
tripotent, weakly tripotent, Boolean, invo-clean.

Ring-level predicates quantify over every element, so the zero ring
satisfies all of them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .ring import FiniteRing, characteristic

__all__ = [
    "ElementFlags",
    "InvoWitness",
    "RingProperties",
    "classify_element",
    "cubes",
    "has_nontrivial_idempotents",
    "idempotents",
    "invo_clean_status",
    "involutions",
    "is_boolean_ring",
    "is_tripotent_element",
    "is_tripotent_ring",
    "is_weakly_tripotent_element",
    "is_weakly_tripotent_ring",
    "nilpotency_index",
    "ring_properties",
    "unit_inverse",
]


@dataclass(frozen=True)
class ElementFlags:
    element: int
    idempotent: bool
    nilpotent: bool
    nilpotency_index: Optional[int]
    unit: bool
    inverse: Optional[int]
    involution: bool
    tripotent: bool
    weakly_tripotent: bool


@dataclass(frozen=True)
class InvoWitness:
    element: int
    v: int
    r: int
    commuting: bool


@dataclass(frozen=True)
class RingProperties:
    commutative: bool
    boolean_ring: bool
    tripotent_ring: bool
    weakly_tripotent_ring: bool
    invo_clean: bool
    strongly_invo_clean: bool
    has_nontrivial_idempotents: bool
    characteristic: int
    idempotents: int
    nilpotents: int
    units: int
    tripotent: int
    weakly_tripotent: int

    def to_dict(self) -> dict:
        d = asdict(self)
        counts = {k: d.pop(k) for k in
                  ("idempotents", "nilpotents", "units", "tripotent",
                   "weakly_tripotent")}
        d["counts"] = counts
        return d


def squares(R: FiniteRing) -> np.ndarray:
    return np.diagonal(R.mul)


def cubes(R: FiniteRing) -> np.ndarray:
    """``a**3`` for every element ``a``, as an array."""
    idx = np.arange(R.order)
    return R.mul[squares(R), idx]


def _tripotent_mask(R):
    return cubes(R) == np.arange(R.order)


def _weak_mask(R):
    trip = _tripotent_mask(R)
    # (1 + a)^3 = 1 + a
    return trip | trip[R.add[R.one]]


def is_tripotent_element(R: FiniteRing, a: int) -> bool:
    return int(R.mul[R.mul[a, a], a]) == a


def is_weakly_tripotent_element(R: FiniteRing, a: int) -> bool:
    return (is_tripotent_element(R, a)
            or is_tripotent_element(R, int(R.add[R.one, a])))


def idempotents(R: FiniteRing) -> list[int]:
    return [int(a) for a in np.flatnonzero(squares(R) == np.arange(R.order))]


def involutions(R: FiniteRing) -> list[int]:
    return [int(a) for a in np.flatnonzero(squares(R) == R.one)]


def nilpotency_index(R: FiniteRing, a: int) -> Optional[int]:
    """Least ``k >= 1`` with ``a**k = 0``, searched up to the ring order."""
    x = int(a)
    for k in range(1, R.order + 1):
        if x == 0:
            return k
        x = int(R.mul[x, a])
    return None


def unit_inverse(R: FiniteRing, a: int) -> Optional[int]:
    hits = np.flatnonzero((R.mul[a, :] == R.one) & (R.mul[:, a] == R.one))
    return int(hits[0]) if len(hits) else None


def classify_element(R: FiniteRing, a: int) -> ElementFlags:
    nil = nilpotency_index(R, a)
    inv = unit_inverse(R, a)
    sq = int(R.mul[a, a])
    return ElementFlags(
        element=int(a),
        idempotent=sq == a,
        nilpotent=nil is not None,
        nilpotency_index=nil,
        unit=inv is not None,
        inverse=inv,
        involution=sq == R.one,
        tripotent=is_tripotent_element(R, a),
        weakly_tripotent=is_weakly_tripotent_element(R, a),
    )


def is_boolean_ring(R: FiniteRing) -> bool:
    return bool((squares(R) == np.arange(R.order)).all())


def is_tripotent_ring(R: FiniteRing) -> bool:
    return bool(_tripotent_mask(R).all())


def is_weakly_tripotent_ring(R: FiniteRing) -> bool:
    return bool(_weak_mask(R).all())


def has_nontrivial_idempotents(R: FiniteRing) -> bool:
    return any(e not in (0, R.one) for e in idempotents(R))


def invo_clean_status(R: FiniteRing):
    """Search every element for a decomposition ``a = v + r`` with
    ``v**2 = 1`` and ``r**2 = r``.

    Returns ``(invo_clean, strongly, witnesses)``.  ``witnesses`` has one
    entry per element that decomposes at all: the first commuting pair
    ``(v, r)`` in lexicographic order if there is one, otherwise the first
    pair.
    """
    invs = involutions(R)
    idems = idempotents(R)
    witnesses = []
    invo, strong = True, True
    for a in R.elements:
        first = first_commuting = None
        for v in invs:
            for r in idems:
                if R.add[v, r] != a:
                    continue
                comm = bool(R.mul[v, r] == R.mul[r, v])
                if first is None:
                    first = InvoWitness(a, v, r, comm)
                if comm:
                    first_commuting = InvoWitness(a, v, r, True)
                    break
            if first_commuting is not None:
                break
        if first is None:
            invo = strong = False
            continue
        if first_commuting is None:
            strong = False
        witnesses.append(first_commuting or first)
    return invo, strong, witnesses


def ring_properties(R: FiniteRing) -> RingProperties:
    invo, strong, _ = invo_clean_status(R)
    nil = sum(nilpotency_index(R, a) is not None for a in R.elements)
    units = int(((R.mul == R.one).any(axis=1)
                 & (R.mul == R.one).any(axis=0)).sum())
    trip = _tripotent_mask(R)
    weak = _weak_mask(R)
    return RingProperties(
        commutative=R.is_commutative,
        boolean_ring=is_boolean_ring(R),
        tripotent_ring=bool(trip.all()),
        weakly_tripotent_ring=bool(weak.all()),
        invo_clean=invo,
        strongly_invo_clean=strong,
        has_nontrivial_idempotents=has_nontrivial_idempotents(R),
        characteristic=characteristic(R),
        idempotents=len(idempotents(R)),
        nilpotents=nil,
        units=units,
        tripotent=int(trip.sum()),
        weakly_tripotent=int(weak.sum()),
    )
