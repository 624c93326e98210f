"""Ideals, radicals, quotients and idempotent splittings of finite
commutative rings.

Everything here refuses noncommutative input: one-sided ideals are not
modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .morphisms import Homomorphism
from .predicates import idempotents, nilpotency_index
from .ring import FiniteRing, direct_product, subring_on

__all__ = [
    "Ideal",
    "NotCommutativeError",
    "Splitting",
    "all_ideals",
    "ideal_sum",
    "is_ideal",
    "jacobson_radical",
    "maximal_ideals",
    "nilradical",
    "peirce_splittings",
    "principal_ideal",
    "quotient_by_ideal",
    "find_trivial_meet_maximal",
]


class NotCommutativeError(ValueError):
    pass


@dataclass(frozen=True)
class Ideal:
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements",
                           tuple(sorted(int(e) for e in set(self.elements))))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def __le__(self, other):
        return set(self.elements) <= set(other.elements)

    def __and__(self, other):
        return Ideal(set(self.elements) & set(other.elements))

    @property
    def sort_key(self):
        return (len(self.elements), self.elements)

    def is_zero(self):
        return self.elements == (0,)

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


def _require_commutative(R):
    if not R.is_commutative:
        raise NotCommutativeError(
            f"{R.label or 'ring'} is not commutative; only two-sided ideals "
            "of commutative rings are supported")


def _require_nonzero(R):
    if R.is_zero_ring:
        raise ValueError("the zero ring has no proper ideals")


def is_ideal(R: FiniteRing, elements) -> bool:
    """Independent check of the ideal axioms for an arbitrary subset."""
    s = sorted(set(int(e) for e in elements))
    if not s or s[0] != 0:
        return False
    idx = np.array(s)
    inside = np.zeros(R.order, dtype=bool)
    inside[idx] = True
    return bool(inside[R.add[np.ix_(idx, idx)]].all()
                and inside[R.mul[:, idx]].all()
                and inside[R.mul[idx, :]].all())


def principal_ideal(R: FiniteRing, a: int) -> Ideal:
    _require_commutative(R)
    return Ideal(np.unique(R.mul[:, a]).tolist())


def ideal_sum(R: FiniteRing, I: Ideal, J: Ideal) -> Ideal:
    return Ideal(np.unique(R.add[np.ix_(I.elements, J.elements)]).tolist())


def all_ideals(R: FiniteRing) -> list[Ideal]:
    """Every ideal of ``R``, ordered by size and then by element sequence.

    Built from the principal ideals by closing under pairwise sums: every
    ideal of a finite commutative unital ring is a finite sum of principal
    ones.
    """
    _require_commutative(R)
    found = {principal_ideal(R, a) for a in R.elements}
    frontier = list(found)
    while frontier:
        fresh = []
        base = list(found)
        for I in frontier:
            for J in base:
                K = ideal_sum(R, I, J)
                if K not in found:
                    found.add(K)
                    fresh.append(K)
        frontier = fresh
    return sorted(found, key=lambda I: I.sort_key)


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    _require_nonzero(R)
    proper = [I for I in all_ideals(R) if len(I) < R.order]
    return [I for I in proper
            if not any(I is not J and I <= J and len(J) > len(I)
                       for J in proper)]


def nilradical(R: FiniteRing) -> Ideal:
    _require_commutative(R)
    return Ideal(a for a in R.elements if nilpotency_index(R, a) is not None)


def jacobson_radical(R: FiniteRing) -> Ideal:
    """Intersection of the maximal ideals."""
    meet = set(R.elements)
    for M in maximal_ideals(R):
        meet &= set(M.elements)
    return Ideal(meet)


def find_trivial_meet_maximal(R: FiniteRing) -> Optional[Ideal]:
    """First maximal ideal ``L`` (canonical order) with ``L & J(R) = {0}``."""
    J = jacobson_radical(R)
    for L in maximal_ideals(R):
        if (L & J).is_zero():
            return L
    return None


def quotient_by_ideal(R: FiniteRing, I: Ideal) -> FiniteRing:
    """``R/I`` with each coset represented by its least element."""
    _require_commutative(R)
    if not is_ideal(R, I.elements):
        raise ValueError(f"{I} is not an ideal of {R.label or 'the ring'}")
    members = np.array(I.elements)
    rep = R.add[:, members].min(axis=1)
    reps = np.unique(rep)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    coset = pos[rep]
    add = coset[R.add[np.ix_(reps, reps)]]
    mul = coset[R.mul[np.ix_(reps, reps)]]
    label = f"({R.label})/{I}" if R.label else ""
    return FiniteRing(add, mul, int(coset[R.one]), label)


@dataclass(frozen=True, eq=False)
class Splitting:
    """``R = eR x (1-e)R`` for an idempotent ``e``.

    ``part1_elements`` / ``part2_elements`` list the elements of ``R`` that
    make up each factor, in the order of the factor's own indices.
    """

    e: int
    part1: FiniteRing
    part2: FiniteRing
    iso_to_product: Homomorphism
    part1_elements: tuple
    part2_elements: tuple


def peirce_splittings(R: FiniteRing) -> list[Splitting]:
    """One splitting per idempotent, in increasing index order of ``e``."""
    _require_commutative(R)
    out = []
    for e in idempotents(R):
        f = R.minus(R.one, e)
        p1 = sorted(set(R.mul[e, :].tolist()))
        p2 = sorted(set(R.mul[f, :].tolist()))
        name = R.label or "R"
        R1 = subring_on(R, p1, e, f"{name}|e={e}")
        R2 = subring_on(R, p2, f, f"{name}|e={f}")
        P = direct_product(R1, R2)
        pos1 = {x: i for i, x in enumerate(p1)}
        pos2 = {x: i for i, x in enumerate(p2)}
        m = tuple(pos1[int(R.mul[e, a])] * R2.order + pos2[int(R.mul[f, a])]
                  for a in R.elements)
        h = Homomorphism(R, P, m)
        if not (h.is_valid() and h.bijective):
            raise AssertionError(f"splitting at e={e} is not an isomorphism")
        out.append(Splitting(e, R1, R2, h, tuple(p1), tuple(p2)))
    return out
