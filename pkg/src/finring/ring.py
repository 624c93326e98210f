"""Finite unital rings stored as complete Cayley tables.

Elements are the indices ``0 .. n-1``.  Index 0 is always the additive
identity; every constructor in this module normalizes to that convention.
Tables are numpy integer arrays that are frozen (read-only) once the ring
has been validated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "AxiomError",
    "AxiomReport",
    "FiniteRing",
    "additive_order",
    "build_cyclic",
    "build_gf",
    "build_poly_quotient",
    "characteristic",
    "direct_product",
    "power",
    "relabel",
    "subring_on",
    "verify_axioms",
    "zero_ring",
]


class AxiomError(ValueError):
    """Raised when candidate tables do not describe a unital ring."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0]
        super().__init__(f"ring axiom {first[0]!r} violated at {first[1]}")


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple = ()
    commutative: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def _first(mask):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def verify_axioms(add, mul, one) -> AxiomReport:
    """Exhaustively check the unital ring axioms on a pair of tables.

    The zero element is taken to be index 0.  One witness tuple (the first
    in lexicographic scan order) is reported per violated axiom.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0] if add.ndim == 2 else 0
    violations = []
    if (n == 0 or add.shape != (n, n) or mul.shape != (n, n)
            or not 0 <= int(one) < n):
        return AxiomReport((("shape", (n,)),), False)
    bad = (add < 0) | (add >= n)
    bad |= (mul < 0) | (mul >= n)
    if bad.any():
        return AxiomReport((("closure", _first(bad)),), False)

    idx = np.arange(n)
    checks = []
    checks.append(("additive_identity",
                   (add[0, :] != idx) | (add[:, 0] != idx)))
    checks.append(("additive_commutativity", add != add.T))
    checks.append(("additive_inverse", ~(add == 0).any(axis=1)))
    checks.append(("additive_associativity",
                   add[add[:, :, None], idx[None, None, :]]
                   != add[idx[:, None, None], add[None, :, :]]))
    checks.append(("multiplicative_identity",
                   (mul[one, :] != idx) | (mul[:, one] != idx)))
    checks.append(("multiplicative_associativity",
                   mul[mul[:, :, None], idx[None, None, :]]
                   != mul[idx[:, None, None], mul[None, :, :]]))
    # a(b+c) = ab + ac and (a+b)c = ac + bc
    checks.append(("left_distributivity",
                   mul[idx[:, None, None], add[None, :, :]]
                   != add[mul[:, :, None], mul[:, None, :]]))
    checks.append(("right_distributivity",
                   mul[add[:, :, None], idx[None, None, :]]
                   != add[mul[:, None, :], mul[None, :, :]]))
    for name, mask in checks:
        w = _first(mask)
        if w is not None:
            violations.append((name, w))
    return AxiomReport(tuple(violations), bool((mul == mul.T).all()))


class FiniteRing:
    """A finite unital ring given by its addition and multiplication tables.

    ``add`` and ``mul`` are ``n x n`` integer arrays; ``one`` is the index of
    the multiplicative identity.  The tables are validated on construction
    unless ``check=False`` is passed by a caller that already knows they are
    valid.
    """

    def __init__(self, add, mul, one, label="", check=True):
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
        if check:
            report = verify_axioms(add, mul, one)
            if not report.ok:
                raise AxiomError(report)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add = add
        self.mul = mul
        self.one = int(one)
        self.zero = 0
        self.label = label

    def __repr__(self):
        return f"FiniteRing({self.label or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def order(self) -> int:
        return self.add.shape[0]

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of every element."""
        out = np.argmax(self.add == 0, axis=1)
        out.setflags(write=False)
        return out

    @cached_property
    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def table_bytes(self) -> bytes:
        return (np.int64(self.one).tobytes() + self.add.tobytes()
                + self.mul.tobytes())

    @property
    def is_zero_ring(self) -> bool:
        return self.order == 1

    def plus(self, a, b):
        return int(self.add[a, b])

    def times(self, a, b):
        return int(self.mul[a, b])

    def minus(self, a, b):
        return int(self.add[a, self.neg[b]])

    def multiple(self, k: int, a: int) -> int:
        """The element ``a + a + ... + a`` (k terms, k may be negative)."""
        if k < 0:
            k, a = -k, int(self.neg[a])
        out, base = 0, a
        while k:
            if k & 1:
                out = int(self.add[out, base])
            base = int(self.add[base, base])
            k >>= 1
        return out

    def same_tables(self, other) -> bool:
        return (self.one == other.one
                and np.array_equal(self.add, other.add)
                and np.array_equal(self.mul, other.mul))

    def to_record(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "one": self.one,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
        }

    @classmethod
    def from_record(cls, record) -> "FiniteRing":
        ring = cls(record["add"], record["mul"], record["one"],
                   record.get("label", ""))
        if ring.order != record["order"]:
            raise ValueError("record order does not match its tables")
        return ring


def power(R: FiniteRing, a: int, k: int) -> int:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    out, base = R.one, int(a)
    while k:
        if k & 1:
            out = int(R.mul[out, base])
        base = int(R.mul[base, base])
        k >>= 1
    return out


def additive_order(R: FiniteRing, a: int) -> int:
    k, x = 1, int(a)
    while x != 0:
        x = int(R.add[x, a])
        k += 1
    return k


def characteristic(R: FiniteRing) -> int:
    """Additive order of the identity (1 for the zero ring)."""
    return additive_order(R, R.one)


def zero_ring() -> FiniteRing:
    return FiniteRing([[0]], [[0]], 0, "0")


def build_cyclic(n: int) -> FiniteRing:
    """The integers modulo ``n``; index ``i`` is the residue ``i``."""
    if n < 1:
        raise ValueError(f"Z_n needs n >= 1, got {n}")
    i = np.arange(n)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return FiniteRing(add, mul, 1 % n, f"Z{n}", check=False)


def relabel(R: FiniteRing, perm, label=None) -> FiniteRing:
    """Isomorphic copy of ``R`` where old element ``a`` becomes ``perm[a]``.

    ``perm[0]`` must be 0 so the zero convention survives.
    """
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(R.order)) or perm[0] != 0:
        raise ValueError("perm must be a permutation fixing 0")
    inv = np.empty_like(perm)
    inv[perm] = np.arange(R.order)
    add = perm[R.add[np.ix_(inv, inv)]]
    mul = perm[R.mul[np.ix_(inv, inv)]]
    return FiniteRing(add, mul, int(perm[R.one]),
                      R.label if label is None else label, check=False)


def subring_on(R: FiniteRing, elements, one, label="") -> FiniteRing:
    """Restrict ``R`` to ``elements`` (closed under + and *), with ``one``
    as the identity of the restricted ring.

    New indices follow the increasing order of ``elements``, so 0 stays 0.
    """
    elems = sorted(set(int(e) for e in elements))
    if elems[0] != 0:
        raise ValueError("subset must contain zero")
    pos = {e: i for i, e in enumerate(elems)}
    sel = np.array(elems)
    try:
        add = np.vectorize(pos.__getitem__, otypes=[np.int64])(
            R.add[np.ix_(sel, sel)])
        mul = np.vectorize(pos.__getitem__, otypes=[np.int64])(
            R.mul[np.ix_(sel, sel)])
    except KeyError as exc:
        raise ValueError(f"subset not closed: {exc} escapes") from None
    return FiniteRing(add, mul, pos[int(one)], label)


def direct_product(A: FiniteRing, B: FiniteRing, label=None) -> FiniteRing:
    """Componentwise product; the pair ``(i, j)`` has index ``i*|B| + j``."""
    m = B.order
    add = (A.add[:, None, :, None] * m + B.add[None, :, None, :])
    mul = (A.mul[:, None, :, None] * m + B.mul[None, :, None, :])
    n = A.order * m
    if label is None:
        label = f"{A.label} * {B.label}"
    return FiniteRing(add.reshape(n, n), mul.reshape(n, n),
                      A.one * m + B.one, label, check=False)


def _coerce(base: FiniteRing, c: int) -> int:
    return base.multiple(c, base.one)


def _poly_label(base_label, coeffs):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    poly = " ".join(terms) if terms else "0"
    return f"{base_label}[x]/({poly})"


def build_poly_quotient(base: FiniteRing, f, label=None) -> FiniteRing:
    """The ring ``base[x]/(f)``.

    ``f`` lists integer coefficients low degree first; each integer ``c`` is
    read in ``base`` as ``c * one``.  The image of the leading coefficient
    must be ``one``.  The element with coefficient indices
    ``(c_0, ..., c_{d-1})`` has index ``sum(c_i * |base|**i)``.
    """
    if not base.is_commutative:
        raise ValueError("polynomial quotients need a commutative base")
    f = [int(c) for c in f]
    d = len(f) - 1
    if d < 1:
        raise ValueError("modulus must have degree >= 1")
    fb = [_coerce(base, c) for c in f]
    if fb[-1] != base.one or f[-1] == 0:
        raise ValueError(f"modulus {f} is not monic over {base.label}")
    q = base.order
    n = q ** d
    vecs = np.array(list(itertools.product(range(q), repeat=d)))[:, ::-1]
    weights = q ** np.arange(d)
    # x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
    red = [int(base.neg[c]) for c in fb[:-1]]

    add = base.add[vecs[:, None, :], vecs[None, :, :]] @ weights
    mul = np.empty((n, n), dtype=np.int64)
    badd, bmul = base.add, base.mul
    for i in range(n):
        u = vecs[i]
        for j in range(i, n):
            v = vecs[j]
            prod = [0] * (2 * d - 1)
            for s in range(d):
                if u[s] == 0:
                    continue
                for t in range(d):
                    prod[s + t] = badd[prod[s + t], bmul[u[s], v[t]]]
            for k in range(2 * d - 2, d - 1, -1):
                c = prod[k]
                if c:
                    for t in range(d):
                        prod[k - d + t] = badd[prod[k - d + t], bmul[c, red[t]]]
            mul[i, j] = mul[j, i] = int(np.dot(prod[:d], weights))
    one = base.one
    if label is None:
        b = base.label
        label = _poly_label(f"({b})" if "*" in b else b, f)
    return FiniteRing(add, mul, one, label, check=False)


def _prime_power(q):
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _poly_mod(a, b, p):
    """Remainder of a by monic b over Z_p (coefficients low degree first)."""
    a = list(a)
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            for t in range(db + 1):
                a[k - db + t] = (a[k - db + t] - c * b[t]) % p
    return [c % p for c in a[:db]]


def _is_irreducible(f, p):
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=e):
            if not any(_poly_mod(f, list(low) + [1], p)):
                return False
    return True


def build_gf(q: int) -> FiniteRing:
    """The field with ``q`` elements.

    For ``q = p**k`` with ``k > 1`` the modulus is the first monic
    irreducible of degree ``k`` over Z_p, scanning coefficient tuples
    ``(c_0, ..., c_{k-1})`` in lexicographic order.
    """
    pk = _prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        R = build_cyclic(p)
        R.label = f"GF({q})"
        return R
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return build_poly_quotient(build_cyclic(p), f, label=f"GF({q})")
    raise AssertionError("unreachable: irreducibles exist in every degree")
