"""Enumeration of small commutative unital rings, theorem audits and
counterexample hunts.

Rings of order ``n`` are enumerated over each abelian group of order ``n``
(primary decomposition ``Z_{d_1} + ... + Z_{d_k}``).  A commutative
multiplication is fixed by the products ``g_i g_j`` of the cyclic
generators; bilinearity extends it to the whole group.  Within each prime
block the generator of largest order is taken to be that block's share of
the identity, which is no loss of generality: in a unital ring the identity
has order equal to the exponent of its block and so spans a direct summand.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .morphisms import find_embedding, find_isomorphism, fingerprint
from .predicates import (
    has_nontrivial_idempotents,
    is_tripotent_ring,
    is_weakly_tripotent_ring,
    ring_properties,
)
from .ring import (
    FiniteRing,
    build_cyclic,
    build_gf,
    build_poly_quotient,
    characteristic,
    direct_product,
    verify_axioms,
    zero_ring,
)
from .structure import find_trivial_meet_maximal, jacobson_radical, maximal_ideals, peirce_splittings

__all__ = [
    "AuditReport",
    "DEFAULT_MAX_ORDER",
    "FilterError",
    "GroupType",
    "HARD_MAX_ORDER",
    "SplittingAudit",
    "abelian_group_types",
    "audit_theorem",
    "catalog",
    "catalog_json",
    "enumerate_rings",
    "hunt",
    "load_catalog",
    "parse_filter",
]

DEFAULT_MAX_ORDER = 8
HARD_MAX_ORDER = 16


def _factorize(n):
    out, p = [], 2
    while p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _partitions(k, largest=None):
    """Partitions of k with parts in non-increasing order, largest first."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class GroupType:
    """Abelian group ``Z_{d_1} + ... + Z_{d_k}`` with prime-power ``d_i``;
    primes ascending, powers non-increasing within a prime."""

    factors: tuple

    @property
    def order(self):
        return math.prod(self.factors)

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(f"Z{d}" for d in self.factors)


def abelian_group_types(n: int) -> list[GroupType]:
    if n < 1:
        raise ValueError("group order must be positive")
    per_prime = [[tuple(p ** e for e in part) for part in _partitions(k)]
                 for p, k in _factorize(n)]
    return [GroupType(sum(combo, ())) for combo in itertools.product(*per_prime)]


# -- structure-constant enumeration ---------------------------------------

class _Group:
    """Concrete additive group for a GroupType.  Coordinates are mixed radix
    with the first factor least significant."""

    def __init__(self, gt: GroupType):
        self.d = list(gt.factors)
        self.k = len(self.d)
        self.n = gt.order
        self.radix = np.array([math.prod(self.d[:i]) for i in range(self.k)],
                              dtype=np.int64)
        idx = np.arange(self.n)
        self.coords = (idx[:, None] // self.radix[None, :]) % np.array(self.d)
        c = self.coords
        s = (c[:, None, :] + c[None, :, :]) % np.array(self.d)
        self.add = s @ self.radix
        self.order_of = [int(np.lcm.reduce([d // math.gcd(d, int(x))
                                            for d, x in zip(self.d, row)] or [1]))
                         for row in c]
        self.gen = [int(r) for r in self.radix]
        primes = [_factorize(d)[0][0] for d in self.d]
        self.block_first = {}
        for i, p in enumerate(primes):
            self.block_first.setdefault(p, i)
        self.prime = primes
        self.first_of = [self.block_first[p] for p in primes]
        # scalar multiples c*e for small c
        top = max(self.d, default=1)
        self.scal = np.zeros((top, self.n), dtype=np.int64)
        for m in range(1, top):
            self.scal[m] = self.add[self.scal[m - 1], idx]

    def one(self):
        return int(sum(self.radix[i] for i in set(self.block_first.values())))


def _free_pairs(G):
    firsts = set(G.block_first.values())
    pairs = []
    for i in range(G.k):
        for j in range(i, G.k):
            if G.prime[i] == G.prime[j] and i not in firsts and j not in firsts:
                pairs.append((i, j))
    return pairs


def _domains(G, pairs):
    doms = []
    for i, j in pairs:
        g = math.gcd(G.d[i], G.d[j])
        doms.append([e for e in range(G.n) if g % G.order_of[e] == 0])
    return doms


def _fixed_products(G):
    C = [[None] * G.k for _ in range(G.k)]
    firsts = set(G.block_first.values())
    for i in range(G.k):
        for j in range(G.k):
            if G.prime[i] != G.prime[j]:
                C[i][j] = 0
            elif i in firsts:
                C[i][j] = G.gen[j]
            elif j in firsts:
                C[i][j] = G.gen[i]
    return C


def _times_gen(G, C, x, k):
    """``x * g_k`` by bilinearity, or None if an unknown product is needed."""
    acc = 0
    for l, c in enumerate(G.coords[x]):
        if c:
            p = C[l][k]
            if p is None:
                return None
            acc = int(G.add[acc, G.scal[c, p]])
    return acc


def _assoc(G, C, i, j, k):
    """True/False for ``(g_i g_j) g_k == g_i (g_j g_k)``, None if unknown."""
    left = C[i][j]
    right = C[j][k]
    if left is None or right is None:
        return None
    a = _times_gen(G, C, left, k)
    if a is None:
        return None
    b = _times_gen(G, C, right, i)
    if b is None:
        return None
    return a == b


def _search_block(gt: GroupType, prefix: Optional[int], stride: int):
    """Associative structure-constant assignments for one group type.

    Returns ``(key, values)`` pairs where ``key`` is the tuple of candidate
    positions (lexicographic enumeration order).  When ``prefix`` is given
    only assignments whose first choice position is congruent to it modulo
    ``stride`` are explored.
    """
    G = _Group(gt)
    pairs = _free_pairs(G)
    doms = _domains(G, pairs)
    C = _fixed_products(G)
    triples = list(itertools.product(range(G.k), repeat=3))
    pending0 = []
    for t in triples:
        r = _assoc(G, C, *t)
        if r is False:
            return []
        if r is None:
            pending0.append(t)
    out = []
    choice = []

    def rec(depth, pending):
        if depth == len(pairs):
            out.append((tuple(choice), [C[i][j] for i, j in pairs]))
            return
        i, j = pairs[depth]
        for pos, val in enumerate(doms[depth]):
            if depth == 0 and prefix is not None and pos % stride != prefix:
                continue
            C[i][j] = C[j][i] = val
            still = []
            ok = True
            for t in pending:
                r = _assoc(G, C, *t)
                if r is None:
                    still.append(t)
                elif not r:
                    ok = False
                    break
            if ok:
                choice.append(pos)
                rec(depth + 1, still)
                choice.pop()
        C[i][j] = C[j][i] = None

    if not pairs and prefix not in (None, 0):
        return []
    rec(0, pending0)
    return out


def _mul_table(G, C):
    Cvec = np.zeros((G.k, G.k, G.k), dtype=np.int64)
    for i in range(G.k):
        for j in range(G.k):
            Cvec[i, j] = G.coords[C[i][j]]
    c = G.coords
    P = np.einsum("xi,yj,ijl->xyl", c, c, Cvec) % np.array(G.d)
    return P @ G.radix


def _work(task):
    t, gt, prefix, stride = task
    res = _search_block(gt, prefix, stride)
    return [((t,) + key, vals) for key, vals in res]


def _candidate_tables(n, jobs):
    gts = abelian_group_types(n)
    tasks = []
    for t, gt in enumerate(gts):
        if jobs > 1:
            tasks.extend((t, gt, p, jobs) for p in range(jobs))
        else:
            tasks.append((t, gt, None, 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_work, tasks))
    else:
        chunks = [_work(task) for task in tasks]
    found = sorted(itertools.chain.from_iterable(chunks), key=lambda kv: kv[0])
    groups = {t: _Group(gt) for t, gt in enumerate(gts)}
    for key, vals in found:
        G = groups[key[0]]
        C = _fixed_products(G)
        for (i, j), v in zip(_free_pairs(G), vals):
            C[i][j] = C[j][i] = v
        yield key, G, _mul_table(G, C)


@lru_cache(maxsize=None)
def _classes(n, jobs):
    if n == 1:
        return (zero_ring(),)
    reps: list[FiniteRing] = []
    buckets: dict = {}
    for key, G, mul in _candidate_tables(n, jobs):
        one = G.one()
        report = verify_axioms(G.add, mul, one)
        if not report.ok:
            raise AssertionError(f"candidate {key} failed {report.violations}")
        R = FiniteRing(G.add, mul, one, check=False)
        fp = fingerprint(R)
        bucket = buckets.setdefault(fp, [])
        if any(find_isomorphism(R, S) is not None for S in bucket):
            continue
        bucket.append(R)
        reps.append(R)
    reps.sort(key=lambda R: (R.order, fingerprint(R), R.table_bytes))
    return tuple(reps)


def enumerate_rings(n: int, commutative: bool = True, jobs: int = 1,
                    allow_large: bool = False) -> list[FiniteRing]:
    """Commutative unital rings of order ``n``, one per isomorphism class.

    Sorted by ``(order, fingerprint, table bytes)``; labels name the class by
    a familiar construction where one is found.  Orders above
    ``DEFAULT_MAX_ORDER`` need ``allow_large=True``; ``HARD_MAX_ORDER`` is
    absolute.
    """
    if not commutative:
        raise NotImplementedError("only commutative rings are enumerated")
    if n < 1:
        raise ValueError("order must be positive")
    if n > HARD_MAX_ORDER or (n > DEFAULT_MAX_ORDER and not allow_large):
        raise ValueError(
            f"order {n} exceeds the enumeration bound "
            f"({DEFAULT_MAX_ORDER}, or {HARD_MAX_ORDER} with allow_large)")
    reps = _classes(n, max(1, jobs))
    _name_classes(n, reps)
    return list(reps)


def catalog(max_order: int, jobs: int = 1,
            allow_large: bool = False) -> list[FiniteRing]:
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_rings(n, jobs=jobs, allow_large=allow_large))
    return out


# -- naming ---------------------------------------------------------------

def _named_constructions(n):
    yield build_cyclic(n)
    try:
        if len(_factorize(n)) == 1 and _factorize(n)[0][1] > 1:
            yield build_gf(n)
    except ValueError:
        pass
    for a in range(2, n):
        if n % a or a < n // a:
            continue
        b = n // a
        for A in enumerate_rings(a, allow_large=True):
            for B in enumerate_rings(b, allow_large=True):
                if a == b and (fingerprint(A), A.table_bytes) < (fingerprint(B), B.table_bytes):
                    continue
                yield direct_product(A, B)
    for m in range(2, n):
        d = round(math.log(n, m))
        if d < 2 or m ** d != n:
            continue
        bases = [build_cyclic(m)]
        pk = _factorize(m)
        if len(pk) == 1 and pk[0][1] > 1:
            bases.append(build_gf(m))
        for base in bases:
            c = characteristic(base)
            for low in itertools.product(range(c), repeat=d):
                yield build_poly_quotient(base, list(low) + [1])


def _name_classes(n, reps):
    if all(R.label for R in reps):
        return
    if n == 1:
        reps[0].label = "0"
        return
    unnamed = [R for R in reps if not R.label]
    for cand in _named_constructions(n):
        if not unnamed:
            break
        for R in unnamed:
            if find_isomorphism(cand, R) is not None:
                R.label = cand.label
                unnamed.remove(R)
                break
    for i, R in enumerate(reps):
        if not R.label:
            R.label = f"R{n}_{i}"


# -- catalog files --------------------------------------------------------

def ring_record(R: FiniteRing) -> dict:
    rec = R.to_record()
    rec["properties"] = ring_properties(R).to_dict()
    rec["fingerprint"] = fingerprint(R).to_dict()
    return rec


def catalog_json(rings) -> str:
    return json.dumps({"rings": [ring_record(R) for R in rings]},
                      separators=(",", ":")) + "\n"


def load_catalog(path) -> list[FiniteRing]:
    with open(path) as fh:
        doc = json.load(fh)
    return [FiniteRing.from_record(rec) for rec in doc["rings"]]


# -- theorem audit --------------------------------------------------------

@dataclass
class EmbeddingWitness:
    r0: str
    r0_order: int
    m: int
    empty_boolean_family: bool
    map: list

    def to_dict(self):
        return dict(self.__dict__)


def identify(R: FiniteRing) -> str:
    """Catalog name of ``R`` when its order is within the default bound."""
    if not R.is_commutative or R.order > DEFAULT_MAX_ORDER:
        return R.label
    for S in enumerate_rings(R.order):
        if find_isomorphism(R, S) is not None:
            return S.label
    return R.label


def _summary(R):
    return {"label": identify(R), "order": R.order,
            "characteristic": characteristic(R),
            "zero_ring": R.is_zero_ring,
            "tripotent": is_tripotent_ring(R),
            "weakly_tripotent": is_weakly_tripotent_ring(R)}


@dataclass
class SplittingAudit:
    idempotent: int
    r1: dict
    r2: dict
    r1_elements: list
    r2_elements: list
    clause1_literal: bool
    clause1_paper_variant: bool
    clause2_criterion: bool
    criterion_witness: Optional[list]
    r1_maximal_ideals: list
    r1_jacobson_radical: list
    clause2_bounded_embedding: bool
    embedding_witnesses: list = field(default_factory=list)

    @property
    def satisfied_literal(self):
        return self.clause1_literal and self.clause2_bounded_embedding

    @property
    def satisfied_criterion(self):
        return self.clause1_literal and self.clause2_criterion

    def to_dict(self):
        d = dict(self.__dict__)
        d["embedding_witnesses"] = [w.to_dict() for w in self.embedding_witnesses]
        d["satisfied_literal"] = self.satisfied_literal
        d["satisfied_criterion"] = self.satisfied_criterion
        return d


@dataclass
class AuditReport:
    label: str
    fingerprint: dict
    weakly_tripotent: bool
    embed_bound: int
    boolean_factor_bound: int
    splittings: list
    notes: list

    @property
    def holds_literal(self):
        return any(s.satisfied_literal for s in self.splittings)

    @property
    def holds_criterion(self):
        return any(s.satisfied_criterion for s in self.splittings)

    def to_dict(self):
        return {
            "label": self.label,
            "fingerprint": self.fingerprint,
            "weakly_tripotent": self.weakly_tripotent,
            "embed_bound": self.embed_bound,
            "boolean_factor_bound": self.boolean_factor_bound,
            "splittings": [s.to_dict() for s in self.splittings],
            "exists_splitting_literal": self.holds_literal,
            "exists_splitting_criterion": self.holds_criterion,
            "notes": list(self.notes),
        }


AUDIT_NOTES = (
    "embeddings are unital: the subring must contain the identity of the "
    "target product",
    "the Boolean family is searched as Z2^m for 0 <= m <= boolean_factor_bound;"
    " m = 0 (empty family, target R0 alone) is allowed and flagged",
    "clause (2) is checked twice: by the trivial-meet maximal ideal criterion "
    "and by a bounded search for a literal embedding",
)


@lru_cache(maxsize=None)
def _boolean_power(m):
    R = build_cyclic(1) if m == 0 else build_cyclic(2)
    for _ in range(m - 1):
        R = direct_product(R, build_cyclic(2))
    R.label = "0" if m == 0 else ("Z2" if m == 1 else f"Z2^{m}")
    return R


@lru_cache(maxsize=None)
def _r0_candidates(bound):
    out = []
    for n in range(1, min(bound, HARD_MAX_ORDER) + 1):
        for R0 in enumerate_rings(n, allow_large=True):
            if is_weakly_tripotent_ring(R0) and not has_nontrivial_idempotents(R0):
                out.append(R0)
    return tuple(out)


@lru_cache(maxsize=None)
def _target(r0_index, bound, m):
    R0 = _r0_candidates(bound)[r0_index]
    if m == 0:
        return R0
    return direct_product(R0, _boolean_power(m), label=f"{R0.label} * {_boolean_power(m).label}")


def _bounded_embeddings(R1, embed_bound, boolean_factor_bound, first_only=False):
    found = []
    c1 = characteristic(R1)
    for idx, R0 in enumerate(_r0_candidates(embed_bound)):
        c0 = characteristic(R0)
        for m in range(boolean_factor_bound + 1):
            c = c0 if m == 0 else math.lcm(c0, 2)
            if c != c1 or R0.order * 2 ** m < R1.order:
                continue
            h = find_embedding(R1, _target(idx, embed_bound, m))
            if h is not None:
                found.append(EmbeddingWitness(R0.label, R0.order, m, m == 0,
                                              h.to_list()))
                if first_only:
                    return found
    return found


def audit_theorem(R: FiniteRing, embed_bound: Optional[int] = None,
                  boolean_factor_bound: int = 4) -> AuditReport:
    """Check the decomposition clauses on every idempotent splitting of R.

    Clause 1 (on the second factor) is read both as "tripotent of
    characteristic 3" and as "weakly tripotent of characteristic 3".  Clause
    2 (on the first factor) is read both through the trivial-meet maximal
    ideal criterion and through a bounded search for an embedding into
    ``R0 x Z2^m``.
    """
    if not R.is_commutative:
        raise ValueError("audit needs a commutative ring")
    if not is_weakly_tripotent_ring(R):
        raise ValueError(f"{R.label or 'ring'} is not weakly tripotent")
    if embed_bound is None:
        embed_bound = R.order
    audits = []
    for sp in peirce_splittings(R):
        R1, R2 = sp.part1, sp.part2
        c2 = characteristic(R2)
        lit = R2.is_zero_ring or (is_tripotent_ring(R2) and c2 == 3)
        var = R2.is_zero_ring or (is_weakly_tripotent_ring(R2) and c2 == 3)
        if R1.is_zero_ring:
            crit, wit, maxi, jac, emb = True, None, [], [0], []
        else:
            L = find_trivial_meet_maximal(R1)
            crit = L is not None
            wit = list(L.elements) if L is not None else None
            maxi = [list(M.elements) for M in maximal_ideals(R1)]
            jac = list(jacobson_radical(R1).elements)
            emb = _bounded_embeddings(R1, embed_bound, boolean_factor_bound)
        audits.append(SplittingAudit(
            idempotent=sp.e,
            r1=_summary(R1), r2=_summary(R2),
            r1_elements=list(sp.part1_elements),
            r2_elements=list(sp.part2_elements),
            clause1_literal=lit, clause1_paper_variant=var,
            clause2_criterion=crit, criterion_witness=wit,
            r1_maximal_ideals=maxi, r1_jacobson_radical=jac,
            clause2_bounded_embedding=R1.is_zero_ring or bool(emb),
            embedding_witnesses=emb,
        ))
    return AuditReport(R.label, fingerprint(R).to_dict(), True, embed_bound,
                       boolean_factor_bound, audits, list(AUDIT_NOTES))


# -- hunting --------------------------------------------------------------

class FilterError(ValueError):
    pass


def _any_split(attr, want):
    def f(entry):
        audit = entry["audit"]
        return audit is not None and any(
            getattr(s, attr) == want for s in audit.splittings)
    return f


def _prop(name):
    return lambda entry: getattr(entry["properties"], name)


PREDICATES = {
    "commutative": _prop("commutative"),
    "boolean": _prop("boolean_ring"),
    "tripotent": _prop("tripotent_ring"),
    "weakly-tripotent": _prop("weakly_tripotent_ring"),
    "invo-clean": _prop("invo_clean"),
    "strongly-invo-clean": _prop("strongly_invo_clean"),
    "nontrivial-idempotents": _prop("has_nontrivial_idempotents"),
    "clause1-literal-fails-for-some-splitting":
        _any_split("clause1_literal", False),
    "clause1-variant-fails-for-some-splitting":
        _any_split("clause1_paper_variant", False),
    "clause2-criterion-fails-for-some-splitting":
        _any_split("clause2_criterion", False),
    "clause2-embedding-fails-for-some-splitting":
        _any_split("clause2_bounded_embedding", False),
    "theorem-literal-holds":
        lambda e: e["audit"] is not None and e["audit"].holds_literal,
    "theorem-criterion-holds":
        lambda e: e["audit"] is not None and e["audit"].holds_criterion,
    "verdicts-disagree":
        lambda e: e["audit"] is not None
        and e["audit"].holds_literal != e["audit"].holds_criterion,
}


def parse_filter(text: str):
    """Parse ``term (AND term)*`` with ``term := [NOT] name``."""
    terms = []
    text = (text or "").strip()
    if not text:
        return terms
    for chunk in text.split(" AND "):
        words = chunk.split()
        negate = False
        if words and words[0] == "NOT":
            negate, words = True, words[1:]
        if len(words) != 1:
            raise FilterError(f"cannot parse filter term {chunk.strip()!r}")
        name = words[0].lower()
        if name not in PREDICATES:
            raise FilterError(f"unknown predicate {words[0]!r}; known: "
                              + ", ".join(sorted(PREDICATES)))
        terms.append((negate, name))
    return terms


def hunt(max_order: int, filter_expr: str = "", jobs: int = 1,
         allow_large: bool = False, embed_bound: Optional[int] = None,
         boolean_factor_bound: int = 4) -> list[dict]:
    """Catalog rings up to ``max_order`` that match ``filter_expr``.

    Each match is a dict with ``ring``, ``properties`` and ``audit`` (None
    for rings that are not weakly tripotent).
    """
    terms = parse_filter(filter_expr)
    need_audit = any(n.startswith(("clause", "theorem", "verdicts"))
                     for _, n in terms)
    out = []
    for R in catalog(max_order, jobs=jobs, allow_large=allow_large):
        props = ring_properties(R)
        entry = {"ring": R, "properties": props, "audit": None}
        if need_audit and props.weakly_tripotent_ring:
            entry["audit"] = audit_theorem(R, embed_bound, boolean_factor_bound)
        if all(PREDICATES[name](entry) != neg for neg, name in terms):
            if entry["audit"] is None and props.weakly_tripotent_ring:
                entry["audit"] = audit_theorem(R, embed_bound,
                                               boolean_factor_bound)
            out.append(entry)
    return out
