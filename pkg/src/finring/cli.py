"""Command line interface: ``finring <command> ...``.

Exit status is 0 on success, 1 when a check fails (a FAIL assertion, no
embedding, not isomorphic, ring not auditable) and 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .dsl import ParseError, build_ring
from .morphisms import find_embedding, find_isomorphism, fingerprint
from .predicates import classify_element, ring_properties
from .ring import characteristic
from .search import (
    FilterError,
    audit_theorem,
    catalog_json,
    hunt,
    ring_record,
)
from .structure import (
    NotCommutativeError,
    all_ideals,
    jacobson_radical,
    maximal_ideals,
    nilradical,
)
from .verify import verify_paper


class UsageError(Exception):
    pass


def _ring(spec):
    try:
        return build_ring(spec)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(f"cannot build {spec!r}: {exc}") from None


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _table(rows):
    width = max(len(str(v)) for row in rows for v in row)
    return [" ".join(str(v).rjust(width) for v in row) for row in rows]


def _props_lines(p):
    d = p.to_dict()
    counts = d.pop("counts")
    lines = [f"  {k}: {v}" for k, v in d.items()]
    lines += [f"  count {k}: {v}" for k, v in counts.items()]
    return lines


def cmd_show(args):
    R = _ring(args.spec)
    p = ring_properties(R)
    lines = [f"{R.label}  order={R.order}  one={R.one}", "addition:"]
    lines += ["  " + s for s in _table(R.add.tolist())]
    lines += ["multiplication:"] + ["  " + s for s in _table(R.mul.tolist())]
    lines += ["properties:"] + _props_lines(p)
    _emit(args, ring_record(R), lines)
    return 0


def cmd_props(args):
    R = _ring(args.spec)
    p = ring_properties(R)
    flags = [classify_element(R, a) for a in R.elements]
    lines = [f"{R.label}  order={R.order}"] + _props_lines(p)
    lines.append("elements (idem nil unit invol trip weak):")
    for f in flags:
        marks = "".join("x" if v else "." for v in (
            f.idempotent, f.nilpotent, f.unit, f.involution, f.tripotent,
            f.weakly_tripotent))
        lines.append(f"  {f.element:>3} {marks}")
    _emit(args, {"label": R.label, "properties": p.to_dict(),
                 "elements": [f.__dict__ for f in flags]}, lines)
    return 0


def cmd_ideals(args):
    R = _ring(args.spec)
    ideals = all_ideals(R)
    payload = {"label": R.label,
               "ideals": [list(I.elements) for I in ideals],
               "nilradical": list(nilradical(R).elements)}
    lines = [f"{R.label}: {len(ideals)} ideals"]
    lines += [f"  {I}" for I in ideals]
    lines.append(f"nilradical: {nilradical(R)}")
    if not R.is_zero_ring:
        maxi = maximal_ideals(R)
        J = jacobson_radical(R)
        payload["maximal_ideals"] = [list(M.elements) for M in maxi]
        payload["jacobson_radical"] = list(J.elements)
        lines.append("maximal: " + ", ".join(str(M) for M in maxi))
        lines.append(f"J(R): {J}")
    _emit(args, payload, lines)
    return 0


def _audit_lines(rep):
    lines = [f"audit of {rep.label} (embed bound {rep.embed_bound}, "
             f"Boolean factors up to Z2^{rep.boolean_factor_bound})"]
    for s in rep.splittings:
        lines.append(f"  e={s.idempotent}: R1={s.r1['label']} "
                     f"(order {s.r1['order']}), R2={s.r2['label']} "
                     f"(order {s.r2['order']}, char {s.r2['characteristic']})")
        lines.append(f"    clause1 literal={s.clause1_literal} "
                     f"weak-variant={s.clause1_paper_variant}")
        lines.append(f"    clause2 criterion={s.clause2_criterion} "
                     f"(J(R1)={s.r1_jacobson_radical}, "
                     f"witness={s.criterion_witness})")
        lines.append(f"    clause2 bounded embedding="
                     f"{s.clause2_bounded_embedding}")
        for w in s.embedding_witnesses:
            flag = " [empty Boolean family]" if w.empty_boolean_family else ""
            lines.append(f"      into {w.r0} x Z2^{w.m}: {w.map}{flag}")
    lines.append(f"  exists splitting (literal): {rep.holds_literal}")
    lines.append(f"  exists splitting (criterion): {rep.holds_criterion}")
    lines += [f"  note: {n}" for n in rep.notes]
    return lines


def cmd_audit(args):
    R = _ring(args.spec)
    try:
        rep = audit_theorem(R, args.embed_bound, args.boolean_bound)
    except ValueError as exc:
        print(f"finring: {exc}", file=sys.stderr)
        return 1
    _emit(args, rep.to_dict(), _audit_lines(rep))
    return 0


def cmd_search(args):
    try:
        found = hunt(args.max_order, args.filter, jobs=args.jobs,
                     allow_large=args.allow_large)
    except FilterError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rings = [e["ring"] for e in found]
    if args.catalog:
        with open(args.catalog, "w") as fh:
            fh.write(catalog_json(rings))
    records = []
    lines = []
    for e in found:
        rec = ring_record(e["ring"])
        if e["audit"] is not None:
            rec["audit"] = e["audit"].to_dict()
        records.append(rec)
        p = e["properties"]
        extra = ""
        if e["audit"] is not None:
            extra = (f" literal={e['audit'].holds_literal}"
                     f" criterion={e['audit'].holds_criterion}")
        lines.append(f"{e['ring'].label:<28} order={e['ring'].order:<3} "
                     f"char={p.characteristic:<3} wt={p.weakly_tripotent_ring}"
                     f"{extra}")
    lines.append(f"{len(found)} ring(s)")
    _emit(args, {"rings": records}, lines)
    return 0


def cmd_embed(args):
    A, B = _ring(args.spec_a), _ring(args.spec_b)
    h = find_embedding(A, B)
    payload = {"source": A.label, "target": B.label,
               "embedding": None if h is None else h.to_list()}
    text = (f"no unital embedding {A.label} -> {B.label}" if h is None
            else f"{A.label} -> {B.label}: {h.to_list()}")
    _emit(args, payload, [text])
    return 0 if h is not None else 1


def cmd_iso(args):
    A, B = _ring(args.spec_a), _ring(args.spec_b)
    h = find_isomorphism(A, B)
    payload = {"source": A.label, "target": B.label,
               "isomorphic": h is not None,
               "witness": None if h is None else h.to_list()}
    if h is None:
        fa, fb = fingerprint(A), fingerprint(B)
        text = f"{A.label} and {B.label} are not isomorphic"
        if fa != fb:
            text += (f" (fingerprints differ; characteristic "
                     f"{characteristic(A)} vs {characteristic(B)})")
    else:
        text = f"{A.label} ~ {B.label} via {h.to_list()}"
    _emit(args, payload, [text])
    return 0 if h is not None else 1


def cmd_verify_paper(args):
    t0 = time.perf_counter()
    results = verify_paper()
    elapsed = time.perf_counter() - t0
    failed = any(r.status == "FAIL" for r in results)
    lines = [f"{r.id} {r.status:<4} {r.description}" for r in results]
    for r in results:
        note = r.witness.get("note")
        if note:
            lines.append(f"   {r.id}: {note}")
    lines.append(f"{'FAILED' if failed else 'ok'} in {elapsed:.3f}s")
    _emit(args, {"assertions": [r.to_dict() for r in results],
                 "seconds": elapsed}, lines)
    return 1 if failed else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="finring", parents=[common],
        description="Finite commutative ring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("show", cmd_show, "tables and properties").add_argument("spec")
    add("props", cmd_props, "ring and element properties").add_argument("spec")
    add("ideals", cmd_ideals, "ideal lattice and radicals").add_argument("spec")
    p = add("audit", cmd_audit, "audit the decomposition clauses")
    p.add_argument("spec")
    p.add_argument("--embed-bound", type=int, default=None)
    p.add_argument("--boolean-bound", type=int, default=4)
    p = add("search", cmd_search, "enumerate rings and filter them")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--filter", default="")
    p.add_argument("--catalog", default=None)
    p.add_argument("--allow-large", action="store_true",
                   help="permit orders 9..16")
    for name, func in (("embed", cmd_embed), ("iso", cmd_iso)):
        p = add(name, func, f"{name} search between two rings")
        p.add_argument("spec_a")
        p.add_argument("spec_b")
    add("verify-paper", cmd_verify_paper, "re-check the counterexamples")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if not hasattr(args, "format"):
        args.format = "text"
    if not hasattr(args, "jobs"):
        args.jobs = 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"finring: {exc}", file=sys.stderr)
        return 2
    except NotCommutativeError as exc:
        print(f"finring: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
