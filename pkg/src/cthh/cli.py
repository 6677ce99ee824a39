"""Command-line interface: quiver I/O, per-quiver reports, verification sweeps.

Quiver files are JSON documents {"vertices": n, "arrows": [[s, t], ...]}
with 1-based indices and order-insensitive arrows.  Every command accepts
--json for machine-readable output; the default is aligned text.  Exit
codes: 0 pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .algebra import build_algebra, cartan
from .classify import hh_closed_form, hh_universal
from .errors import CthhError, InputSyntaxError
from .fields import QQ, FieldSpec
from .linalg import format_poly
from .oracle import hh1_dim, hh_dims
from .quiver import Quiver, detect_dynkin, dynkin_seed, enumerate_class, mutate, validate
from .relations import generate_relations
from .series import hh_dims_list
from .verify import verify_suite


# ---------------------------------------------------------------------------
# Quiver documents
# ---------------------------------------------------------------------------

def parse_quiver(text: str) -> Quiver:
    """Parse a quiver document; raises InputSyntaxError with position info."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputSyntaxError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or set(doc) != {"vertices", "arrows"}:
        raise InputSyntaxError('document must have exactly the keys "vertices" and "arrows"')
    vertices = doc["vertices"]
    arrows = doc["arrows"]
    if not isinstance(vertices, int) or vertices < 1:
        raise InputSyntaxError('"vertices" must be a positive integer')
    if not isinstance(arrows, list) or any(
        not isinstance(a, list) or len(a) != 2 or not all(isinstance(x, int) for x in a)
        for a in arrows
    ):
        raise InputSyntaxError('"arrows" must be a list of [source, target] integer pairs')
    q = Quiver(vertices, tuple(sorted((s, t) for s, t in arrows)))
    validate(q)
    return q


def serialize_quiver(q: Quiver) -> str:
    doc = {"vertices": q.vertex_count, "arrows": [list(a) for a in sorted(q.arrows)]}
    return json.dumps(doc)


def _read_quiver(path: str) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def _parse_seed(text: str):
    m = re.fullmatch(r"([ADEade])(\d+)", text.strip())
    if not m:
        raise InputSyntaxError(f"seed must look like A5, D4 or E6, got {text!r}")
    return m.group(1).upper(), int(m.group(2))


def _parse_chars(text: str):
    try:
        return [FieldSpec(int(c)) for c in text.split(",") if c.strip() != ""]
    except ValueError as e:
        raise InputSyntaxError(str(e)) from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_validate(args):
    q = _read_quiver(args.file)
    if args.json:
        print(json.dumps({"ok": True, "vertices": q.vertex_count, "arrows": len(q.arrows)}))
    else:
        print(f"ok: {q.vertex_count} vertices, {len(q.arrows)} arrows")
    return 0


def _cmd_mutate(args):
    q = _read_quiver(args.file)
    out = mutate(q, args.at)
    print(serialize_quiver(out))
    return 0


def _cmd_class(args):
    family, rank = _parse_seed(args.seed)
    members = enumerate_class(dynkin_seed(family, rank), cap=args.cap)
    if args.json:
        print(json.dumps({
            "seed": f"{family}{rank}",
            "count": len(members),
            "quivers": [json.loads(serialize_quiver(q)) for q in members],
        }))
    else:
        print(f"{family}{rank}: {len(members)} isomorphism classes")
        for q in members:
            print(" ", serialize_quiver(q))
    return 0


def _cmd_relations(args):
    q = _read_quiver(args.file)
    rels = generate_relations(q)
    if args.json:
        print(json.dumps({
            "relations": [
                {
                    "arrow": list(arrow),
                    "kind": "zero" if rel.is_zero_relation else "commutativity",
                    "terms": [{"coefficient": c, "path": list(p.vertices)} for c, p in rel.terms],
                }
                for arrow, rel in rels
            ]
        }))
    else:
        if not len(rels):
            print("no relations (hereditary)")
        for arrow, rel in rels:
            kind = "zero" if rel.is_zero_relation else "comm"
            print(f"  arrow {arrow[0]}->{arrow[1]}  [{kind}]  {rel}")
    return 0


def _cmd_cartan(args):
    q = _read_quiver(args.file)
    a = build_algebra(q, generate_relations(q), QQ)
    cd = cartan(a)
    if args.json:
        print(json.dumps({
            "matrix": [list(r) for r in cd.matrix],
            "det": cd.det,
            "assoc_poly_ascending": list(cd.assoc_poly),
            "assoc_poly": format_poly(cd.assoc_poly),
        }))
    else:
        print("Cartan matrix:")
        width = max(len(str(x)) for row in cd.matrix for x in row)
        for row in cd.matrix:
            print("  " + " ".join(f"{x:>{width}}" for x in row))
        print(f"det C = {cd.det}")
        print(f"associated polynomial: {format_poly(cd.assoc_poly)}")
    return 0


def _cmd_hh(args):
    q = _read_quiver(args.file)
    fs = FieldSpec(args.char)
    family, rank = detect_dynkin(q)
    a = build_algebra(q, generate_relations(q), QQ)
    if args.method == "typed":
        h = hh_closed_form(q, family, rank, algebra=a)
    else:
        h = hh_universal(hh1_dim(a), cartan(a).det)
    dims = hh_dims_list(h, args.max_i, fs)
    if args.json:
        print(json.dumps({
            "family": f"{family}{rank}",
            "h": str(h),
            "characteristic": args.char,
            "dims": dims,
        }))
    else:
        print(f"type {family}{rank}, h = {h}")
        print(f"dim HH^i over {fs} for i = 0..{args.max_i}:")
        print("  " + " ".join(str(d) for d in dims))
    return 0


def _cmd_hh_oracle(args):
    q = _read_quiver(args.file)
    fs = FieldSpec(args.char)
    a = build_algebra(q, generate_relations(q), fs)
    result = hh_dims(a, max_i=args.max_i)
    if args.json:
        print(json.dumps({"characteristic": args.char, "dims": list(result.dims)}))
    else:
        print(f"oracle dim HH^i over {fs} for i = 0..{args.max_i}:")
        print("  " + " ".join(str(d) for d in result.dims))
    return 0


def _cmd_verify(args):
    family, rank = _parse_seed(args.seed)
    fieldspecs = _parse_chars(args.chars)
    if args.sample is None and family == "E" and rank >= 7:
        sample = 50  # full E7/E8 classes are large; --sample all forces exhaustion
    elif args.sample in (None, "all"):
        sample = None
    else:
        sample = int(args.sample)
    report = verify_suite(family, rank, fieldspecs, args.max_i,
                          sample=sample, jobs=args.jobs)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        header = f"{'quiver':40s} {'h':12s} {'det':>4s} {'subtype':12s} {'status':6s}"
        print(header)
        for r in report.records:
            status = "ok" if r.passed else "FAIL"
            print(f"{r.canonical:40s} {r.closed_form:12s} {r.cartan_det:>4d} {r.subtype or '-':12s} {status:6s}")
            for msg in r.messages:
                print(f"    {msg}")
        print(report.summary())
    return 0 if report.passed else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cthh",
        description="Hochschild cohomology of cluster-tilted algebras of finite type",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a quiver file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("mutate", help="mutate a quiver at a vertex")
    p.add_argument("file")
    p.add_argument("--at", type=int, required=True, metavar="K")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("class", help="enumerate a mutation class")
    p.add_argument("--seed", required=True, metavar="{A|D|E}N")
    p.add_argument("--cap", type=int, default=100000)
    p.set_defaults(fn=_cmd_class)

    p = sub.add_parser("relations", help="defining relations from the quiver")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_relations)

    p = sub.add_parser("cartan", help="Cartan matrix, determinant, associated polynomial")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_cartan)

    p = sub.add_parser("hh", help="closed-form Hochschild dimensions")
    p.add_argument("file")
    p.add_argument("--char", type=int, default=0, metavar="P")
    p.add_argument("--max-i", type=int, default=8, dest="max_i")
    p.add_argument("--method", choices=("typed", "universal"), default="typed")
    p.set_defaults(fn=_cmd_hh)

    p = sub.add_parser("hh-oracle", help="brute-force Hochschild dimensions")
    p.add_argument("file")
    p.add_argument("--char", type=int, required=True, metavar="P")
    p.add_argument("--max-i", type=int, required=True, dest="max_i")
    p.set_defaults(fn=_cmd_hh_oracle)

    p = sub.add_parser("verify", help="reconcile closed forms against the oracle over a class")
    p.add_argument("--seed", required=True, metavar="{A|D|E}N")
    p.add_argument("--chars", required=True, help="comma-separated characteristics, 0 = rationals")
    p.add_argument("--max-i", type=int, default=8, dest="max_i")
    p.add_argument("--sample", default=None, help="sample size or 'all'")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputSyntaxError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except CthhError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
