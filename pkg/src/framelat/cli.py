"""Command line driver: batch verification with machine-readable output.

JSON goes to stdout, a short human summary to stderr; the exit code is 0
exactly when every executed claim passed.  FRAMELAT_DATA_DIR overrides the
catalog location, FRAMELAT_BACKEND selects the enumeration backend.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import catalog, codes, data_store, frames, lattices, representations, theorems
from .errors import FramelatError


def _emit(doc, summary_lines):
    json.dump(doc, sys.stdout, indent=1, default=str)
    sys.stdout.write("\n")
    for line in summary_lines:
        print(line, file=sys.stderr)


def cmd_verify_catalog(args) -> int:
    names = args.only or data_store.entry_names()
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(
                lambda n: catalog.verify(n, tier=args.tier), names))
    else:
        reports = [catalog.verify(n, tier=args.tier) for n in names]
    ok = all(r["pass"] for r in reports)
    doc = {
        "command": "verify-catalog",
        "tier": args.tier,
        "entries": reports,
        "counts": catalog.manifest_counts(),
        "pass": ok,
    }
    lines = []
    for r in reports:
        status = "ok" if r["pass"] else "FAIL"
        failing = [c["claim"] for c in r["checks"] if not c["pass"]]
        extra = f" failing={failing}" if failing else ""
        lines.append(f"{status:4} {r['name']} ({len(r['checks'])} checks, "
                     f"{len(r['skipped'])} deferred){extra}")
    lines.append(f"verify-catalog [{args.tier}]: "
                 f"{'all claims pass' if ok else 'FAILURES PRESENT'}")
    _emit(doc, lines)
    return 0 if ok else 1


def cmd_theorem(args) -> int:
    kwargs = {"prime_range": args.prime_range, "tier": args.tier}
    if args.max_k:
        kwargs["k_max"] = args.max_k
    report = theorems.run_theorem(args.id, **kwargs)
    ok = report["pass"]
    lines = [f"theorem {args.id}: {report['description']}"]
    for rec in report["records"]:
        if rec.get("pass") is False:
            lines.append(f"  FAIL: {rec}")
    lines.append("PASS" if ok else "FAIL")
    _emit(report, lines)
    return 0 if ok else 1


def cmd_build(args) -> int:
    obj = catalog.build(args.name)
    if isinstance(obj, codes.ZkCode):
        doc = obj.to_json()
        kind = f"code over Z_{obj.k}, length {obj.n}"
    elif isinstance(obj, lattices.UnimodularLattice):
        doc = obj.to_json()
        kind = f"unimodular lattice, dim {obj.n}, scale {obj.scale}"
    else:
        doc = {"rows": [[int(v) for v in row] for row in obj]}
        kind = f"integer matrix {obj.shape[0]}x{obj.shape[1]}"
    _emit({"command": "build", "name": args.name, "object": doc},
          [f"built {args.name}: {kind}"])
    return 0


def cmd_theta(args) -> int:
    lat = catalog.lattice_for(args.name)
    fp = lattices.theta_coefficients(
        lat, args.max_norm, budget=args.node_budget, threads=args.threads,
        checkpoint=args.checkpoint,
    )
    _emit({"command": "theta", "name": args.name, "fingerprint": fp.to_json()},
          [f"theta({args.name}) to norm {args.max_norm}: {fp.counts}"])
    return 0


def cmd_min_norm(args) -> int:
    lat = catalog.lattice_for(args.name)
    mu = lattices.min_norm(lat, budget=args.node_budget)
    _emit({"command": "min-norm", "name": args.name, "min_norm": mu},
          [f"min({args.name}) = {mu}"])
    return 0


def cmd_find_frame(args) -> int:
    lat = catalog.lattice_for(args.name)
    res = frames.find_frame(lat, args.k, budget=args.budget)
    _emit({"command": "find-frame", "name": args.name, "k": args.k,
           "result": res.to_json()},
          [f"find-frame {args.name} k={args.k}: {res.status} "
           f"({res.vector_pairs} vector pairs, {res.nodes} nodes)"])
    return 0 if res.status in ("found", "none") else 2


def cmd_represent(args) -> int:
    if args.prime:
        w = representations.find_representation(args.prime, args.case)
        doc = {"case": args.case, "p": args.prime,
               "status": "witness" if w else "none"}
        if w:
            doc["witness"] = [w.a, w.b, w.c, w.d]
        _emit({"command": "represent", "result": doc},
              [f"case {args.case}, p={args.prime}: {doc['status']}"])
        return 0
    report = theorems.job_representation(args.case, args.range)
    lines = [f"case {args.case} over primes < {args.range}: "
             f"{'consistent' if report['pass'] else 'MISMATCH'}"]
    _emit({"command": "represent", "report": report}, lines)
    return 0 if report["pass"] else 1


def cmd_neighbors(args) -> int:
    lat = catalog.lattice_for(args.name)
    n1, n2 = lattices.even_neighbors(lat)
    doc = {
        "command": "neighbors",
        "name": args.name,
        "neighbors": [
            {"lattice": nb.to_json(), "even": nb.is_even,
             "min_norm": lattices.min_norm(nb)}
            for nb in (n1, n2)
        ],
    }
    _emit(doc, [f"even neighbors of {args.name}: mins "
                f"{[d['min_norm'] for d in doc['neighbors']]}"])
    return 0


def cmd_list(args) -> int:
    doc = {
        "command": "list",
        "entries": data_store.entry_names(),
        "groups": catalog.manifest_counts(),
        "aliases": catalog.aliases(),
        "theorems": sorted(set(theorems.JOBS))
        + [f"3.2{c}" for c in sorted(representations.CASES)],
    }
    _emit(doc, [f"{len(doc['entries'])} entries, "
                f"{len(doc['theorems'])} theorem ids"])
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="framelat",
        description="self-dual Z_k codes, unimodular lattices, and k-frames",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-catalog", help="run every entry's claims")
    p.add_argument("--tier", choices=("fast", "full"), default="fast")
    p.add_argument("--only", nargs="*", help="restrict to these entries")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_verify_catalog)

    p = sub.add_parser("theorem", help="run a named verification job")
    p.add_argument("id")
    p.add_argument("--prime-range", type=int, default=500)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--tier", choices=("fast", "full"), default="fast")
    p.set_defaults(fn=cmd_theorem)

    p = sub.add_parser("build", help="construct a named object")
    p.add_argument("name")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("theta", help="exact theta coefficients")
    p.add_argument("name")
    p.add_argument("--max-norm", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--checkpoint", default=None)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("min-norm", help="exact minimum norm")
    p.add_argument("name")
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(fn=cmd_min_norm)

    p = sub.add_parser("find-frame", help="complete k-frame search")
    p.add_argument("name")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(fn=cmd_find_frame)

    p = sub.add_parser("represent", help="prime representation search")
    p.add_argument("--case", required=True,
                   choices=sorted(representations.CASES))
    p.add_argument("--range", type=int, default=500)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(fn=cmd_represent)

    p = sub.add_parser("neighbors", help="even unimodular neighbors")
    p.add_argument("name")
    p.set_defaults(fn=cmd_neighbors)

    p = sub.add_parser("list", help="catalog names and theorem ids")
    p.set_defaults(fn=cmd_list)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FramelatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
