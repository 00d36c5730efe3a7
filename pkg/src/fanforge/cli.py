"""Command line entry point: ``fanforge verify|generate-sharpness|ingest|trace``."""
from __future__ import annotations

import argparse
import json
import sys

from fanforge.errors import FanforgeError, SelfCheckError
from fanforge.graph6 import encode_graph6, read_file

SUITE_CHOICES = ("ando", "main", "main2", "main3", "structural", "all")


def _write_json(data, dest):
    text = json.dumps(data, indent=2, sort_keys=False)
    if dest in (None, "-"):
        print(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text + "\n")


def _fail(msg, code=2):
    print(f"fanforge: error: {msg}", file=sys.stderr)
    return code


def cmd_verify(args) -> int:
    from fanforge.harness import SUITES, load_input, load_minor, verify
    graphs = load_input(args.input)
    h = load_minor(args.minor)
    suites = SUITES if "all" in args.suite else tuple(args.suite)
    rep = verify(graphs, h, suites, jobs=args.jobs)
    # JSON on stdout replaces the table
    if not args.quiet and args.json != "-":
        cols = list(rep.suites)
        print(f"{'graph':<14}{'|V|':>4}{'|E|':>5}{'contr':>7}  " + "  ".join(f"{c:>10}" for c in cols))
        for r in rep.records:
            if "skipped" in r:
                print(f"{r['id']:<14}{r['order']:>4}{r['size']:>5}  skipped: {r['skipped']}")
                continue
            cells = []
            for c in cols:
                b = r["bounds"].get(c)
                if b is None:
                    cells.append(f"{'-':>10}")
                elif "value" in b:
                    cells.append(f"{('ok ' if b['pass'] else 'FAIL ') + str(b['value']) + '/' + str(b['bound']):>10}")
                else:
                    cells.append(f"{'ok' if b['pass'] else 'FAIL':>10}")
            print(f"{r['id']:<14}{r['order']:>4}{r['size']:>5}{r.get('contractible', '-'):>7}  " + "  ".join(cells))
        s = rep.summary()
        print(f"{s['graphs']} graphs, {s['skipped']} skipped, {s['failures']} failures")
    if args.json:
        _write_json(rep.to_json(timings=not args.no_timings), args.json)
    return 0 if rep.ok else 1


def cmd_sharpness(args) -> int:
    from fanforge.sharpness import generate, unique_contraction_sets
    try:
        pair = generate(args.kind, n=args.n, m=args.m, k=args.k)
    except SelfCheckError as exc:
        return _fail(f"self-check failed: {exc}", 3)
    out = pair.to_json()
    if args.verify:
        from fanforge.families import h_contractible_edges
        from fanforge.oracle import oracle_max_contractible_forest
        guard = (pair.g.order, pair.g.size)
        hc = h_contractible_edges(pair.g, pair.h)
        size, forest = oracle_max_contractible_forest(pair.g, pair.h, guard)
        out["verify"] = {"h_contractible": sorted(hc),
                         "inside_contracted_set": hc <= pair.contracted,
                         "largest_forest": size, "forest": sorted(forest)}
        if args.kind == "trianglefree":
            out["verify"]["contraction_sets"] = [sorted(z) for z in unique_contraction_sets(pair)]
    _write_json(out, args.json)
    return 0


def cmd_ingest(args) -> int:
    graphs = read_file(args.graph6)
    rows = [{"line": no, "order": g.order, "size": g.size, "graph6": encode_graph6(g)}
            for no, g in graphs]
    print(f"{len(rows)} graphs read from {args.graph6}")
    if args.json:
        _write_json({"report_version": 1, "source": args.graph6, "graphs": rows}, args.json)
    return 0


def cmd_trace(args) -> int:
    from fanforge.harness import load_input, load_minor
    from fanforge.lifting.induction import Chain, build_fan_family
    h = load_minor(args.minor)
    out = []
    for gid, g in load_input(args.input):
        chain = Chain()
        fam = build_fan_family(g, h, chain=chain)
        out.append({"id": gid, "family": [sorted(m) for m in fam.members], "rank": fam.rank,
                    "chain": chain.to_json()})
    _write_json({"report_version": 1, "traces": out}, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fanforge",
                                 description="Contractible edges and fan families in 3-connected graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check the bounds on a corpus")
    v.add_argument("--input", required=True, help="graph6/sparse6 file or a named spec like wheels:4..8")
    v.add_argument("--minor", default="K1", help="K1, a named graph, a graph6 string or a file")
    v.add_argument("--suite", nargs="+", choices=SUITE_CHOICES, default=["all"])
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--no-timings", action="store_true", help="leave timings out of the JSON")
    v.add_argument("--quiet", action="store_true", help="no table")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("generate-sharpness", help="emit a (G, H) pair where the forest bound is tight")
    s.add_argument("--kind", required=True, choices=("j1", "j2", "trianglefree"))
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int, help="clique size; default is the smallest that works")
    s.add_argument("--k", type=int)
    s.add_argument("--verify", action="store_true", help="also run the exhaustive checks")
    s.add_argument("--json", help="output file (default stdout)")
    s.set_defaults(func=cmd_sharpness)

    i = sub.add_parser("ingest", help="decode a graph6/sparse6 file")
    i.add_argument("--graph6", required=True)
    i.add_argument("--json")
    i.set_defaults(func=cmd_ingest)

    t = sub.add_parser("trace", help="dump the lifting chain behind each family")
    t.add_argument("--input", required=True)
    t.add_argument("--minor", default="K1")
    t.add_argument("--json")
    t.set_defaults(func=cmd_trace)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FanforgeError, ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
