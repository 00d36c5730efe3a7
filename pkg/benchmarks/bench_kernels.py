"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""
import argparse
import json
import random
import sys
import timeit

from fanforge import _kernels_py
from fanforge.graph import make_hypercube, make_prism, make_wheel
from fanforge.graph6 import read_file

try:
    from fanforge import _ckernels
except ImportError:
    _ckernels = None


def workloads(corpus_path):
    graphs = [make_wheel(8), make_prism(), make_hypercube(3), make_hypercube(4)]
    if corpus_path:
        graphs += [g for _, g in read_file(corpus_path)][-200:]
    rng = random.Random(0)
    edge_lists = []
    for g in graphs:
        _, idx = g.index()
        pairs = [(idx[a], idx[b]) for a, b in g.pairs()]
        rng.shuffle(pairs)
        edge_lists.append((g.order, [a for a, _ in pairs], [b for _, b in pairs]))
    masks = [(g.adjacency_masks(), g.order) for g in graphs]
    return masks, edge_lists


def run(impl, masks, edge_lists):
    for adj, n in masks:
        impl.is_k_connected(adj, n, 3)
    for n, us, vs in edge_lists:
        impl.forest_rank(n, us, vs)


def main(argv=None):
    ap = argparse.ArgumentParser(description="kernel benchmark")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--corpus", default="tests/data/threeconn_le8.g6")
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    try:
        masks, edge_lists = workloads(args.corpus)
    except OSError:
        masks, edge_lists = workloads(None)
    impls = {"python": _kernels_py}
    if _ckernels is not None:
        impls["cython"] = _ckernels
    # both backends must agree before timing means anything
    if _ckernels is not None:
        for adj, n in masks:
            assert _ckernels.is_k_connected(adj, n, 3) == _kernels_py.is_k_connected(adj, n, 3)
        for n, us, vs in edge_lists:
            assert _ckernels.forest_rank(n, us, vs) == _kernels_py.forest_rank(n, us, vs)
    res = {}
    for name, impl in impls.items():
        t = min(timeit.repeat(lambda: run(impl, masks, edge_lists), number=1, repeat=args.repeat))
        res[name] = t
        print(f"{name:>7}: {t * 1000:8.2f} ms for {len(masks)} graphs")
    if "cython" in res:
        print(f"speedup: {res['python'] / res['cython']:.1f}x")
    else:
        print("compiled kernels not available", file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(res, fh, indent=2)


if __name__ == "__main__":
    main()
