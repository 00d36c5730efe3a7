"""Write every 3-connected simple graph on 4..N vertices as graph6, one per line.

    python3 tools/gen_corpus.py 8 tests/data/threeconn_le8.g6
"""
import argparse
import sys
import time

from fanforge.corpus import three_connected_graphs
from fanforge.graph6 import write_file


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("max_n", type=int)
    ap.add_argument("out")
    args = ap.parse_args(argv)
    graphs = []
    for n in range(4, args.max_n + 1):
        t = time.time()
        level = three_connected_graphs(n, allow_large=True)
        print(f"n={n}: {len(level)} graphs in {time.time() - t:.1f}s", file=sys.stderr)
        graphs.extend(level)
    write_file(args.out, graphs)


if __name__ == "__main__":
    main()
