"""Pure-Python connectivity and rank kernels.

Graphs are passed as a list of neighbour bitmasks indexed ``0..n-1``.
``_ckernels`` exposes the same functions compiled with Cython.
"""
from itertools import combinations


def connected(adj, alive):
    """True iff the vertices in bitmask ``alive`` induce a connected graph.

    The empty vertex set counts as connected.
    """
    if alive == 0:
        return True
    seen = alive & -alive
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & alive & ~seen
        seen |= new
        frontier |= new
    return seen == alive


def is_k_connected(adj, n, k):
    """Every removal of fewer than ``k`` vertices leaves a connected graph."""
    full = (1 << n) - 1
    if not connected(adj, full):
        return False
    for size in range(1, min(k - 1, n) + 1):
        for cut in combinations(range(n), size):
            mask = full
            for v in cut:
                mask &= ~(1 << v)
            if not connected(adj, mask):
                return False
    return True


def forest_rank(n, us, vs):
    """Number of edges in a spanning forest of the given edge list."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    r = 0
    for a, b in zip(us, vs):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            r += 1
    return r
