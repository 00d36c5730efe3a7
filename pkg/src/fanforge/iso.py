"""Canonical labelling and isomorphism for small multigraphs.

Colour refinement on an ordered partition, then individualisation with
branching over one vertex per twin class.  The certificate of a leaf is the
upper triangle (diagonal included, so loops count) of the multiplicity matrix
read in leaf order; the canonical form is the least certificate.
"""
from __future__ import annotations

from fanforge.graph import Multigraph


def _matrix(g: Multigraph):
    verts, idx = g.index()
    n = len(verts)
    M = [[0] * n for _ in range(n)]
    for a, b in g.pairs():
        i, j = idx[a], idx[b]
        if i == j:
            M[i][i] += 1
        else:
            M[i][j] += 1
            M[j][i] += 1
    nbrs = [[w for w in range(n) if w != v and M[v][w]] for v in range(n)]
    return M, nbrs


def _refine(cells, M, nbrs, n):
    while True:
        cell_of = [0] * n
        for ci, c in enumerate(cells):
            for v in c:
                cell_of[v] = ci
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keyed = {}
            for v in c:
                row = M[v]
                k = tuple(sorted([(cell_of[w], row[w]) for w in nbrs[v]]))
                keyed.setdefault(k, []).append(v)
            if len(keyed) == 1:
                out.append(c)
                continue
            changed = True
            for k in sorted(keyed):
                out.append(keyed[k])
        cells = out
        if not changed:
            return cells


def _twins(M, u, v, n):
    if M[u][u] != M[v][v]:
        return False
    ru, rv = M[u], M[v]
    for w in range(n):
        if w != u and w != v and ru[w] != rv[w]:
            return False
    return True


def _canon(g: Multigraph):
    M, nbrs = _matrix(g)
    n = len(M)
    if n == 0:
        return (), []
    start = {}
    for v in range(n):
        start.setdefault((M[v][v], sum(M[v]) + M[v][v], len(nbrs[v])), []).append(v)
    cells = [start[k] for k in sorted(start)]
    best = [None, None]

    def leaf(cells):
        p = [c[0] for c in cells]
        cert = tuple(M[p[i]][p[j]] for i in range(n) for j in range(i, n))
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = p

    def search(cells):
        cells = _refine(cells, M, nbrs, n)
        if len(cells) == n:
            leaf(cells)
            return
        ti = min((len(c), i) for i, c in enumerate(cells) if len(c) > 1)[1]
        target = cells[ti]
        reps = []
        for v in target:
            if not any(_twins(M, r, v, n) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in target if w != v]
            search(cells[:ti] + [[v], rest] + cells[ti + 1:])

    search(cells)
    return best[0], best[1]


def canonical_key(g: Multigraph) -> tuple:
    """Hashable canonical form; equal iff the multigraphs are isomorphic."""
    return g.cached("canon", lambda: _canonical_entry(g))[0]


def canonical_labelling(g: Multigraph) -> list:
    """Vertices of ``g`` listed in canonical order."""
    return g.cached("canon", lambda: _canonical_entry(g))[1]


def _canonical_entry(g):
    cert, order = _canon(g)
    verts = g.vertices
    return (g.order, cert), [verts[i] for i in order or []]


def canonical_form(g: Multigraph) -> str:
    n, cert = canonical_key(g)
    return f"{n}:" + ".".join(map(str, cert))


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    return canonical_key(g) == canonical_key(h)


def isomorphism(g: Multigraph, h: Multigraph):
    """A vertex map ``g -> h`` preserving edge multiplicities, or ``None``."""
    if not is_isomorphic(g, h):
        return None
    return dict(zip(canonical_labelling(g), canonical_labelling(h)))


def edge_isomorphism(g: Multigraph, h: Multigraph, vmap: dict) -> dict:
    """Extend a vertex isomorphism to edges, pairing parallels by id order."""
    pool = {}
    for f, (a, b) in h.edge_items():
        pool.setdefault((a, b), []).append(f)
    out = {}
    for e, (a, b) in g.edge_items():
        x, y = vmap[a], vmap[b]
        out[e] = pool[(x, y) if x <= y else (y, x)].pop(0)
    return out
