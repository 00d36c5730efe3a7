"""Graph pairs (G, H) on which the forest bounds are tight.

``j1``/``j2`` glue a ladder of cubic triangles onto a large clique through
its pendant vertices; ``trianglefree`` joins two hypercubes by a matching.
Every generator runs structural self-checks and refuses to emit on mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from fanforge.errors import PreconditionError, SelfCheckError
from fanforge.fans import find_triangles
from fanforge.graph import (
    Multigraph,
    contract_edge,
    contract_edges,
    is_3_connected,
    is_k_connected,
    make_hypercube,
    simplify,
)
from fanforge.iso import is_isomorphic


@dataclass
class SharpPair:
    kind: str
    params: dict
    g: Multigraph
    h: Multigraph
    contracted: frozenset          # B for the ladders, Z for the hypercube pair
    pendant: frozenset = frozenset()
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        from fanforge.graph6 import encode_graph6
        return {"kind": self.kind, "params": dict(self.params),
                "g": encode_graph6(self.g), "h": encode_graph6(self.h),
                "g_order": self.g.order, "g_size": self.g.size,
                "h_order": self.h.order, "h_size": self.h.size,
                "contracted": sorted(self.contracted), "checks": dict(self.checks)}


def _ladder(n: int, closed: bool):
    """The gadget J as ``(pairs, leaves, order)``: vertices ``0 .. order-1``,
    leaves listed separately so they can be glued."""
    units = n if closed else n - 2
    pairs = []
    nxt = [0]

    def new():
        nxt[0] += 1
        return nxt[0] - 1

    top = [new() for _ in range(2 * units)]
    leaves = []
    hangers = []
    for k in range(units):
        a, b = top[2 * k], top[2 * k + 1]
        u, x = new(), new()
        pairs += [(a, b), (a, u), (b, u), (u, x)]
        hangers.append(x)
    for k in range(units - 1):
        pairs.append((top[2 * k + 1], top[2 * k + 2]))
    if closed:
        pairs.append((top[-1], top[0]))
    else:
        left, right = new(), new()
        hangers = [left] + hangers + [right]
        if units:
            pairs += [(left, top[0]), (top[-1], right)]
        else:
            pairs.append((left, right))
    for x in hangers:
        for _ in range(2):
            w = new()
            leaves.append(w)
            pairs.append((x, w))
    return pairs, leaves, nxt[0]


def _glue(pairs, leaves, order, m):
    """Identify the leaves with clique vertices ``0 .. 2n-1`` of ``K_m``."""
    rest = [v for v in range(order) if v not in set(leaves)]
    where = {w: i for i, w in enumerate(leaves)}
    where.update({v: m + i for i, v in enumerate(rest)})
    out = [(where[a], where[b]) for a, b in pairs]
    gadget = len(out)
    out += list(combinations(range(m), 2))
    g = Multigraph.from_pairs(out, vertices=range(m + len(rest)))
    return g, list(range(gadget))


def _side_condition(g, h, clique_edges) -> bool:
    return all(simplify(contract_edge(g, e)).size < h.size for e in clique_edges)


def ladder_pair(kind: str, n: int, m=None) -> SharpPair:
    if kind not in ("j1", "j2"):
        raise PreconditionError(f"unknown ladder kind {kind!r}")
    closed = kind == "j2"
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if m is not None and m < 2 * n + 1:
        raise PreconditionError("m must be at least 2n+1")
    pairs, leaves, order = _ladder(n, closed)
    if len(leaves) != 2 * n:
        raise SelfCheckError(f"gadget has {len(leaves)} pendant vertices, expected {2 * n}")
    search = m is None
    m = 2 * n + 1 if m is None else m
    while True:
        g, gadget = _glue(pairs, leaves, order, m)
        deg = {}
        for a, b in pairs:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        pend = frozenset(i for i, (a, b) in enumerate(pairs) if deg[a] == 1 or deg[b] == 1)
        B = frozenset(gadget) - pend
        h = simplify(contract_edges(g, B))
        clique = [e for e in g.edge_ids if e not in set(gadget)]
        ok = _side_condition(g, h, clique)
        if ok or not search:
            break
        m += 1
    inner = {v for e in B for v in g.ends(e)}
    want = 4 * n if closed else 4 * n - 6
    checks = {"b_vertices": len(inner), "b_vertices_expected": want,
              "pendant_edges": len(pend), "side_condition": ok,
              "g_3_connected": is_3_connected(g)}
    if len(inner) != want:
        raise SelfCheckError(f"|G[B]| = {len(inner)}, expected {want}")
    if len(pend) != 2 * n:
        raise SelfCheckError(f"{len(pend)} pendant-incident edges, expected {2 * n}")
    if not checks["g_3_connected"]:
        raise SelfCheckError("glued graph is not 3-connected")
    if not is_k_connected(h, 2 * n):
        raise SelfCheckError(f"G/B is not {2 * n}-connected")
    if search is False and not ok:
        checks["note"] = "side condition fails for this m"
    return SharpPair(kind, {"n": n, "m": m}, g, h, B, pend, checks)


def trianglefree_pair(k: int = 2) -> SharpPair:
    """Two copies of ``Q_(k+1)`` joined by a matching ``Z`` on stable k-sets."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    q = make_hypercube(k + 1)
    nq = q.order
    # vertices of weight 2 containing bit 0 are pairwise non-adjacent
    stable = [1 | (1 << j) for j in range(1, k + 1)] if k > 1 else [0]
    for a, b in combinations(stable, 2):
        if q.edges_between(a, b):
            raise SelfCheckError("chosen set is not stable")
    pairs = list(q.pairs()) + [(a + nq, b + nq) for a, b in q.pairs()]
    first = len(pairs)
    pairs += [(v, v + nq) for v in stable]
    g = Multigraph.from_pairs(pairs, vertices=range(2 * nq))
    Z = frozenset(range(first, len(pairs)))
    h = contract_edges(g, Z)
    checks = {"copies_k_plus_1_connected": is_k_connected(q, k + 1),
              "stable_set_size": len(stable), "h_simple": h.is_simple(),
              "triangle_free": not find_triangles(g)}
    if not checks["copies_k_plus_1_connected"] or not checks["triangle_free"]:
        raise SelfCheckError("base graph is not a (k+1)-connected triangle-free graph")
    return SharpPair("trianglefree", {"k": k}, g, h, Z, frozenset(), checks)


def unique_contraction_sets(pair: SharpPair, size=None) -> list:
    """Every edge set of the given size whose contraction is isomorphic to H."""
    size = len(pair.contracted) if size is None else size
    return [frozenset(c) for c in combinations(pair.g.edge_ids, size)
            if is_isomorphic(contract_edges(pair.g, c), pair.h)]


def generate(kind: str, n=None, m=None, k=None) -> SharpPair:
    if kind in ("j1", "j2"):
        return ladder_pair(kind, 3 if n is None else n, m)
    if kind == "trianglefree":
        return trianglefree_pair(2 if k is None else k)
    raise PreconditionError(f"unknown kind {kind!r}")
