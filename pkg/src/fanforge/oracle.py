"""Brute-force ground truth on small graphs.

Everything here is exhaustive and independent of the lifting constructions;
it exists to check them.  Inputs above the size guard are refused.
"""
from __future__ import annotations

import os

from fanforge.errors import SizeGuardError, TheoremViolation
from fanforge.families import FanFamily, h_contractible_edges
from fanforge.fans import find_triangles, inner_fans
from fanforge.graph import Multigraph, rank

DEFAULT_GUARD = (9, 20)


def size_guard() -> tuple:
    raw = os.environ.get("FANFORGE_SIZE_GUARD")
    if not raw:
        return DEFAULT_GUARD
    parts = [int(p) for p in raw.replace("x", ",").split(",") if p.strip()]
    if len(parts) == 1:
        return parts[0], max(DEFAULT_GUARD[1], parts[0] * (parts[0] - 1) // 2)
    return parts[0], parts[1]


def check_guard(g: Multigraph, guard=None):
    nv, ne = guard or size_guard()
    if g.order > nv or g.size > ne:
        raise SizeGuardError(f"graph with {g.order} vertices and {g.size} edges exceeds the "
                             f"oracle guard of {nv} vertices / {ne} edges")


def candidate_members(g: Multigraph, h: Multigraph) -> list:
    """All legal family members: h-inner fans and h-contractible singletons."""
    cands = {frozenset((e,)) for e in h_contractible_edges(g, h)}
    cands.update(f.edges for f in inner_fans(g, h))
    return sorted(cands, key=lambda s: (-len(s), sorted(s)))


class _Forest:
    """Union-find over vertex ids with undo, for incremental freeness tests."""

    def __init__(self):
        self.parent = {}
        self.log = []

    def find(self, v):
        while self.parent.get(v, v) != v:
            v = self.parent[v]
        return v

    def try_add(self, verts) -> bool:
        roots = [self.find(v) for v in verts]
        if len(set(roots)) != len(roots):
            return False
        head = roots[0]
        for r in roots[1:]:
            self.parent[r] = head
            self.log.append(r)
        self.log.append(None)
        return True

    def undo(self):
        self.log.pop()
        while self.log and self.log[-1] is not None:
            r = self.log.pop()
            del self.parent[r]


def oracle_max_free_family_rank(g: Multigraph, h: Multigraph, guard=None, target=None):
    """``(rank, witness)``: the largest rank of a free h-fan family of ``g``."""
    check_guard(g, guard)
    cands = candidate_members(g, h)
    verts = [sorted({v for e in c for v in g.ends(e)}) for c in cands]
    ranks = [len(v) - 1 for v in verts]
    cap = g.order - 1 if target is None else min(g.order - 1, target)
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ranks[i]
    best = [-1, []]
    forest = _Forest()
    chosen = []
    used = set()

    def go(i, r):
        if r > best[0]:
            best[0], best[1] = r, list(chosen)
        if best[0] >= cap or i == len(cands) or r + suffix[i] <= best[0]:
            return
        c = cands[i]
        if not (c & used) and forest.try_add(verts[i]):
            chosen.append(c)
            used.update(c)
            go(i + 1, r + ranks[i])
            used.difference_update(c)
            chosen.pop()
            forest.undo()
            if best[0] >= cap:
                return
        go(i + 1, r)

    go(0, 0)
    return best[0], FanFamily.build(g, h, best[1])


def oracle_max_rank_sum(g: Multigraph, h: Multigraph, guard=None, target=None):
    """``(rank-sum, witness)`` over h-fan families without crossing triangles."""
    check_guard(g, guard)
    cands = candidate_members(g, h)
    ranks = [rank(g, c) for c in cands]
    tris = [frozenset(t) for t in find_triangles(g)]
    by_edge = {}
    for t in tris:
        for e in t:
            by_edge.setdefault(e, []).append(t)
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ranks[i]
    best = [-1, []]
    chosen = []
    used = set()

    def crossing(c):
        for e in c:
            for t in by_edge.get(e, ()):
                if t <= used | c and not t <= c:
                    return True
        return False

    def go(i, r):
        if r > best[0]:
            best[0], best[1] = r, list(chosen)
        if (target is not None and best[0] >= target) or i == len(cands) or r + suffix[i] <= best[0]:
            return
        c = cands[i]
        if not (c & used) and not crossing(c):
            chosen.append(c)
            used.update(c)
            go(i + 1, r + ranks[i])
            used.difference_update(c)
            chosen.pop()
        go(i + 1, r)

    go(0, 0)
    return best[0], FanFamily.build(g, h, best[1])


def oracle_max_contractible_forest(g: Multigraph, h: Multigraph, guard=None):
    """``(size, edges)``: a largest forest of h-contractible edges.

    The h-contractible edges form a restriction of the cycle matroid, so the
    greedy scan in id order is exact.
    """
    check_guard(g, guard)
    forest = _Forest()
    out = []
    for e in sorted(h_contractible_edges(g, h)):
        if forest.try_add(g.ends(e)):
            out.append(e)
    return len(out), frozenset(out)


def oracle_base_case_family(g: Multigraph, h: Multigraph, bound: int, mode="free", guard=None) -> FanFamily:
    """A family meeting ``bound`` (rank when ``mode='free'``, rank-sum for ``'sum'``)."""
    if mode == "free":
        val, fam = oracle_max_free_family_rank(g, h, guard, target=bound)
    else:
        val, fam = oracle_max_rank_sum(g, h, guard, target=bound)
    if val < bound:
        raise TheoremViolation(f"best {mode} family reaches {val}, below the bound {bound}")
    return fam


def _nx_graph(g: Multigraph, edges=None):
    import networkx as nx
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    for e in (g.edge_ids if edges is None else edges):
        a, b = g.ends(e)
        if a != b:
            out.add_edge(a, b)
    return out


def _nx_3_connected(g: Multigraph) -> bool:
    import networkx as nx
    if g.order <= 3:
        return g.order <= 1 or nx.is_connected(_nx_graph(g))
    return nx.node_connectivity(_nx_graph(g)) >= 3


def _nx_rank(g: Multigraph, edges) -> int:
    import networkx as nx
    sub = _nx_graph(g, edges)
    sub.remove_nodes_from([v for v in list(sub.nodes) if sub.degree(v) == 0])
    return sub.number_of_nodes() - nx.number_connected_components(sub)


def oracle_check_family(g: Multigraph, h: Multigraph, fam) -> list:
    """Recheck a family with networkx connectivity and rank; returns problems found."""
    from fanforge.fans import is_inner_part
    from fanforge.graph import contract_edges
    from fanforge.minors import contains_minor
    problems = []
    seen = set()
    for m in fam.members:
        if seen & m:
            problems.append(f"member {sorted(m)} overlaps another")
        seen |= m
        q = contract_edges(g, m)
        if not _nx_3_connected(q):
            problems.append(f"g/{sorted(m)} is not 3-connected")
        elif not contains_minor(q, h):
            problems.append(f"g/{sorted(m)} has no h-minor")
        if len(m) > 1 and not is_inner_part(g, m):
            problems.append(f"{sorted(m)} is not the inner part of a maximal fan")
    total = _nx_rank(g, seen)
    parts = sum(_nx_rank(g, m) for m in fam.members)
    if total != parts:
        problems.append(f"not free: rank {total} vs rank-sum {parts}")
    return problems
