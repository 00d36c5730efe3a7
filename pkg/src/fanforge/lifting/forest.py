"""Forests of h-contractible edges from a free fan family, and the spanning
fan decomposition."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from fanforge.errors import PreconditionError, TheoremViolation
from fanforge.families import FanFamily, h_contractible_edges, validate_family
from fanforge.fans import enclosing_fans, is_h_inner_fan
from fanforge.graph import edge_subgraph, is_forest, make_complete, make_prism
from fanforge.iso import is_isomorphic
from fanforge.minors import K1
from fanforge.oracle import oracle_max_contractible_forest

log = logging.getLogger(__name__)

_K4 = make_complete(4)
_PRISM = make_prism()


@dataclass
class ForestReport:
    edges: frozenset
    target: int
    family: FanFamily = None
    parts: dict = field(default_factory=dict)
    rewrites: list = field(default_factory=list)
    route: str = "construction"

    def to_json(self) -> dict:
        return {"edges": sorted(self.edges), "target": self.target, "route": self.route,
                "parts": {k: sorted(v) for k, v in self.parts.items()},
                "rewrites": list(self.rewrites)}


def _cubic_triangle(g, m) -> bool:
    if len(m) != 3:
        return False
    verts = {v for e in m for v in g.ends(e)}
    return len(verts) == 3 and all(g.degree(v) == 3 for v in verts)


def _outer_edges(g, m):
    verts = {v for e in m for v in g.ends(e)}
    return sorted({f for v in verts for f in g.incident(v)} - set(m))


def _acceptable(g, h, members, r):
    fam = FanFamily.build(g, h, members)
    rep = validate_family(fam)
    return fam if rep.is_h_fan_family and rep.is_free and rep.rank >= r else None


def _singletons(fam):
    return sum(1 for m in fam.members if len(m) == 1)


def _rewrites(g, h, fam):
    """Candidate families with more singletons, in a fixed order."""
    hc = h_contractible_edges(g, h)
    union = fam.union
    single = {next(iter(m)) for m in fam.members if len(m) == 1}
    for e in sorted(hc - union):
        yield f"add {e}", list(fam.members) + [frozenset((e,))]
    for m in fam.members:
        if len(m) == 1:
            continue
        rest = [k for k in fam.members if k != m]
        if _cubic_triangle(g, m):
            outer = _outer_edges(g, m)
            new = [e for e in outer if e not in single]
            if len(outer) - len(new) < 2:
                yield f"split triangle {sorted(m)}", rest + [frozenset((e,)) for e in new]
            continue
        for f in enclosing_fans(g, m):
            o = f.ordering
            if o[0] in single or o[-1] in single:
                continue
            rims = list(o[2::2])
            for side in (rims, list(o[0:-1:2])):
                yield f"fan {sorted(m)} to rim {side}", rest + [frozenset((e,)) for e in side]


def maximize_singletons(g, h, fam: FanFamily, r: int, log_to=None) -> FanFamily:
    """Rewrite ``fam`` until no local move raises its number of singletons
    while keeping it a free h-fan family of rank at least ``r``."""
    changed = True
    while changed:
        changed = False
        have = _singletons(fam)
        for label, members in _rewrites(g, h, fam):
            if len({e for m in members for e in m}) != sum(len(m) for m in members):
                continue
            new = _acceptable(g, h, members, r)
            if new is not None and _singletons(new) > have:
                fam = new
                if log_to is not None:
                    log_to.append(label)
                changed = True
                break
    return fam


def forest_parts(g, fam: FanFamily) -> dict:
    """The A / B / C split of a family and the derived edge sets R and W."""
    A = [m for m in fam.members if len(m) == 1]
    B = [m for m in fam.members if _cubic_triangle(g, m)]
    C = [m for m in fam.members if len(m) > 1 and m not in B]
    R = set()
    for m in C:
        enc = enclosing_fans(g, m)
        if not enc:
            raise TheoremViolation(f"member {sorted(m)} is not an inner fan")
        R.update(enc[0].ordering[2:-2:2])
    Bu = frozenset().union(*B) if B else frozenset()
    union = fam.union
    W = {e for m in B for e in _outer_edges(g, m)} - union
    return {"A": frozenset(e for m in A for e in m), "B": Bu, "R": frozenset(R), "W": frozenset(W),
            "C": frozenset().union(*C) if C else frozenset()}


def _good(g, h, edges, target) -> bool:
    hc = h_contractible_edges(g, h)
    return len(edges) >= target and edges <= hc and is_forest(g, edges)


def extract_forest_report(g, h, fam: FanFamily, r=None, guard=None) -> ForestReport:
    rep = validate_family(fam)
    if not rep.is_h_fan_family or not rep.is_free:
        raise PreconditionError("the family must be a free h-fan family")
    r = rep.rank if r is None else r
    if r < 1 or rep.rank < r:
        raise PreconditionError(f"need 1 <= r <= rank ({rep.rank}), got {r}")
    target = (r + 2) // 2
    out = ForestReport(frozenset(), target)
    if is_isomorphic(g, _K4) or is_isomorphic(g, _PRISM):
        _, edges = oracle_max_contractible_forest(g, h, guard)
        out.edges, out.route = edges, "small-case"
    else:
        fam = maximize_singletons(g, h, fam, r, out.rewrites)
        parts = forest_parts(g, fam)
        out.family, out.parts = fam, parts
        out.edges = parts["A"] | parts["R"] | parts["W"]
    if _good(g, h, out.edges, target):
        return out
    # the construction fell short: say so, then search directly
    log.warning("forest construction gave %d edges (target %d); falling back to search",
                len(out.edges), target)
    _, edges = oracle_max_contractible_forest(g, h, guard)
    out.edges, out.route = edges, "fallback"
    if not _good(g, h, edges, target):
        raise TheoremViolation(f"no forest of {target} h-contractible edges")
    return out


def extract_forest(g, h, fam: FanFamily, r=None, guard=None) -> frozenset:
    """At least ``ceil((r + 1) / 2)`` h-contractible edges of ``g`` forming a forest."""
    return extract_forest_report(g, h, fam, r, guard).edges


def spanning_fan_decomposition(g, fam=None):
    """A spanning subgraph whose blocks are inner fans or contractible edges.

    Returns ``(subgraph, blocks)``.
    """
    if fam is None:
        from fanforge.lifting.induction import build_fan_family
        fam = build_fan_family(g, K1)
    union = fam.union
    sub = edge_subgraph(g, union)
    if set(sub.vertices) != set(g.vertices) and g.order > 1:
        raise TheoremViolation("family does not span the graph")
    nxg = nx.MultiGraph()
    nxg.add_nodes_from(g.vertices)
    for e in union:
        a, b = g.ends(e)
        nxg.add_edge(a, b, key=e)
    if g.order > 1 and not nx.is_connected(nxg):
        raise TheoremViolation("decomposition is not connected")
    hc = h_contractible_edges(g, K1)
    blocks = []
    for comp in nx.biconnected_component_edges(nxg):
        block = frozenset(e for a, b in comp for e in g.edges_between(a, b) if e in union)
        ok = (len(block) == 1 and block <= hc) or (len(block) > 1 and is_h_inner_fan(g, K1, block))
        if not ok:
            raise TheoremViolation(f"block {sorted(block)} is neither an inner fan nor a contractible edge")
        blocks.append(block)
    return sub, sorted(blocks, key=sorted)
