"""Minor containment with replayable certificates, and the splitter step."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from fanforge.errors import (
    IdenticalMinorError,
    PreconditionError,
    TheoremViolation,
    WheelInputError,
)
from fanforge.graph import (
    Multigraph,
    contract_edge,
    delete_edge,
    delete_edges,
    delete_vertices,
    is_3_connected,
    is_wheel,
    make_complete,
    simplify,
)
from fanforge.iso import canonical_key, is_isomorphic, isomorphism

CONTRACT = "contract"
DELETE_EDGE = "delete-edge"
DELETE_VERTEX = "delete-vertex"


@dataclass(frozen=True)
class MinorCertificate:
    """Steps taking ``g`` to a copy of ``h`` plus the final vertex bijection."""

    steps: tuple
    mapping: dict = field(hash=False)

    def replay(self, g: Multigraph) -> Multigraph:
        for op, ident in self.steps:
            if op == CONTRACT:
                g = contract_edge(g, ident)
            elif op == DELETE_EDGE:
                g = delete_edge(g, ident)
            elif op == DELETE_VERTEX:
                g = delete_vertices(g, [ident])
            else:
                raise ValueError(f"unknown step {op!r}")
        return g

    def verify(self, g: Multigraph, h: Multigraph) -> bool:
        try:
            r = self.replay(g)
        except (KeyError, ValueError):
            return False
        if set(self.mapping) != set(r.vertices) or sorted(self.mapping.values()) != sorted(h.vertices):
            return False
        got = sorted(tuple(sorted((self.mapping[a], self.mapping[b]))) for a, b in r.pairs())
        want = sorted(h.pairs())
        return got == want

    def to_json(self) -> dict:
        return {"steps": [list(s) for s in self.steps],
                "isomorphism": {str(k): v for k, v in sorted(self.mapping.items())}}

    @classmethod
    def from_json(cls, data) -> "MinorCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((op, int(i)) for op, i in data["steps"]),
                   {int(k): int(v) for k, v in data["isomorphism"].items()})


K1 = make_complete(1)

# (canonical key of reduced g, canonical key of h) -> bool; shared by all searches
_cache: dict = {}
_CACHE_LIMIT = 500_000


def clear_cache():
    _cache.clear()


def _min_degree(h: Multigraph) -> int:
    return min((h.degree(v) for v in h.vertices), default=0)


def _reduce(g: Multigraph, dmin: int, steps: list) -> Multigraph:
    """Strip structure that can never help to reach a simple minor of min degree ``dmin``."""
    while True:
        if not g.is_simple():
            keep = set(simplify(g).edge_ids)
            drop = [e for e in g.edge_ids if e not in keep]
            steps.extend((DELETE_EDGE, e) for e in drop)
            g = delete_edges(g, drop)
        if dmin >= 1:
            lone = [v for v in g.vertices if not g.incident(v)]
            if lone:
                steps.extend((DELETE_VERTEX, v) for v in lone)
                g = delete_vertices(g, lone)
                continue
        if dmin >= 2:
            pend = [v for v in g.vertices if g.degree(v) == 1]
            if pend:
                drop_e = sorted({g.incident(v)[0] for v in pend})
                steps.extend((DELETE_EDGE, e) for e in drop_e)
                g = delete_edges(g, drop_e)
                continue
        if dmin >= 3:
            v = next((v for v in g.vertices if g.degree(v) == 2), None)
            if v is not None:
                e = min(g.incident(v))
                steps.append((CONTRACT, e))
                g = contract_edge(g, e)
                continue
        return g


def _spanning_embedding(g: Multigraph, h: Multigraph):
    """Injective ``h -> g`` vertex map carrying edges to edges, both simple, same order."""
    gv, gidx = g.index()
    gadj = g.adjacency_masks()
    gdeg = [bin(m).count("1") for m in gadj]
    hv, hidx = h.index()
    hadj = h.adjacency_masks()
    hdeg = [bin(m).count("1") for m in hadj]
    n = len(hv)
    if any(a < b for a, b in zip(sorted(gdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    order = []
    placed = 0
    while len(order) < n:
        best = max((v for v in range(n) if not placed >> v & 1),
                   key=lambda v: (bin(hadj[v] & placed).count("1"), hdeg[v], -v))
        order.append(best)
        placed |= 1 << best
    image = [-1] * n
    full = (1 << n) - 1

    def go(k, used):
        if k == n:
            return True
        v = order[k]
        cand = full & ~used
        m = hadj[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if image[w] >= 0:
                cand &= gadj[image[w]]
            m ^= low
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            if gdeg[c] < hdeg[v]:
                continue
            image[v] = c
            if go(k + 1, used | low):
                return True
            image[v] = -1
        return False

    if not go(0, 0):
        return None
    return {hv[v]: gv[image[v]] for v in range(n)}


class _Search:
    def __init__(self, h: Multigraph, want_steps: bool):
        self.h = h
        self.hkey = canonical_key(h)
        self.n = h.order
        self.m = h.size
        self.dmin = _min_degree(h)
        self.want = want_steps
        self.failed = set()

    def finish(self, g: Multigraph):
        emb = _spanning_embedding(g, self.h)
        if emb is None:
            return None
        hit = set()
        inv = {gv: hv for hv, gv in emb.items()}
        hedges = {tuple(sorted(p)) for p in self.h.pairs()}
        steps = []
        for e, (a, b) in g.edge_items():
            if tuple(sorted((inv[a], inv[b]))) in hedges and (a, b) not in hit:
                hit.add((a, b))
            else:
                steps.append((DELETE_EDGE, e))
        return steps, inv

    def run(self, g: Multigraph):
        """Returns ``(steps, mapping)`` or ``None``; ``g`` is already reduced."""
        n, m = g.order, g.size
        if n < self.n or m < self.m:
            return None
        if self.dmin >= 2 and m - self.m < n - self.n:
            return None
        key = canonical_key(g)
        if key in self.failed:
            return None
        ck = (key, self.hkey)
        known = _cache.get(ck)
        if known is False:
            return None
        if known and not self.want:
            return [], {}
        if n == self.n:
            res = self.finish(g)
        else:
            res = self._branch(g)
        if res is None:
            self.failed.add(key)
        if len(_cache) > _CACHE_LIMIT:
            _cache.clear()
        _cache[ck] = res is not None
        return res

    def _children(self, g):
        for e in g.edge_ids:
            yield DELETE_EDGE, e
        for e in g.edge_ids:
            yield CONTRACT, e
        if self.dmin == 0:
            for v in g.vertices:
                if not g.incident(v):
                    yield DELETE_VERTEX, v

    def _branch(self, g):
        for op, ident in self._children(g):
            steps = [(op, ident)]
            if op == DELETE_EDGE:
                child = delete_edge(g, ident)
            elif op == CONTRACT:
                child = contract_edge(g, ident)
            else:
                child = delete_vertices(g, [ident])
            child = _reduce(child, self.dmin, steps)
            res = self.run(child)
            if res is not None:
                return steps + res[0], res[1]
        return None


def _small_minor(g: Multigraph, h: Multigraph):
    """Direct answers for K1, K2 and K3; ``NotImplemented`` for anything else."""
    n = h.order
    if not (h.is_simple() and 1 <= n <= 3 and h.size == n * (n - 1) // 2):
        return NotImplemented
    hv = h.vertices
    if n == 1:
        if g.order == 0:
            return None
        keep = [g.vertices[0]]
    elif n == 2:
        e = next((e for e in g.edge_ids if not g.is_loop(e)), None)
        if e is None:
            return None
        keep_edges = [e]
    else:
        cyc = _shortest_cycle(simplify(g))
        if cyc is None:
            return None
        keep_edges = cyc
    steps = []
    if n == 1:
        steps += [(DELETE_EDGE, e) for e in g.edge_ids]
        steps += [(DELETE_VERTEX, v) for v in g.vertices if v != keep[0]]
        return steps, {keep[0]: hv[0]}
    ks = set(keep_edges)
    steps += [(DELETE_EDGE, e) for e in g.edge_ids if e not in ks]
    on = {v for e in keep_edges for v in g.ends(e)}
    steps += [(DELETE_VERTEX, v) for v in g.vertices if v not in on]
    r = delete_vertices(delete_edges(g, [e for e in g.edge_ids if e not in ks]),
                        [v for v in g.vertices if v not in on])
    for e in sorted(keep_edges)[n:]:
        steps.append((CONTRACT, e))
        r = contract_edge(r, e)
    return steps, dict(zip(r.vertices, hv))


def _shortest_cycle(g: Multigraph):
    """Edge ids of a shortest cycle of a simple graph, or ``None``."""
    best = None
    for e in g.edge_ids:
        a, b = g.ends(e)
        # shortest a-b path avoiding e
        prev = {a: None}
        frontier = [a]
        while frontier and b not in prev:
            nxt = []
            for v in frontier:
                for f in g.incident(v):
                    if f == e:
                        continue
                    w = g.other_end(f, v)
                    if w not in prev:
                        prev[w] = f
                        nxt.append(w)
            frontier = nxt
        if b in prev:
            path = [e]
            v = b
            while v != a:
                f = prev[v]
                path.append(f)
                v = g.other_end(f, v)
            if best is None or len(path) < len(best):
                best = path
    return best


def _solve(g: Multigraph, h: Multigraph, want_steps: bool):
    small = _small_minor(g, h)
    if small is not NotImplemented:
        return small
    if not h.is_simple():
        raise PreconditionError("the target minor must be simple")
    search = _Search(h, want_steps)
    steps = []
    r = _reduce(g, search.dmin, steps)
    res = search.run(r)
    if res is None:
        return None
    return steps + res[0], res[1]


def has_minor(g: Multigraph, h: Multigraph):
    """A :class:`MinorCertificate` witnessing ``h`` as a minor of ``g``, else ``None``."""
    res = _solve(g, h, True)
    if res is None:
        return None
    steps, inv = res
    return MinorCertificate(tuple(steps), inv)


def contains_minor(g: Multigraph, h: Multigraph) -> bool:
    key = ("minor", canonical_key(h))
    hit = g._cache.get(key)
    if hit is None:
        hit = g._cache[key] = _solve(g, h, False) is not None
    return hit


def splitter_edge(g: Multigraph, h: Multigraph):
    """First edge (by id) whose contraction, else deletion, stays simple,
    3-connected and keeps an ``h``-minor.  Returns ``(edge, mode)``."""
    if not g.is_simple() or g.order < 4 or not is_3_connected(g):
        raise PreconditionError("splitter step needs a simple 3-connected graph on at least 4 vertices")
    if is_wheel(g):
        raise WheelInputError("wheels have no splitter edge")
    if is_isomorphic(g, h):
        raise IdenticalMinorError("g is isomorphic to h")
    if not contains_minor(g, h):
        raise PreconditionError("h is not a minor of g")
    for e in g.edge_ids:
        c = contract_edge(g, e)
        if c.is_simple() and is_3_connected(c) and contains_minor(c, h):
            return e, CONTRACT
        d = delete_edge(g, e)
        if is_3_connected(d) and contains_minor(d, h):
            return e, "delete"
    raise TheoremViolation("no splitter edge found in a non-wheel 3-connected graph")


def apply_step(g: Multigraph, e: int, mode: str) -> Multigraph:
    return contract_edge(g, e) if mode == CONTRACT else delete_edge(g, e)


__all__ = [
    "MinorCertificate", "has_minor", "contains_minor", "splitter_edge",
    "apply_step", "isomorphism", "K1", "clear_cache",
]
