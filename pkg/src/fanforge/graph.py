"""Labelled multigraphs and the minor operations on them.

Vertices are integers.  Edge identifiers are integers that survive every
contraction and deletion, so an edge set chosen in a minor still names the
same edges in the graph it came from.  Values are immutable; operations
return new graphs.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from fanforge import kernels
from fanforge.errors import (
    LoopContractionError,
    PreconditionError,
    UnknownEdgeError,
    UnknownVertexError,
)


class Multigraph:
    """Multigraph with stable edge ids and a record of contracted vertices.

    ``history[v]`` is the set of original vertices merged into ``v``.
    """

    __slots__ = ("_vertices", "_vset", "_edges", "_history", "_cache", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Mapping[int, tuple] | None = None,
                 history: Mapping[int, frozenset] | None = None):
        verts = tuple(sorted(set(vertices)))
        vset = frozenset(verts)
        eds = {}
        for eid in sorted(edges or {}):
            u, v = edges[eid]
            if u not in vset or v not in vset:
                raise UnknownVertexError(f"edge {eid} has endpoint outside the vertex set")
            eds[eid] = (u, v) if u <= v else (v, u)
        if history is None:
            hist = {v: frozenset((v,)) for v in verts}
        else:
            hist = {v: frozenset(history[v]) for v in verts}
        self._vertices = verts
        self._vset = vset
        self._edges = eds
        self._history = hist
        self._cache = {}
        self._hash = None

    # construction helpers

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], vertices: Iterable[int] | None = None,
                   first_id: int = 0) -> "Multigraph":
        pairs = list(pairs)
        if vertices is None:
            vertices = {x for p in pairs for x in p}
        return cls(vertices, {first_id + i: p for i, p in enumerate(pairs)})

    # basic accessors

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edge_ids(self) -> tuple:
        ids = self._cache.get("ids")
        if ids is None:
            ids = self._cache["ids"] = tuple(self._edges)
        return ids

    @property
    def history(self) -> dict:
        return dict(self._history)

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    def ends(self, e: int) -> tuple:
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownEdgeError(e) from None

    def edge_items(self):
        return self._edges.items()

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    def has_vertex(self, v: int) -> bool:
        return v in self._vset

    def pairs(self) -> list:
        return list(self._edges.values())

    def _incidence(self) -> dict:
        inc = self._cache.get("inc")
        if inc is None:
            inc = {v: [] for v in self._vertices}
            for e, (u, v) in self._edges.items():
                inc[u].append(e)
                if v != u:
                    inc[v].append(e)
            inc = {v: tuple(es) for v, es in inc.items()}
            self._cache["inc"] = inc
        return inc

    def incident(self, v: int) -> tuple:
        try:
            return self._incidence()[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        return b if a == v else a

    def degree(self, v: int) -> int:
        """Degree with loops counted twice."""
        d = 0
        for e in self.incident(v):
            a, b = self._edges[e]
            d += 2 if a == b else 1
        return d

    def neighbors(self, v: int) -> frozenset:
        return frozenset(self.other_end(e, v) for e in self.incident(v)) - {v}

    def edges_between(self, u: int, v: int) -> tuple:
        key = (u, v) if u <= v else (v, u)
        return tuple(e for e in self.incident(u) if self._edges[e] == key)

    def is_loop(self, e: int) -> bool:
        a, b = self.ends(e)
        return a == b

    def is_simple(self) -> bool:
        s = self._cache.get("simple")
        if s is None:
            seen = set()
            s = True
            for a, b in self._edges.values():
                if a == b or (a, b) in seen:
                    s = False
                    break
                seen.add((a, b))
            self._cache["simple"] = s
        return s

    def index(self) -> tuple:
        """``(vertices, position map)`` used by the bitmask kernels."""
        idx = self._cache.get("idx")
        if idx is None:
            idx = {v: i for i, v in enumerate(self._vertices)}
            self._cache["idx"] = idx
        return self._vertices, idx

    def adjacency_masks(self) -> list:
        masks = self._cache.get("adj")
        if masks is None:
            _, idx = self.index()
            masks = [0] * len(self._vertices)
            for a, b in self._edges.values():
                if a != b:
                    ia, ib = idx[a], idx[b]
                    masks[ia] |= 1 << ib
                    masks[ib] |= 1 << ia
            self._cache["adj"] = masks
        return masks

    def cached(self, key, compute):
        """Memoise a derived property on this (immutable) value."""
        try:
            return self._cache[key]
        except KeyError:
            val = self._cache[key] = compute()
            return val

    # value semantics

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(self._edges.items())))
        return self._hash

    def __repr__(self):
        return f"Multigraph(order={self.order}, size={self.size})"


# minor operations

def _rebuild(g: Multigraph, vertices, edges, history) -> Multigraph:
    return Multigraph(vertices, edges, history)


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    """``g/e``: merge the ends of ``e``; parallels and loops created are kept.

    The merged vertex keeps the smaller of the two labels.
    """
    u, v = g.ends(e)
    if u == v:
        raise LoopContractionError(f"edge {e} is a loop; delete it instead")
    edges = {}
    for f, (a, b) in g.edge_items():
        if f == e:
            continue
        edges[f] = (u if a == v else a, u if b == v else b)
    hist = g.history
    hist[u] = hist[u] | hist.pop(v)
    verts = [w for w in g.vertices if w != v]
    return _rebuild(g, verts, edges, hist)


def contract_edges(g: Multigraph, es: Iterable[int]) -> Multigraph:
    """``g/X``.  Members that have become loops along the way are deleted."""
    for e in sorted(es):
        if g.is_loop(e):
            g = delete_edge(g, e)
        else:
            g = contract_edge(g, e)
    return g


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    g.ends(e)
    edges = {f: p for f, p in g.edge_items() if f != e}
    return _rebuild(g, g.vertices, edges, g.history)


def delete_edges(g: Multigraph, es: Iterable[int]) -> Multigraph:
    es = set(es)
    for e in es:
        g.ends(e)
    edges = {f: p for f, p in g.edge_items() if f not in es}
    return _rebuild(g, g.vertices, edges, g.history)


def delete_vertices(g: Multigraph, vs: Iterable[int]) -> Multigraph:
    vs = set(vs)
    for v in vs:
        if not g.has_vertex(v):
            raise UnknownVertexError(v)
    edges = {f: (a, b) for f, (a, b) in g.edge_items() if a not in vs and b not in vs}
    hist = {w: h for w, h in g.history.items() if w not in vs}
    return _rebuild(g, [w for w in g.vertices if w not in vs], edges, hist)


def simplify(g: Multigraph) -> Multigraph:
    """``si(g)``: drop loops and keep the lowest id of every parallel class."""
    if g.is_simple():
        return g
    keep = {}
    for f, (a, b) in g.edge_items():
        if a != b and (a, b) not in keep:
            keep[(a, b)] = f
    edges = {f: p for p, f in keep.items()}
    return _rebuild(g, g.vertices, edges, g.history)


def cosimplify(g: Multigraph) -> Multigraph:
    """``co(g)``: strip vertices of degree < 2, then shrink series paths.

    Each maximal path whose inner vertices have degree 2 keeps its lowest
    edge id.  A component that is a bare cycle is shrunk to a triangle.
    """
    while True:
        low = [v for v in g.vertices if g.degree(v) < 2]
        if not low:
            break
        g = delete_vertices(g, low)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            inc = g.incident(v)
            if len(inc) != 2 or g.degree(v) != 2:
                continue
            if _in_short_cycle_component(g, v):
                continue
            g = contract_edge(g, max(inc))
            changed = True
            break
    return g


def _in_short_cycle_component(g: Multigraph, v: int) -> bool:
    comp = component_of(g, v)
    if any(g.degree(w) != 2 for w in comp):
        return False
    return len(comp) <= 3


# connectivity and rank

def component_of(g: Multigraph, v: int) -> set:
    seen = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for x in g.neighbors(w):
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return seen


def components(g: Multigraph) -> list:
    left = set(g.vertices)
    comps = []
    for v in g.vertices:
        if v in left:
            c = component_of(g, v)
            left -= c
            comps.append(c)
    return comps


def is_connected(g: Multigraph) -> bool:
    return is_k_connected(g, 1)


def is_k_connected(g: Multigraph, k: int) -> bool:
    """Removing any set of fewer than ``k`` vertices leaves a connected graph.

    No lower bound on the order is imposed and the empty graph counts as
    connected, so every graph on at most ``k`` vertices whose small vertex
    deletions stay connected qualifies.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    key = ("kconn", k)
    res = g._cache.get(key)
    if res is None:
        res = g._cache[key] = bool(kernels.is_k_connected(g.adjacency_masks(), g.order, k))
    return res


def is_3_connected(g: Multigraph) -> bool:
    return is_k_connected(g, 3)


def rank(g: Multigraph, x: Iterable[int]) -> int:
    """Edges in a spanning forest of ``g[x]``."""
    _, idx = g.index()
    us, vs = [], []
    for e in x:
        a, b = g.ends(e)
        us.append(idx[a])
        vs.append(idx[b])
    return kernels.forest_rank(g.order, us, vs)


def rank_sum(g: Multigraph, family: Iterable[Iterable[int]]) -> int:
    return sum(rank(g, member) for member in family)


def edge_subgraph(g: Multigraph, x: Iterable[int]) -> Multigraph:
    """``g[x]``: the edges ``x`` together with their ends."""
    x = set(x)
    edges = {e: g.ends(e) for e in x}
    verts = {w for p in edges.values() for w in p}
    return Multigraph(verts, edges)


def is_forest(g: Multigraph, x: Iterable[int]) -> bool:
    x = list(x)
    return rank(g, x) == len(x)


# named graphs

def make_cycle(n: int) -> Multigraph:
    if n < 1:
        raise PreconditionError("cycle needs at least one vertex")
    return Multigraph.from_pairs([(i, (i + 1) % n) for i in range(n)], range(n))


def make_wheel(n: int) -> Multigraph:
    """Hub ``0`` and rim ``1..n``; spokes get ids ``0..n-1``, rim edges ``n..2n-1``."""
    if n < 3:
        raise PreconditionError("a wheel needs a rim of length at least 3")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Multigraph.from_pairs(spokes + rim, range(n + 1))


def make_prism() -> Multigraph:
    """Triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5."""
    pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Multigraph.from_pairs(pairs, range(6))


def make_complete(n: int) -> Multigraph:
    if n < 1:
        raise PreconditionError("complete graph needs a vertex")
    return Multigraph.from_pairs([(i, j) for i in range(n) for j in range(i + 1, n)], range(n))


def make_complete_bipartite(a: int, b: int) -> Multigraph:
    if a < 1 or b < 1:
        raise PreconditionError("both sides need a vertex")
    return Multigraph.from_pairs([(i, a + j) for i in range(a) for j in range(b)], range(a + b))


def make_hypercube(d: int) -> Multigraph:
    if d < 1:
        raise PreconditionError("dimension must be positive")
    pairs = [(u, u | (1 << i)) for u in range(1 << d) for i in range(d) if not u >> i & 1]
    return Multigraph.from_pairs(sorted(pairs), range(1 << d))


def wheel_hub(g: Multigraph):
    """The hub of ``g`` if ``g`` is a wheel, else ``None``."""
    n = g.order
    if n < 4 or not g.is_simple() or g.size != 2 * (n - 1):
        return None
    for hub in g.vertices:
        if g.degree(hub) != n - 1:
            continue
        rim = [v for v in g.vertices if v != hub]
        if all(g.degree(v) == 3 for v in rim):
            rest = delete_vertices(g, [hub])
            if is_connected(rest):
                return hub
    return None


def is_wheel(g: Multigraph) -> bool:
    return wheel_hub(g) is not None
