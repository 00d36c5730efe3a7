"""Wyes, triangles, fan orderings, maximal wye-to-wye fans and inner fans.

A wye is the edge set of a vertex of degree exactly three with three distinct
neighbours.  Fans are built from alternating wyes and triangles; rim vertices
of a fan therefore have degree three in the host.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from fanforge.graph import Multigraph, contract_edges, is_3_connected
from fanforge.iso import canonical_key

TRI_TRI = "triangle-to-triangle"
WYE_TRI = "wye-to-triangle"
WYE_WYE = "wye-to-wye"


@dataclass(frozen=True)
class Fan:
    ordering: tuple
    kind: str
    hub: int
    spokes: tuple
    rim: tuple
    host: Multigraph = field(compare=False, repr=False, default=None)

    @property
    def edges(self) -> frozenset:
        return frozenset(self.ordering)

    def reversed(self) -> "Fan":
        return is_fan_ordering(self.host, self.ordering[::-1])

    def to_json(self) -> dict:
        return {"ordering": list(self.ordering), "class": self.kind, "hub": self.hub,
                "spokes": list(self.spokes)}


@dataclass(frozen=True)
class InnerFan:
    edges: frozenset
    ordering: tuple
    enclosing: Fan = field(compare=False)

    @property
    def degenerated(self) -> bool:
        return len(self.edges) == 1

    def to_json(self) -> dict:
        return {"edges": sorted(self.edges), "ordering": list(self.ordering),
                "enclosing": self.enclosing.to_json()}


def wye_center(g: Multigraph, v: int) -> bool:
    inc = g.incident(v)
    if len(inc) != 3:
        return False
    ends = set()
    for e in inc:
        w = g.other_end(e, v)
        if w == v:
            return False
        ends.add(w)
    return len(ends) == 3


def find_wyes(g: Multigraph) -> list:
    return [tuple(sorted(g.incident(v))) for v in g.vertices if wye_center(g, v)]


def find_triangles(g: Multigraph) -> list:
    out = []
    for a in g.vertices:
        na = sorted(w for w in g.neighbors(a) if w > a)
        for b, c in combinations(na, 2):
            if c in g.neighbors(b):
                for e1 in g.edges_between(a, b):
                    for e2 in g.edges_between(b, c):
                        for e3 in g.edges_between(a, c):
                            out.append(tuple(sorted((e1, e2, e3))))
    return sorted(out)


def induces_wye(g: Multigraph, triple) -> bool:
    s = set(triple)
    if len(s) != 3:
        return False
    common = set(g.ends(next(iter(s))))
    for e in s:
        common &= set(g.ends(e))
    for v in common:
        if wye_center(g, v) and set(g.incident(v)) == s:
            return True
    return False


def induces_triangle(g: Multigraph, triple) -> bool:
    s = set(triple)
    if len(s) != 3:
        return False
    pairs = [frozenset(g.ends(e)) for e in s]
    if any(len(p) != 2 for p in pairs) or len(set(pairs)) != 3:
        return False
    verts = set().union(*pairs)
    return len(verts) == 3


def is_fan_ordering(g: Multigraph, ordering):
    """The :class:`Fan` described by ``ordering``, or ``None``."""
    ordering = tuple(ordering)
    if len(ordering) < 3 or len(set(ordering)) != len(ordering):
        return None
    if not all(g.has_edge(e) for e in ordering):
        return None
    seen = set()
    for e in ordering:
        a, b = g.ends(e)
        if a == b or (a, b) in seen:
            return None
        seen.add((a, b))
    types = []
    for i in range(len(ordering) - 2):
        t = ordering[i:i + 3]
        if induces_wye(g, t):
            types.append("w")
        elif induces_triangle(g, t):
            types.append("t")
        else:
            return None
    for a, b in zip(types, types[1:]):
        if a == b:
            return None
    first, last = types[0], types[-1]
    if first == last == "t":
        kind = TRI_TRI
    elif first == last == "w":
        kind = WYE_WYE
    else:
        kind = WYE_TRI
    start = 1 if first == "w" else 0
    spokes = ordering[start::2]
    rim = tuple(e for i, e in enumerate(ordering) if (i - start) % 2 or i < start)
    if len(spokes) == 1:
        # a lone wye: the hub is the far end of the middle edge
        center = (set(g.ends(ordering[0])) & set(g.ends(ordering[2]))).pop()
        hub = g.other_end(spokes[0], center)
    else:
        common = set(g.ends(spokes[0]))
        for y in spokes[1:]:
            common &= set(g.ends(y))
        if len(common) != 1:
            return None
        hub = common.pop()
    return Fan(ordering, kind, hub, tuple(spokes), rim, g)


def iter_fan_orderings(g: Multigraph, edges):
    """Every fan ordering of the edge set ``edges`` (as :class:`Fan` records), depth-first."""
    edges = set(edges)
    if len(edges) < 3:
        return
    adj = {e: set() for e in edges}
    for e in edges:
        for f in edges:
            if e != f and set(g.ends(e)) & set(g.ends(f)):
                adj[e].add(f)

    def extend(seq):
        if len(seq) == len(edges):
            r = is_fan_ordering(g, seq)
            if r is not None:
                yield r
            return
        for f in sorted(adj[seq[-1]] - set(seq)):
            if len(seq) >= 2:
                t = (seq[-2], seq[-1], f)
                if not (induces_wye(g, t) or induces_triangle(g, t)):
                    continue
            yield from extend(seq + [f])

    for e in sorted(edges):
        yield from extend([e])


def find_fan_ordering(g: Multigraph, edges):
    """Some fan ordering of the edge set ``edges`` (depth-first), or ``None``."""
    return next(iter_fan_orderings(g, edges), None)


def is_fan(g: Multigraph, edges) -> bool:
    return find_fan_ordering(g, edges) is not None


def _grow(g, hub, rim, order, used, forward):
    """Extend a wye-to-wye ordering at one end; ``rim`` is the list of rim vertices."""
    while True:
        end_v = rim[-1] if forward else rim[0]
        x = order[-1] if forward else order[0]
        w = g.other_end(x, end_v)
        if w == hub or w in rim or not wye_center(g, w):
            return
        spoke = g.edges_between(hub, w)
        if len(spoke) != 1 or spoke[0] in used:
            return
        y = spoke[0]
        rest = [f for f in g.incident(w) if f != x and f != y]
        if len(rest) != 1 or rest[0] in used:
            return
        nx_ = rest[0]
        if forward:
            order.extend([y, nx_])
            rim.append(w)
        else:
            order[:0] = [nx_, y]
            rim.insert(0, w)
        used.update((y, nx_))


def _canonical_direction(order):
    return tuple(order) if order[0] < order[-1] else tuple(order[::-1])


def maximal_wye_to_wye_fans(g: Multigraph) -> list:
    """Every maximal wye-to-wye fan, one ordering per class up to reversal.

    Orderings whose edge sets coincide but which differ by more than reversal
    (a lone wye read with different spokes, or a wheel read from different
    hubs) are all reported.
    """
    return list(g.cached("maxfans", lambda: _maximal_fans(g)))


def _maximal_fans(g):
    found = set()
    for v in g.vertices:
        if not wye_center(g, v):
            continue
        inc = g.incident(v)
        for y in inc:
            hub = g.other_end(y, v)
            a, b = [f for f in inc if f != y]
            # growing forward first decides which spoke a wheel leaves out
            for first in ((a, y, b), (b, y, a)):
                order = list(first)
                rim = [v]
                used = set(order)
                _grow(g, hub, rim, order, used, True)
                _grow(g, hub, rim, order, used, False)
                found.add(_canonical_direction(order))
    sets = {o: frozenset(o) for o in found}
    distinct = set(sets.values())
    maximal = {s for s in distinct if not any(s < t for t in distinct)}
    fans = []
    for o in sorted(found):
        if sets[o] in maximal:
            f = is_fan_ordering(g, o)
            if f is None or f.kind != WYE_WYE:
                raise AssertionError(f"grown ordering {o} is not a wye-to-wye fan")
            fans.append(f)
    return fans


def inner_parts(g: Multigraph) -> list:
    """Distinct inner parts ``y1 .. yn`` of maximal wye-to-wye fans, no quotient test."""
    out = {}
    for f in maximal_wye_to_wye_fans(g):
        inner = f.ordering[1:-1]
        out.setdefault(frozenset(inner), InnerFan(frozenset(inner), inner, f))
    return [out[k] for k in sorted(out, key=sorted)]


def inner_fans(g: Multigraph, h: Multigraph) -> list:
    """Inner parts ``F`` with ``g/F`` 3-connected and holding an ``h``-minor."""
    from fanforge.minors import contains_minor

    def compute():
        res = []
        for cand in inner_parts(g):
            q = contract_edges(g, cand.edges)
            if is_3_connected(q) and contains_minor(q, h):
                res.append(cand)
        return res

    return list(g.cached(("inner", canonical_key(h)), compute))


def is_inner_part(g: Multigraph, edges) -> bool:
    edges = frozenset(edges)
    return any(c.edges == edges for c in inner_parts(g))


def is_h_inner_fan(g: Multigraph, h: Multigraph, edges) -> bool:
    edges = frozenset(edges)
    return any(c.edges == edges for c in inner_fans(g, h))


def enclosing_fans(g: Multigraph, edges) -> list:
    """Maximal wye-to-wye fans whose inner part is exactly ``edges``."""
    edges = frozenset(edges)
    return [f for f in maximal_wye_to_wye_fans(g) if frozenset(f.ordering[1:-1]) == edges]


def rim_vertices(g: Multigraph, fan: Fan) -> list:
    """``[v0, v1, .., v(n+1)]`` for a wye-to-wye ordering ``x0, y1, x1, .., yn, xn``."""
    o = fan.ordering
    spokes = o[1::2]
    inner = [g.other_end(y, fan.hub) for y in spokes]
    first = g.other_end(o[0], inner[0])
    last = g.other_end(o[-1], inner[-1])
    return [first] + inner + [last]


def ambiguous_fan_sets(g: Multigraph) -> list:
    """Edge sets carried by two maximal wye-to-wye orderings that are not
    reversals of each other."""
    seen = {}
    for f in maximal_wye_to_wye_fans(g):
        seen.setdefault(f.edges, set()).add(f.ordering)
    return sorted((s for s, o in seen.items() if len(o) > 1), key=sorted)
