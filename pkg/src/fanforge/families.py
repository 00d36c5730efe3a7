"""Fan families: validation, freeness, crossing triangles, rank accounting."""
from __future__ import annotations

from dataclasses import dataclass, field

from fanforge.errors import PreconditionError, UnknownEdgeError
from fanforge.fans import is_h_inner_fan
from fanforge.graph import Multigraph, contract_edge, is_3_connected, rank, rank_sum
from fanforge.iso import canonical_key
from fanforge.minors import contains_minor

INNER_FAN = "inner-fan"
SINGLETON = "contractible-singleton"


def h_contractible_edges(g: Multigraph, h: Multigraph) -> frozenset:
    """Edges ``e`` with ``g/e`` 3-connected and holding an ``h``-minor."""

    def compute():
        out = []
        for e in g.edge_ids:
            if g.is_loop(e):
                continue
            q = contract_edge(g, e)
            if is_3_connected(q) and contains_minor(q, h):
                out.append(e)
        return frozenset(out)

    return g.cached(("hcontr", canonical_key(h)), compute)


def contractible_edges(g: Multigraph) -> frozenset:
    from fanforge.minors import K1
    return h_contractible_edges(g, K1)


def is_h_contractible(g: Multigraph, h: Multigraph, e: int) -> bool:
    return e in h_contractible_edges(g, h)


@dataclass(frozen=True)
class FanFamily:
    members: tuple
    host: Multigraph = field(compare=False, repr=False)
    minor: Multigraph = field(compare=False, repr=False)

    @classmethod
    def build(cls, host, minor, members):
        mem = tuple(sorted((frozenset(m) for m in members), key=lambda s: (min(s) if s else -1, len(s))))
        return cls(mem, host, minor)

    @property
    def union(self) -> frozenset:
        return frozenset().union(*self.members) if self.members else frozenset()

    @property
    def tags(self) -> tuple:
        return tuple(SINGLETON if len(m) == 1 else INNER_FAN for m in self.members)

    @property
    def rank(self) -> int:
        return rank(self.host, self.union)

    @property
    def rank_sum(self) -> int:
        return rank_sum(self.host, self.members)

    @property
    def is_free(self) -> bool:
        return disjoint(self.members) and self.rank == self.rank_sum

    def validate(self) -> "FamilyReport":
        return validate_family(self)

    def to_json(self) -> dict:
        rep = self.validate()
        return {"members": [sorted(m) for m in self.members], "tags": list(self.tags),
                "report": rep.to_json()}

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class FamilyReport:
    is_h_fan_family: bool
    is_free: bool
    crossing_triangles: tuple
    rank: int
    rank_sum: int
    disjoint: bool
    bad_members: tuple = ()

    def to_json(self) -> dict:
        return {"is_h_fan_family": self.is_h_fan_family, "is_free": self.is_free,
                "crossing_triangles": [list(t) for t in self.crossing_triangles],
                "rank": self.rank, "rank_sum": self.rank_sum}


def disjoint(members) -> bool:
    seen = set()
    for m in members:
        if seen & m:
            return False
        seen |= m
    return True


def cycles(g: Multigraph, edges) -> list:
    """Every cycle of ``g[edges]`` as a frozenset of edge ids (loops and digons included)."""
    edges = sorted(set(edges))
    inc = {}
    for e in edges:
        a, b = g.ends(e)
        inc.setdefault(a, []).append(e)
        if a != b:
            inc.setdefault(b, []).append(e)
    out = []
    for e in edges:
        a, b = g.ends(e)
        if a == b:
            out.append(frozenset((e,)))
            continue
        # paths b -> a through edges with larger ids, rooting each cycle at its least edge
        stack = [(b, [e], {a, b})]
        while stack:
            v, path, seen = stack.pop()
            for f in inc[v]:
                if f <= e or f in path:
                    continue
                w = g.other_end(f, v)
                if w == v:
                    continue
                if w == a:
                    out.append(frozenset(path + [f]))
                elif w not in seen:
                    stack.append((w, path + [f], seen | {w}))
    return out


def circuit_scan(g: Multigraph, members):
    """``(free, crossing triangles)`` by scanning every cycle of the union."""
    members = [frozenset(m) for m in members]
    union = frozenset().union(*members) if members else frozenset()
    free = disjoint(members)
    crossing = []
    for c in cycles(g, union):
        inside = any(c <= m for m in members)
        if not inside:
            free = False
            if len(c) == 3 and _is_triangle(g, c):
                crossing.append(tuple(sorted(c)))
    return free, tuple(sorted(crossing))


def _is_triangle(g, c):
    verts = {v for e in c for v in g.ends(e)}
    return len(verts) == 3


def crossing_triangles(g: Multigraph, members) -> tuple:
    return circuit_scan(g, members)[1]


def member_ok(g: Multigraph, h: Multigraph, m) -> bool:
    m = frozenset(m)
    if len(m) == 1:
        return is_h_contractible(g, h, next(iter(m)))
    return is_h_inner_fan(g, h, m)


def validate_family(fam: FanFamily) -> FamilyReport:
    g, h = fam.host, fam.minor
    for m in fam.members:
        for e in m:
            if not g.has_edge(e):
                raise UnknownEdgeError(e)
    dis = disjoint(fam.members)
    scan_free, crossing = circuit_scan(g, fam.members)
    r, rs = fam.rank, fam.rank_sum
    rank_free = dis and r == rs
    if scan_free != rank_free:
        raise AssertionError("circuit scan and rank test disagree on freeness")
    bad = tuple(sorted(m) for m in fam.members if not m or not member_ok(g, h, m))
    return FamilyReport(dis and not bad, scan_free, crossing, r, rs, dis, bad)


def make_family(g, h, members) -> FanFamily:
    fam = FanFamily.build(g, h, members)
    if not disjoint(fam.members):
        raise PreconditionError("family members must be pairwise disjoint")
    return fam
