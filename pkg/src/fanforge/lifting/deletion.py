"""Lift an h-fan family of ``g \\ x`` back to ``g``."""
from __future__ import annotations

from fanforge.errors import PreconditionError, TheoremViolation
from fanforge.families import FanFamily, disjoint, h_contractible_edges, validate_family
from fanforge.fans import enclosing_fans, is_h_inner_fan, rim_vertices
from fanforge.graph import delete_edge, is_3_connected, rank, rank_sum
from fanforge.lifting.trace import LiftingTrace

DELETE = "delete"


def _legit(g, h, member) -> bool:
    if len(member) == 1:
        return next(iter(member)) in h_contractible_edges(g, h)
    return is_h_inner_fan(g, h, member)


def _candidates(g, x, fan):
    """Sub-fans that the case analysis offers for one enclosing fan."""
    o = fan.ordering
    n = (len(o) - 1) // 2
    verts = rim_vertices(g, fan)
    pos = {}
    for i, v in enumerate(verts):
        pos.setdefault(v, i)
    a, b = g.ends(x)
    inner = [i for i in range(1, n + 1) if verts[i] in (a, b)]
    if not inner:
        yield "fan-kept", o[1:-1]
        return
    s = inner[0]
    w = b if verts[s] == a else a
    t = pos.get(w)
    if t is not None and t != s:
        lo, hi = min(s, t), max(s, t)
        # spokes strictly between the two rim ends of x
        if hi - lo >= 2:
            yield "chord", o[2 * lo + 1:2 * hi - 2]
        return
    if s >= 2:
        yield "before", o[1:2 * s - 2]
    if n + 1 - s >= 2:
        yield "after", o[2 * s + 1:2 * n]


def deletion_inner(g, x, gx, h, member, trace=None):
    """Split an inner fan of ``g \\ x`` into a free h-fan family of ``g`` of equal rank."""
    member = frozenset(member)
    target = rank(g, member)
    fans = enclosing_fans(gx, member)
    if not fans:
        raise TheoremViolation(f"{sorted(member)} is not an inner part in g\\x", trace)
    fans.sort(key=lambda f: (g.degree(f.hub) < 4, f.ordering))
    tried = []
    for fan in fans:
        for f in (fan, fan.reversed()):
            o = f.ordering
            rim = [o[2 * i] for i in range(1, (len(o) - 1) // 2)]
            for label, part in _candidates(g, x, f):
                part = frozenset(part)
                out = [part] + [frozenset((e,)) for e in rim if e not in part]
                ok = (_legit(g, h, part)
                      and all(e in h_contractible_edges(g, h) for m in out[1:] for e in m)
                      and rank(g, frozenset().union(*out)) == rank_sum(g, out) == target)
                tried.append((label, sorted(part), ok))
                if ok:
                    if trace is not None:
                        trace.note(f"inner fan {sorted(member)} -> {label} part {sorted(part)}")
                    return out
    raise TheoremViolation(f"no free refinement of {sorted(member)} with rank {target}: {tried}", trace)


def lift_through_deletion(g, x, fam: FanFamily, h=None, check=True):
    """A family of ``g`` from an h-fan family ``fam`` of ``g \\ x``.

    Returns ``(family, trace)``.  Rank-sum does not drop, freeness and the
    absence of crossing triangles carry over.
    """
    h = fam.minor if h is None else h
    gx = delete_edge(g, x)
    if check:
        if not g.is_simple() or not is_3_connected(g):
            raise PreconditionError("g must be simple and 3-connected")
        if not is_3_connected(gx):
            raise PreconditionError("g\\x must be 3-connected")
    trace = LiftingTrace(x, DELETE)
    before = fam.validate() if check else None
    out = []
    for k, m in enumerate(fam.members):
        if len(m) == 1:
            e = next(iter(m))
            trace.check("singleton-stays-contractible", e in h_contractible_edges(g, h), str(e))
            sub = [m]
        else:
            sub = deletion_inner(g, x, gx, h, m, trace)
        trace.produced[k] = sub
        out.extend(sub)
    res = FanFamily.build(g, h, out)
    trace.check("members-disjoint", disjoint(res.members))
    rep = validate_family(res)
    trace.check("valid-family", rep.is_h_fan_family, str(rep.bad_members))
    if before is not None:
        trace.check("rank-sum-kept", rep.rank_sum >= before.rank_sum,
                    f"{rep.rank_sum} < {before.rank_sum}")
        if not before.crossing_triangles:
            trace.check("no-crossing-triangles", not rep.crossing_triangles, str(rep.crossing_triangles))
        if before.is_free:
            trace.check("free-kept", rep.is_free)
    return res, trace
