"""Lift an h-fan family of ``g / x`` back to ``g``.

The output gains at least one unit of rank-sum.  Members are sorted into the
classes I1, I2, I3 (quotient not 3-connected in ``g``), J1, J2, J3 (kept or
refined), K (fans hit by a chi/psi edge, reduced to their rims) and L
(singletons hit by a chi/psi edge, dropped); ``{x}`` is added exactly when
``|I| == |K| + |L|``.  Every intermediate fact the construction relies on is
checked at runtime through :meth:`LiftingTrace.check`.
"""
from __future__ import annotations

from itertools import combinations

from fanforge.errors import PreconditionError, TheoremViolation
from fanforge.families import (
    FanFamily,
    cycles,
    disjoint,
    h_contractible_edges,
    validate_family,
)
from fanforge.fans import (
    WYE_WYE,
    enclosing_fans,
    find_fan_ordering,
    induces_triangle,
    induces_wye,
    is_fan_ordering,
    is_h_inner_fan,
    iter_fan_orderings,
    wye_center,
)
from fanforge.graph import (
    contract_edge,
    contract_edges,
    is_3_connected,
    is_wheel,
    make_prism,
    rank,
    rank_sum,
)
from fanforge.iso import is_isomorphic
from fanforge.lifting.trace import LiftingTrace

CONTRACT = "contract"
_PRISM = make_prism()


def _quotient_3c(g, edges) -> bool:
    return is_3_connected(contract_edges(g, edges))


def _is_fan(g, edges) -> bool:
    return len(edges) >= 3 and find_fan_ordering(g, edges) is not None


def _near(g, e) -> list:
    """Edges sharing an end with ``e`` (``e`` excluded), sorted."""
    return sorted({f for v in g.ends(e) for f in g.incident(v)} - {e})


def _in_wye(g, e) -> bool:
    return any(wye_center(g, v) for v in g.ends(e))


def _in_wye_with(g, a, b) -> bool:
    shared = set(g.ends(a)) & set(g.ends(b))
    return any(wye_center(g, v) for v in shared)


def _deg3_triangle(g, edges) -> bool:
    if len(edges) != 3 or not induces_triangle(g, edges):
        return False
    verts = {v for e in edges for v in g.ends(e)}
    return all(g.degree(v) == 3 for v in verts)


def extend_fan_member(g, x, h, member, trace):
    """For a fan member whose quotient is not 3-connected: edges ``chi, psi``
    with ``x, psi, chi, <member>, z`` a wye-to-wye fan of ``g`` and
    ``psi, chi, <member>`` an h-inner fan.  Returns ``(chi, psi, part)``."""
    found = []
    for f in iter_fan_orderings(g, member):
        o = f.ordering
        for c in _near(g, o[0]):
            if c in member or not induces_wye(g, (c, o[0], o[1])):
                continue
            for p in _near(g, c):
                if p in member or p in (c, x):
                    continue
                if not (induces_triangle(g, (p, c, o[0])) and induces_wye(g, (x, p, c))):
                    continue
                for z in _near(g, o[-1]):
                    if z in member or z in (c, p, x) or not induces_wye(g, (o[-2], o[-1], z)):
                        continue
                    full = is_fan_ordering(g, (x, p, c) + o + (z,))
                    if full is None or full.kind != WYE_WYE:
                        continue
                    part = frozenset(member) | {c, p}
                    if is_h_inner_fan(g, h, part):
                        found.append((c, p, part, (x, p, c) + o + (z,)))
    trace.check("fan-member-extends", bool(found), f"member {sorted(member)}")
    found.sort(key=lambda t: (t[0], t[1], t[3]))
    c, p, part, full = found[0]
    if len({(a, b) for a, b, *_ in found}) > 1:
        trace.note(f"fan member {sorted(member)}: several extensions, took ordering {list(full)}")
    return c, p, part


def wye_triangle_pairs(g, x, y) -> list:
    """Pairs ``(a, b)`` with ``{x, a, b}`` a wye and ``{a, b, y}`` a triangle."""
    out = []
    for w in g.ends(x):
        if not wye_center(g, w):
            continue
        a, b = sorted(e for e in g.incident(w) if e != x)
        if induces_triangle(g, (a, b, y)):
            out.append((a, b))
    return out


def contraction_inner(g, x, gx, h, member, trace):
    """Refine an inner fan of ``g / x`` that is no longer a fan of ``g``.

    Returns the list of members: one part ``F_alpha`` containing a spoke and
    the remaining rim edges as singletons.
    """
    member = frozenset(member)
    fans = enclosing_fans(gx, member)
    trace.check("inner-fan-has-enclosing-fan", bool(fans), str(sorted(member)))
    a, b = g.ends(x)
    errors = []
    for fan in fans:
        if fan.hub not in (a, b):
            errors.append(f"hub {fan.hub} not split")
            continue
        o = fan.ordering[1:-1]
        spokes = o[0::2]
        rims = o[1::2]

        def side(y):
            return a if a in g.ends(y) else b

        # maximal runs of consecutive spokes on the same side of x
        runs = []
        start = 0
        for i in range(1, len(spokes) + 1):
            if i == len(spokes) or side(spokes[i]) != side(spokes[start]):
                runs.append((start, i - 1))
                start = i
        parts = [tuple(o[2 * s:2 * t + 1]) for s, t in runs]
        if len(parts) < 2:
            errors.append("hub split leaves the fan intact")
            continue
        for p in parts:
            trace.check("runs-are-fans", len(p) == 1 or is_fan_ordering(g, p) is not None, str(p))
        special = [p for p in parts if _deg3_triangle(g, p)]
        trace.check("at-most-one-cubic-triangle", len(special) <= 1, str(special))
        order = special + sorted((p for p in parts if p not in special), key=min)
        alpha = next((p for p in order if _quotient_3c(g, p)), None)
        trace.check("some-run-contracts-cleanly", alpha is not None, str(parts))
        alpha = frozenset(alpha)
        hc = h_contractible_edges(g, h)
        rest = [frozenset((z,)) for z in rims if z not in alpha]
        trace.check("rim-edges-contractible", all(next(iter(r)) in hc for r in rest),
                    str([sorted(r) for r in rest]))
        legit = (next(iter(alpha)) in hc) if len(alpha) == 1 else is_h_inner_fan(g, h, alpha)
        trace.check("run-is-inner-fan", legit, str(sorted(alpha)))
        out = [alpha] + rest
        covered = frozenset().union(*out)
        trace.check("refinement-keeps-rank",
                    rank(g, covered) == rank_sum(g, out) == rank(gx, member),
                    str([sorted(m) for m in out]))
        with_x = out + [frozenset((x,))]
        trace.check("refinement-free-with-x", rank(g, covered | {x}) == rank_sum(g, with_x))
        if special:
            trace.check("cubic-triangle-is-member", frozenset(special[0]) in out)
        trace.note(f"inner fan {sorted(member)} refined around run {sorted(alpha)}")
        return out
    raise TheoremViolation(f"cannot refine {sorted(member)}: {errors}", trace)


def lift_through_contraction(g, x, fam: FanFamily, h=None, check=True):
    """A family of ``g`` from an h-fan family ``fam`` of ``g / x``.

    Returns ``(family, trace)``.
    """
    h = fam.minor if h is None else h
    gx = contract_edge(g, x)
    if check:
        if not g.is_simple() or not is_3_connected(g):
            raise PreconditionError("g must be simple and 3-connected")
        if is_wheel(g) or is_isomorphic(g, _PRISM):
            raise PreconditionError("g must be neither a wheel nor the prism")
        if not gx.is_simple() or not is_3_connected(gx):
            raise PreconditionError("g/x must be simple and 3-connected")
    trace = LiftingTrace(x, CONTRACT)
    before = fam.validate() if check else None
    if before is not None and before.crossing_triangles:
        raise PreconditionError("the family must not have crossing triangles")
    members = list(fam.members)
    union = fam.union
    hc = h_contractible_edges(g, h)
    cls = trace.classes
    parts = {}

    # --- members whose quotient breaks in g
    c3 = [_quotient_3c(g, m) for m in members]
    for i, m in enumerate(members):
        if c3[i]:
            continue
        if len(m) > 1:
            trace.check("broken-member-is-fan", _is_fan(g, m), str(sorted(m)))
            c, p, part = extend_fan_member(g, x, h, m, trace)
            cls["I1"].append(i)
            trace.chi[i], trace.psi[i] = c, p
            parts[i] = [part]
            continue
        y = next(iter(m))
        pairs = wye_triangle_pairs(g, x, y)
        trace.check("wye-triangle-exists", bool(pairs), f"edge {y}")
        labels = sorted({lab for a, b in pairs for lab in ((a, b), (b, a))})
        if _in_wye(g, y):
            labels = [(c, p) for c, p in labels if _in_wye_with(g, c, y)]
            trace.check("chi-shares-wye-with-member", bool(labels), f"edge {y}")
            # when both labelings qualify, keep psi off the family
            labels.sort(key=lambda t: (t[1] in union, t))
            c, p = labels[0]
            cls["I2"].append(i)
            part = frozenset((c, p, y))
            trace.check("triangle-is-inner-fan", is_h_inner_fan(g, h, part), str(sorted(part)))
            parts[i] = [part]
        else:
            labels = [(c, p) for c, p in labels if p not in union] or labels
            c, p = labels[0]
            cls["I3"].append(i)
            trace.check("triangle-sides-contractible", c in hc and p in hc, f"{c}, {p}")
            parts[i] = [frozenset((c,)), frozenset((p,))]
        trace.chi[i], trace.psi[i] = c, p
    I = cls["I1"] + cls["I2"] + cls["I3"]
    I.sort()

    for i in I:
        pair = {trace.chi[i], trace.psi[i]}
        trace.check("at-most-one-of-chi-psi-in-union", len(pair & union) <= 1, str(sorted(pair)))
        if i in cls["I1"] or i in cls["I2"]:
            trace.check("psi-not-contractible", not is_3_connected(contract_edge(g, trace.psi[i])),
                        str(trace.psi[i]))
    for i, j in combinations(I, 2):
        pi = {trace.chi[i], trace.psi[i]}
        pj = {trace.chi[j], trace.psi[j]}
        trace.check("chi-psi-separate", not (pi & (pj | members[j])) and not (pj & (pi | members[i])),
                    f"{i}, {j}")
    hit = {trace.chi[i] for i in I} | {trace.psi[i] for i in I}

    # --- the remaining members
    for j, m in enumerate(members):
        if j in I:
            continue
        if m & hit:
            if len(m) > 1:
                cls["K"].append(j)
            else:
                cls["L"].append(j)
            continue
        if len(m) == 1:
            cls["J1"].append(j)
            parts[j] = [m]
        elif _is_fan(g, m):
            cls["J2"].append(j)
            trace.check("kept-fan-is-inner-fan", is_h_inner_fan(g, h, m), str(sorted(m)))
            parts[j] = [m]
        else:
            cls["J3"].append(j)
            parts[j] = contraction_inner(g, x, gx, h, m, trace)

    trace.check("at-most-one-K", len(cls["K"]) <= 1, str(cls["K"]))
    for k in cls["K"]:
        m = members[k]
        owners = [i for i in I if {trace.chi[i], trace.psi[i]} & m]
        trace.check("K-unique-owner", len(owners) == 1, str(owners))
        i = owners[0]
        trace.phi[k] = i
        trace.check("K-not-a-fan", not _is_fan(g, m), str(sorted(m)))
        trace.check("K-owner-in-I2", i in cls["I2"], str(i))
        fans = enclosing_fans(gx, m)
        trace.check("K-has-enclosing-fan", bool(fans))
        hub = fans[0].hub
        trace.check("K-chi-is-spoke", trace.chi[i] in m and hub in gx.ends(trace.chi[i]), str(trace.chi[i]))
        trace.check("K-psi-outside", trace.psi[i] not in union, str(trace.psi[i]))
        rim = [e for e in fans[0].ordering[2:-2:2]]
        parts[k] = [frozenset((e,)) for e in rim]
        trace.check("K-rim-disjoint-from-chi-psi", not (set(rim) & hit))
        trace.check("K-rim-contractible", all(e in hc for e in rim), str(rim))
    for l in cls["L"]:
        m = members[l]
        owners = [i for i in I if m <= {trace.chi[i], trace.psi[i]}]
        trace.check("L-unique-owner", len(owners) == 1, str(owners))
        trace.phi[l] = owners[0]
    vals = list(trace.phi.values())
    trace.check("phi-injective", len(vals) == len(set(vals)), str(trace.phi))
    for l, i in trace.phi.items():
        trace.check("phi-hits-chi", trace.chi[i] in members[l], f"{l} -> {i}")
    trace.check("I-dominates", len(I) >= len(cls["K"]) + len(cls["L"]))

    # --- assemble
    trace.x_included = len(I) == len(cls["K"]) + len(cls["L"])
    out = []
    for k in sorted(parts):
        trace.produced[k] = parts[k]
        out.extend(parts[k])
    if trace.x_included:
        out.append(frozenset((x,)))
    trace.check("members-disjoint", disjoint(out))
    for i in I:
        trace.check("I-gains-one", rank_sum(g, parts[i]) == rank(g, frozenset().union(*parts[i]))
                    == rank(gx, members[i]) + 1, str(i))
    for j in cls["J1"] + cls["J2"] + cls["J3"]:
        trace.check("J-keeps-rank", rank_sum(g, parts[j]) == rank(gx, members[j]), str(j))
    for k in cls["K"]:
        trace.check("K-loses-one", rank_sum(g, parts[k]) == rank(gx, members[k]) - 1, str(k))
    res = FanFamily.build(g, h, out)
    out_sets = set(res.members)
    for k, m in enumerate(members):
        if len(m) < 2:
            continue
        for c in cycles(g, m | {x}):
            inside = any(c <= s for s in out_sets)
            if k in cls["K"]:
                trace.check("K-circuits-leave-union", not c <= res.union, str(sorted(c)))
            else:
                trace.check("circuits-stay-in-members", inside or not c <= res.union, str(sorted(c)))
    rep = validate_family(res)
    trace.check("valid-family", rep.is_h_fan_family, str(rep.bad_members))
    trace.check("no-crossing-triangles", not rep.crossing_triangles, str(rep.crossing_triangles))
    gain = rank_sum(gx, members) + 1
    trace.check("rank-sum-gains", rep.rank_sum >= gain, f"{rep.rank_sum} < {gain}")
    if before is not None and before.is_free:
        trace.check("free-kept", rep.is_free)
    return res, trace
