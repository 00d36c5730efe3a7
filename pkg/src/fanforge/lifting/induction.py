"""Families of guaranteed rank, built by walking splitter steps down to a base
graph and lifting back up one edge at a time."""
from __future__ import annotations

from dataclasses import dataclass, field

from fanforge.errors import PreconditionError, TheoremViolation
from fanforge.families import FanFamily, validate_family
from fanforge.graph import Multigraph, is_3_connected, is_wheel, make_prism
from fanforge.iso import edge_isomorphism, is_isomorphic, isomorphism
from fanforge.lifting.contraction import lift_through_contraction
from fanforge.lifting.deletion import lift_through_deletion
from fanforge.minors import CONTRACT, K1, apply_step, contains_minor, splitter_edge
from fanforge.oracle import oracle_base_case_family

FREE = "free"
SUM = "sum"
_PRISM = make_prism()


@dataclass
class Chain:
    """What the induction did: the reduction steps, how the bottom was
    handled, and one lifting trace per step (bottom first)."""
    steps: list = field(default_factory=list)
    base: str = ""
    traces: list = field(default_factory=list)
    bounds: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"steps": [[e, m] for e, m in self.steps], "base": self.base,
                "bounds": list(self.bounds), "traces": [t.to_json() for t in self.traces]}


def transport(fam: FanFamily, target: Multigraph, h=None) -> FanFamily:
    """Carry ``fam`` across an isomorphism from its host onto ``target``."""
    vmap = isomorphism(fam.host, target)
    if vmap is None:
        raise PreconditionError("hosts are not isomorphic")
    emap = edge_isomorphism(fam.host, target, vmap)
    return FanFamily.build(target, fam.minor if h is None else h,
                           [frozenset(emap[e] for e in m) for m in fam.members])


def _measure(fam: FanFamily, mode: str) -> int:
    return fam.rank_sum if mode == SUM else fam.rank


def _is_base(g) -> bool:
    return g.order <= 3 or is_wheel(g) or is_isomorphic(g, _PRISM)


def _check_seed(seed: FanFamily, mode: str):
    rep = validate_family(seed)
    if not rep.is_h_fan_family:
        raise PreconditionError(f"seed is not an h-fan family: {rep.bad_members}")
    if mode == FREE and not rep.is_free:
        raise PreconditionError("seed must be free")
    if mode == SUM and rep.crossing_triangles:
        raise PreconditionError("seed must not have crossing triangles")


def _build(g, hp, h, seed, mode, chain, guard):
    if not g.is_simple() or not is_3_connected(g):
        raise PreconditionError("g must be simple and 3-connected")
    if not contains_minor(g, hp):
        raise PreconditionError("h' is not a minor of g")
    if seed is None:
        seed = FanFamily.build(hp, h, [])
    _check_seed(seed, mode)
    r = _measure(seed, mode)

    # walk down
    graphs = [g]
    cur = g
    while not is_isomorphic(cur, hp) and not _is_base(cur):
        e, op = splitter_edge(cur, hp)
        chain.steps.append((e, op))
        cur = apply_step(cur, e, op)
        graphs.append(cur)

    bound = cur.order - hp.order + r
    if is_isomorphic(cur, hp):
        chain.base = "isomorphic"
        fam = transport(seed, cur, h)
    else:
        chain.base = "wheel" if is_wheel(cur) else ("prism" if cur.order > 3 else "small")
        fam = oracle_base_case_family(cur, h, bound, mode, guard)
    if _measure(fam, mode) < bound:
        raise TheoremViolation(f"base family reaches {_measure(fam, mode)}, below {bound}")
    chain.bounds.append(bound)

    # lift back up
    for (e, op), up in zip(reversed(chain.steps), reversed(graphs[:-1])):
        if op == CONTRACT:
            fam, tr = lift_through_contraction(up, e, fam, h)
        else:
            fam, tr = lift_through_deletion(up, e, fam, h)
        chain.traces.append(tr)
        bound = up.order - hp.order + r
        got = _measure(fam, mode)
        if got < bound:
            raise TheoremViolation(f"lifted family reaches {got}, below {bound}", tr)
        chain.bounds.append(bound)
    rep = validate_family(fam)
    if not rep.is_h_fan_family or (mode == FREE and not rep.is_free) \
            or (mode == SUM and rep.crossing_triangles):
        raise TheoremViolation("final family failed validation")
    return fam


def build_fan_family_general(g, hp, h, seed=None, chain=None, guard=None) -> FanFamily:
    """A free h-fan family of ``g`` with rank at least ``|g| - |hp| + r``,
    where ``r`` is the rank of the free seed family of ``hp``."""
    return _build(g, hp, h, seed, FREE, Chain() if chain is None else chain, guard)


def build_fan_family_sum(g, hp, h, seed=None, chain=None, guard=None) -> FanFamily:
    """An h-fan family of ``g`` without crossing triangles and rank-sum at
    least ``|g| - |hp| + s`` (``s`` the seed's rank-sum)."""
    return _build(g, hp, h, seed, SUM, Chain() if chain is None else chain, guard)


def build_fan_family(g, h=K1, chain=None, guard=None) -> FanFamily:
    """A free h-fan family of ``g`` of rank at least ``|g| - |h|``."""
    if h.order > 1 and (not h.is_simple() or not is_3_connected(h)):
        raise PreconditionError("h must be simple and 3-connected")
    return build_fan_family_general(g, h, h, None, chain, guard)
