import json
import random

import pytest

from fanforge.corpus import corpus
from fanforge.errors import PreconditionError
from fanforge.families import FanFamily, crossing_triangles, validate_family
from fanforge.graph import Multigraph, contract_edge, delete_edge, is_3_connected, is_wheel, make_prism
from fanforge.iso import is_isomorphic
from fanforge.lifting import lift_through_contraction, lift_through_deletion
from fanforge.fans import inner_fans
from fanforge.graph import rank
from fanforge.minors import K1
from fanforge.oracle import candidate_members

PRISM = make_prism()


def sample_families(q, cap, rng):
    """Random disjoint member choices without crossing triangles."""
    cands = candidate_members(q, K1)
    out = []

    def go(i, chosen, used):
        if len(out) >= cap * 20:
            return
        if i == len(cands):
            out.append(list(chosen))
            return
        go(i + 1, chosen, used)
        c = cands[i]
        if not (c & used) and not crossing_triangles(q, chosen + [c]):
            go(i + 1, chosen + [c], used | c)

    go(0, [], frozenset())
    rng.shuffle(out)
    return out[:cap]


def contraction_cases(max_n, cap, seed=0):
    rng = random.Random(seed)
    for g in corpus(max_n):
        if is_wheel(g) or is_isomorphic(g, PRISM):
            continue
        for x in g.edge_ids:
            q = contract_edge(g, x)
            if q.is_simple() and is_3_connected(q):
                for m in sample_families(q, cap, rng):
                    yield g, x, FanFamily.build(q, K1, m)


def deletion_cases(max_n, cap, seed=0):
    rng = random.Random(seed)
    for g in corpus(max_n):
        for x in g.edge_ids:
            q = delete_edge(g, x)
            if is_3_connected(q):
                for m in sample_families(q, cap, rng):
                    yield g, x, FanFamily.build(q, K1, m)


def single_fan_cases(max_n, op):
    """Every ``(g, x, {F})`` with ``F`` an inner fan of the reduced graph."""
    for g in corpus(max_n):
        if op == "contract" and (is_wheel(g) or is_isomorphic(g, PRISM)):
            continue
        for x in g.edge_ids:
            if op == "contract":
                q = contract_edge(g, x)
                if not (q.is_simple() and is_3_connected(q)):
                    continue
            else:
                q = delete_edge(g, x)
                if not is_3_connected(q):
                    continue
            for f in inner_fans(q, K1):
                yield g, x, FanFamily.build(q, K1, [f.edges])


def _check_contraction(g, x, fam):
    before = validate_family(fam)
    out, tr = lift_through_contraction(g, x, fam)
    rep = validate_family(out)
    assert rep.is_h_fan_family and not rep.crossing_triangles
    assert rep.rank_sum >= before.rank_sum + 1
    if before.is_free:
        assert rep.is_free and rep.rank >= before.rank + 1
    assert all(tr.claims.values())


def _check_deletion(g, x, fam):
    before = validate_family(fam)
    out, tr = lift_through_deletion(g, x, fam)
    rep = validate_family(out)
    assert rep.is_h_fan_family and rep.rank_sum >= before.rank_sum
    if before.is_free:
        assert rep.is_free
    assert all(tr.claims.values())


def test_empty_family_gains_x(k4):
    g = Multigraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 4), (3, 4), (0, 4), (2, 3)])
    for x in g.edge_ids:
        q = contract_edge(g, x)
        if is_wheel(g) or not (q.is_simple() and is_3_connected(q)):
            continue
        out, tr = lift_through_contraction(g, x, FanFamily.build(q, K1, []))
        assert out.members == (frozenset({x}),) and tr.x_included


def test_singletons_survive_deletion(q3):
    g = Multigraph.from_pairs(list(q3.pairs()) + [(0, 7)])
    x = g.size - 1
    fam = FanFamily.build(q3, K1, [{0}, {1}, {2}])
    out, tr = lift_through_deletion(g, x, fam)
    assert out.members == fam.members
    assert all(tr.claims.values())


def test_preconditions(prism, w5):
    with pytest.raises(PreconditionError):
        lift_through_contraction(w5, 0, FanFamily.build(contract_edge(w5, 0), K1, []))
    with pytest.raises(PreconditionError):
        lift_through_deletion(prism, 6, FanFamily.build(delete_edge(prism, 6), K1, []))


def test_free_singleton_case_splits_triangle():
    # a singleton with no wye through it is replaced by the two triangle sides
    for g, x, fam in contraction_cases(6, 3):
        out, tr = lift_through_contraction(g, x, fam)
        for i in tr.classes["I3"]:
            c, p = tr.chi[i], tr.psi[i]
            assert frozenset({c}) in out.members and frozenset({p}) in out.members
            return
    pytest.fail("no singleton case found")


def test_wye_tie_break_keeps_psi_off_family():
    g = Multigraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 6), (3, 5), (3, 6),
                               (4, 5), (4, 6), (5, 6)])
    x = 5
    q = contract_edge(g, x)
    fam = FanFamily.build(q, K1, [[3, 4, 6, 7, 8, 9, 10], [0], [2]])
    _check_contraction(g, x, fam)


def test_trace_json_round_trip():
    g, x, fam = next(contraction_cases(6, 1))
    _, tr = lift_through_contraction(g, x, fam)
    data = json.loads(json.dumps(tr.to_json()))
    assert data["edge"] == x and data["mode"] == tr.mode
    assert set(data["classes"]) >= {"I1", "I2", "I3"}


def test_contraction_exhaustive_small():
    n = 0
    for g, x, fam in contraction_cases(7, 4):
        _check_contraction(g, x, fam)
        n += 1
    assert n > 100


def test_deletion_exhaustive_small():
    n = 0
    for g, x, fam in deletion_cases(7, 4):
        _check_deletion(g, x, fam)
        n += 1
    assert n > 100


def test_every_single_inner_fan_contraction():
    n = 0
    for g, x, fam in single_fan_cases(7, "contract"):
        _check_contraction(g, x, fam)
        n += 1
    assert n > 0


def test_every_single_inner_fan_deletion():
    n = 0
    for g, x, fam in single_fan_cases(7, "delete"):
        out, _ = lift_through_deletion(g, x, fam)
        assert out.rank == rank(fam.host, fam.union) and validate_family(out).is_free
        n += 1
    assert n > 0


@pytest.mark.slow
def test_contraction_exhaustive_deep():
    for g, x, fam in contraction_cases(7, 40, seed=1):
        _check_contraction(g, x, fam)


@pytest.mark.slow
def test_deletion_exhaustive_deep():
    for g, x, fam in deletion_cases(7, 40, seed=1):
        _check_deletion(g, x, fam)
