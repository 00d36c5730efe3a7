import pytest
from hypothesis import given, settings, strategies as st

from fanforge.errors import PreconditionError, UnknownEdgeError
from fanforge.families import (
    FanFamily,
    contractible_edges,
    h_contractible_edges,
    make_family,
    validate_family,
)
from fanforge.graph import (
    Multigraph,
    contract_edge,
    is_3_connected,
    make_complete,
    make_prism,
    make_wheel,
)
from fanforge.minors import K1
from fanforge.oracle import _nx_3_connected, candidate_members


def test_singleton_in_k4(k4):
    rep = validate_family(FanFamily.build(k4, K1, [{0}]))
    assert rep.is_h_fan_family and rep.is_free and rep.rank == 1


def test_disjoint_triangles_in_larger_graph():
    # two triangles joined by a perfect matching: the prism
    p = make_prism()
    rep = validate_family(FanFamily.build(p, K1, [{0, 1, 2}, {3, 4, 5}]))
    assert rep.is_free and rep.crossing_triangles == ()
    assert rep.rank == rep.rank_sum == 4


def test_prism_triangle_and_opposite_singleton(prism):
    rep = validate_family(FanFamily.build(prism, K1, [{0, 1, 2}, {3}]))
    # an edge of the other triangle is not contractible
    assert not rep.is_h_fan_family and rep.bad_members == ([3],)
    rep = validate_family(FanFamily.build(prism, K1, [{0, 1, 2}, {6}]))
    assert rep.is_h_fan_family and rep.is_free and rep.rank == 3


def test_contractible_examples(prism, k4):
    assert contractible_edges(prism) == {6, 7, 8}
    w5 = make_wheel(5)
    assert contractible_edges(w5) == frozenset(range(5, 10))
    assert contractible_edges(k4) == frozenset(range(6))


def test_h_contractible_matches_brute_force(small_corpus):
    for g in small_corpus[:60]:
        want = {e for e in g.edge_ids if _nx_3_connected(contract_edge(g, e))}
        assert contractible_edges(g) == want


def test_h_contractible_with_k4(prism):
    # contracting a matching edge of the prism leaves W4, which holds K4
    assert h_contractible_edges(prism, make_complete(4)) == {6, 7, 8}


def test_unknown_edge_rejected(k4):
    with pytest.raises(UnknownEdgeError):
        validate_family(FanFamily.build(k4, K1, [{42}]))


def test_overlap_rejected(k4):
    with pytest.raises(PreconditionError):
        make_family(k4, K1, [{0, 1}, {1}])
    rep = validate_family(FanFamily.build(k4, K1, [{0}, {0}]))
    assert not rep.disjoint and not rep.is_h_fan_family


def test_crossing_triangle_detected(k4):
    # edges 0, 1, 3 are 01, 02, 12
    rep = validate_family(FanFamily.build(k4, K1, [{0}, {1}, {3}]))
    assert rep.crossing_triangles == ((0, 1, 3),) and not rep.is_free


def test_json_shape(prism):
    data = FanFamily.build(prism, K1, [{0, 1, 2}, {6}]).to_json()
    assert data["tags"] == ["inner-fan", "contractible-singleton"]
    assert data["report"]["rank"] == 3


def test_ando_bound_small(small_corpus):
    for g in small_corpus:
        assert len(contractible_edges(g)) >= (g.order + 1) // 2


def _random_family(g, data):
    cands = candidate_members(g, K1)
    chosen, used = [], set()
    for c in data.draw(st.permutations(cands)):
        if not (c & used) and data.draw(st.booleans()):
            chosen.append(c)
            used |= c
    return FanFamily.build(g, K1, chosen)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_freeness_two_ways_and_monotone(small_corpus, data):
    g = data.draw(st.sampled_from(small_corpus))
    fam = _random_family(g, data)
    rep = validate_family(fam)  # raises if the circuit scan and rank test disagree
    assert rep.is_free == (rep.rank == rep.rank_sum)
    if rep.is_free and fam.members:
        drop = data.draw(st.integers(0, len(fam.members) - 1))
        rest = FanFamily.build(g, K1, [m for i, m in enumerate(fam.members) if i != drop])
        assert validate_family(rest).is_free
