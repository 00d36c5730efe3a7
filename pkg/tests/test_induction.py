import pytest

from fanforge.errors import PreconditionError
from fanforge.families import FanFamily, contractible_edges, validate_family
from fanforge.graph import is_forest, make_complete, make_hypercube, make_wheel
from fanforge.iso import is_isomorphic
from fanforge.lifting.induction import (
    Chain,
    build_fan_family,
    build_fan_family_general,
    build_fan_family_sum,
    transport,
)
from fanforge.minors import K1
from fanforge.oracle import oracle_check_family, oracle_max_free_family_rank

from conftest import reduction_pairs


def test_graph_equal_to_minor_returns_seed(prism):
    seed = FanFamily.build(prism, K1, [{6}, {7}])
    chain = Chain()
    fam = build_fan_family_general(prism, prism, K1, seed, chain)
    assert fam.members == seed.members and chain.base == "isomorphic" and not chain.steps


def test_prism_rank(prism):
    fam = build_fan_family(prism)
    assert fam.rank >= 5 and validate_family(fam).is_free


def test_q3_spanning_tree(q3):
    fam = build_fan_family(q3)
    assert all(len(m) == 1 for m in fam.members)
    assert len(fam.members) == 7 and is_forest(q3, fam.union)
    assert fam.union <= contractible_edges(q3)


def test_chain_records_every_level():
    g = make_hypercube(3)
    chain = Chain()
    build_fan_family(g, chain=chain)
    assert len(chain.traces) == len(chain.steps) == len(chain.bounds) - 1
    assert chain.bounds == sorted(chain.bounds)
    assert chain.to_json()["base"] == chain.base


def test_minor_must_be_3_connected(q3):
    from fanforge.graph import make_cycle
    with pytest.raises(PreconditionError):
        build_fan_family(q3, make_cycle(5))


def test_transport(prism):
    from fanforge.graph import Multigraph
    other = Multigraph.from_pairs([(b + 10, a + 10) for a, b in reversed(list(prism.pairs()))])
    fam = FanFamily.build(prism, K1, [{6}, {0, 1, 2}])
    moved = transport(fam, other)
    assert validate_family(moved).is_free == validate_family(fam).is_free
    assert sorted(len(m) for m in moved.members) == [1, 3]


def test_k4_minor_bound():
    g = make_wheel(6)
    k4 = make_complete(4)
    fam = build_fan_family(g, k4)
    assert fam.rank >= g.order - 4 and not oracle_check_family(g, k4, fam)


def test_sum_mode_from_reductions(corpus8):
    for g, hp, _ in reduction_pairs(corpus8, 25, seed=3):
        fam = build_fan_family_sum(g, hp, K1)
        rep = validate_family(fam)
        assert rep.rank_sum >= g.order - hp.order and not rep.crossing_triangles


def test_general_mode_from_reductions(corpus8):
    for g, hp, _ in reduction_pairs(corpus8, 25, seed=4):
        r, seed = oracle_max_free_family_rank(hp, K1)
        fam = build_fan_family_general(g, hp, K1, seed)
        assert fam.rank >= g.order - hp.order + r
        assert not oracle_check_family(g, K1, fam)


def test_whole_small_corpus(small_corpus):
    for g in small_corpus:
        fam = build_fan_family(g)
        assert fam.rank >= g.order - 1
        assert not oracle_check_family(g, K1, fam)
