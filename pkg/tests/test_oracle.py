import pytest

from fanforge.errors import SizeGuardError, TheoremViolation
from fanforge.families import contractible_edges, validate_family
from fanforge.graph import is_forest, make_complete, make_hypercube, make_prism, make_wheel
from fanforge.minors import K1
from fanforge.oracle import (
    oracle_base_case_family,
    oracle_check_family,
    oracle_max_contractible_forest,
    oracle_max_free_family_rank,
    size_guard,
)


def _spanning_tree_of_contractible(g):
    """Independent check: does some spanning tree use only contractible edges?"""
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.ends(e) for e in contractible_edges(g))
    return nx.is_connected(h)


def test_free_rank_examples(q3, k4, prism):
    r, fam = oracle_max_free_family_rank(q3, K1)
    assert r == 7 and _spanning_tree_of_contractible(q3)
    assert validate_family(fam).is_free
    assert oracle_max_free_family_rank(k4, K1)[0] == 3
    assert oracle_max_free_family_rank(prism, K1)[0] >= 5


def test_forest_examples(prism):
    assert oracle_max_contractible_forest(prism, K1) == (3, frozenset({6, 7, 8}))
    size, edges = oracle_max_contractible_forest(make_wheel(5), K1)
    assert size == 4 and is_forest(make_wheel(5), edges)
    q3 = make_hypercube(3)
    assert oracle_max_contractible_forest(q3, K1)[0] == q3.order - 1


def test_base_case_examples(prism):
    w4 = make_wheel(4)
    assert validate_family(oracle_base_case_family(w4, K1, 4)).rank >= 4
    fam = oracle_base_case_family(prism, make_complete(4), 2)
    assert fam.rank >= 2 and not oracle_check_family(prism, make_complete(4), fam)
    empty = oracle_base_case_family(w4, w4, 0)
    assert empty.rank == 0
    with pytest.raises(TheoremViolation):
        oracle_base_case_family(w4, K1, 5)


def test_guard(monkeypatch):
    q4 = make_hypercube(4)
    with pytest.raises(SizeGuardError):
        oracle_max_free_family_rank(q4, K1)
    monkeypatch.setenv("FANFORGE_SIZE_GUARD", "16,32")
    assert size_guard() == (16, 32)
    monkeypatch.setenv("FANFORGE_SIZE_GUARD", "12")
    assert size_guard()[0] == 12


def test_deterministic(small_corpus):
    for g in small_corpus[::10]:
        a = oracle_max_free_family_rank(g, K1)
        b = oracle_max_free_family_rank(g, K1)
        assert a[0] == b[0] and a[1].members == b[1].members


def test_witness_rank_is_real(small_corpus):
    for g in (g for g in small_corpus if g.size <= 20):
        r, fam = oracle_max_free_family_rank(g, K1)
        assert fam.rank == r >= g.order - 1
        assert oracle_check_family(g, K1, fam) == []
