import pytest
from hypothesis import given, settings, strategies as st

from fanforge.fans import (
    TRI_TRI,
    WYE_WYE,
    ambiguous_fan_sets,
    find_triangles,
    find_wyes,
    inner_fans,
    inner_parts,
    is_fan_ordering,
    is_h_inner_fan,
    maximal_wye_to_wye_fans,
)
from fanforge.graph import (
    contract_edge,
    contract_edges,
    delete_edge,
    is_3_connected,
    is_wheel,
    make_complete,
    make_cycle,
    make_hypercube,
    make_prism,
    make_wheel,
)
from fanforge.minors import K1


def _windows(fan):
    """Every wye-to-wye sub-ordering x0, y1, x1, .., yk, xk of a maximal fan."""
    o = fan.ordering
    for i in range(0, len(o), 2):
        for j in range(i + 2, len(o), 2):
            yield o[i:j + 1]


def test_wyes_and_triangles():
    k4 = make_complete(4)
    assert len(find_triangles(k4)) == 4 and len(find_wyes(k4)) == 4
    c5 = make_cycle(5)
    assert find_wyes(c5) == [] and find_triangles(c5) == []
    q3 = make_hypercube(3)
    assert len(find_triangles(q3)) == 0 and len(find_wyes(q3)) == 8


def test_fan_ordering_examples():
    w5 = make_wheel(5)
    # spoke to rim vertex 1, rim edge 1-2, spoke to 2
    f = is_fan_ordering(w5, (0, 5, 1))
    assert f is not None and f.kind == TRI_TRI and f.hub == 0 and len(f.edges) == 3
    assert is_fan_ordering(w5, (0, 5)) is None
    q3 = make_hypercube(3)
    path = [q3.edges_between(0, 1)[0], q3.edges_between(1, 3)[0], q3.edges_between(3, 7)[0]]
    assert is_fan_ordering(q3, path) is None


def test_prism_has_six_maximal_fans(prism):
    fans = maximal_wye_to_wye_fans(prism)
    assert len(fans) == 6 and all(f.kind == WYE_WYE for f in fans)
    assert sorted(sorted(i.edges) for i in inner_fans(prism, K1)) == [[0, 1, 2], [3, 4, 5]]


def test_wheel_fans_wrap():
    w4 = make_wheel(4)
    fans = maximal_wye_to_wye_fans(w4)
    assert fans
    for f in fans:
        o = f.ordering
        # both ends of the ordering meet the same rim vertex
        first = set(w4.ends(o[0])) - {f.hub}
        last = set(w4.ends(o[-1])) - {f.hub}
        assert first & last


def test_triangle_free_graphs_have_only_lone_wyes(q3):
    fans = maximal_wye_to_wye_fans(q3)
    assert all(len(f.ordering) == 3 for f in fans)
    assert all(len(i.edges) == 1 for i in inner_fans(q3, K1))
    # one edge set, several readings: flagged rather than merged
    assert len(ambiguous_fan_sets(q3)) == 8


def test_w5_inner_fans_with_k4_minor():
    w5 = make_wheel(5)
    got = {i.edges for i in inner_fans(w5, make_complete(4))}
    for part in inner_parts(w5):
        q = contract_edges(w5, part.edges)
        from fanforge.minors import contains_minor
        want = is_3_connected(q) and contains_minor(q, make_complete(4))
        assert (part.edges in got) == want


def test_fans_revalidate_and_reverse(small_corpus):
    for g in small_corpus:
        for f in maximal_wye_to_wye_fans(g):
            again = is_fan_ordering(g, f.ordering)
            assert again is not None and again.kind == f.kind
            rev = f.reversed()
            assert rev is not None and rev.kind == f.kind and rev.hub == f.hub
            assert set(rev.spokes) == set(f.spokes)


def test_inner_fans_of_non_wheels_are_inner(small_corpus):
    for g in small_corpus:
        if is_wheel(g):
            continue
        for i in inner_fans(g, K1):
            enc = i.enclosing
            assert is_fan_ordering(g, enc.ordering).kind == WYE_WYE
            assert not any(enc.edges < f.edges for f in maximal_wye_to_wye_fans(g))
            assert is_3_connected(contract_edges(g, i.edges))


def _shares_wye(g, a, b):
    return any(a in w and b in w for w in find_wyes(g))


def test_two_spoke_fans_contract_or_share_a_wye(small_corpus):
    for g in small_corpus:
        for f in maximal_wye_to_wye_fans(g):
            for o in _windows(f):
                if len(o) != 5:
                    continue
                x0, y1, x1, y2, x2 = o
                assert is_3_connected(contract_edge(g, x1)) or _shares_wye(g, y1, y2)


def test_cubic_triangles_contract_to_3_connected(small_corpus):
    for g in small_corpus:
        for t in find_triangles(g):
            verts = {v for e in t for v in g.ends(e)}
            if all(g.degree(v) == 3 for v in verts):
                assert is_3_connected(contract_edges(g, t))


def test_long_fans_inner_rim_steps(small_corpus):
    for g in small_corpus:
        for f in maximal_wye_to_wye_fans(g):
            for o in _windows(f):
                n = (len(o) - 1) // 2
                if n < 3:
                    continue
                for i in range(1, n):
                    x, y = o[2 * i], o[2 * i - 1]
                    q = delete_edge(contract_edge(g, x), y)
                    assert is_3_connected(q) and q.is_simple()


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_inner_fan_membership_matches_definition(small_corpus, data):
    g = data.draw(st.sampled_from(small_corpus))
    for part in inner_parts(g):
        ok = is_3_connected(contract_edges(g, part.edges))
        assert is_h_inner_fan(g, K1, part.edges) == ok
