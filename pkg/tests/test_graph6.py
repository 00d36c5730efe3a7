import networkx as nx
import pytest
from hypothesis import given, strategies as st

from fanforge.graph import Multigraph, make_complete, make_hypercube
from fanforge.graph6 import (
    FormatError,
    decode,
    decode_graph6,
    decode_sparse6,
    encode_graph6,
    encode_sparse6,
    from_edge_text,
    parse_lines,
    to_edge_text,
)


@st.composite
def simple_graphs(draw, max_n=70):
    n = draw(st.integers(1, max_n))
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda p: p[0] < p[1]), max_size=40))
    return Multigraph.from_pairs(sorted(pairs), range(n))


def _nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.pairs())
    return out


def test_k4_graph6():
    g = decode_graph6("C~")
    assert (g.order, g.size) == (4, 6)
    assert encode_graph6(make_complete(4)) == "C~"


@given(simple_graphs())
def test_graph6_matches_networkx(g):
    ours = encode_graph6(g)
    theirs = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert sorted(decode_graph6(ours).pairs()) == sorted(g.pairs())


@given(simple_graphs())
def test_sparse6_matches_networkx(g):
    ours = encode_sparse6(g)
    theirs = nx.to_sparse6_bytes(_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = decode_sparse6(ours)
    assert back.order == g.order and sorted(back.pairs()) == sorted(g.pairs())


def test_decode_dispatch():
    q = make_hypercube(3)
    assert decode(encode_sparse6(q)).size == 12
    assert decode(">>graph6<<" + encode_graph6(q)).size == 12


def test_corrupt_line_reports_line_number():
    with pytest.raises(FormatError) as err:
        parse_lines(["C~", "", "C~~~"])
    assert err.value.line == 3


def test_empty_stream():
    assert parse_lines([]) == []


def test_edge_text_keeps_parallels_and_loops():
    g = Multigraph.from_pairs([(0, 1), (0, 1), (2, 2), (1, 2)])
    back = from_edge_text(to_edge_text(g))
    assert back.pairs() == g.pairs()
    with pytest.raises(FormatError):
        from_edge_text("0 1\n2\n")
