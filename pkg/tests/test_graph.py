import pytest
from hypothesis import given

from conftest import graphs
from starcrit import families
from starcrit.graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    complement,
    decode_graph6,
    delete_edge,
    delete_vertex,
    encode_graph6,
    format_edge_list,
    from_edge_list,
    is_connected,
    parse_edge_list,
)

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
C5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])


def test_from_edge_list_examples():
    assert P4.m == 3 and P4.edges() == [(0, 1), (1, 2), (2, 3)]
    i3 = from_edge_list(3, [])
    assert i3.n == 3 and i3.m == 0
    assert C5.m == 5


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize("edges", [[(0, 4)], [(-1, 0)], [(2, 2)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(GraphError):
        from_edge_list(4, edges)


def test_order_limit():
    from_edge_list(64, [(0, 63)])
    with pytest.raises(GraphError):
        from_edge_list(65, [])


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_delete_edge_examples():
    assert delete_edge(P4, (1, 2)) == TWO_K2
    assert delete_edge(families.complete(3), (0, 2)).m == 2
    assert delete_edge(C5, (0, 1)) == from_edge_list(5, [(1, 2), (2, 3), (3, 4), (4, 0)])
    assert delete_edge(P4, (2, 1)) == TWO_K2


def test_delete_edge_leaves_input_untouched():
    before = P4.rows
    delete_edge(P4, (0, 1))
    assert P4.rows == before


def test_delete_missing_edge():
    with pytest.raises(GraphError):
        delete_edge(P4, (0, 2))


def test_delete_vertex_examples():
    assert delete_vertex(families.complete(4), 0) == families.complete(3)
    assert delete_vertex(P4, 3) == families.path(3)
    # removing vertex 2 of C5 leaves 3-4-0-1, relabelled 2-3-0-1
    assert delete_vertex(C5, 2) == from_edge_list(4, [(0, 1), (2, 3), (3, 0)])
    with pytest.raises(GraphError):
        delete_vertex(P4, 4)


def test_complement_examples():
    assert complement(families.complete(5)).m == 0
    assert complement(TWO_K2) == from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert complement(TWO_K2).degrees() == [2, 2, 2, 2]
    # C5 complement is the pentagram 0-2-4-1-3-0
    assert complement(C5) == from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])


def test_connectivity_examples():
    assert is_connected(P4)
    assert not is_connected(TWO_K2)
    assert not is_connected(families.double_horn(5))


def test_graph6_examples():
    # P4 bits (01,02,12,03,13,23) = 101001 -> 41 + 63 = 'h'
    assert encode_graph6(P4) == b"Ch"
    assert encode_graph6(families.complete(2)) == b"A_"
    assert decode_graph6(encode_graph6(C5)) == C5
    assert decode_graph6(">>graph6<<Ch") == P4


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    for g in (P4, C5, TWO_K2, families.horn(7), families.double_horn(8)):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(h, header=False).strip()
        assert encode_graph6(g) == ref


@pytest.mark.parametrize(
    "data, offset",
    [
        (b"C h", 1),   # space is below 63
        (b"C\x7f", 1),  # DEL is above 126
        (b"E", 1),     # truncated: 15 bits need 3 bytes
        (b"Ch?", 2),   # trailing byte
        (b"Ai", 1),    # padding bits set
        (b"", 0),
    ],
)
def test_graph6_decode_errors(data, offset):
    with pytest.raises(Graph6Error) as info:
        decode_graph6(data)
    assert info.value.offset == offset


def test_edge_list_round_trip():
    text = format_edge_list(C5)
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text) == C5
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")


@given(graphs(max_n=10))
def test_graph6_round_trip(g):
    assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_n=9))
def test_structural_invariants(g):
    for v in range(g.n):
        assert not g.adjacent(v, v)
        for u in range(g.n):
            assert g.adjacent(u, v) == g.adjacent(v, u)
    assert g.m == len(g.edges())


@given(graphs(max_n=9))
def test_complement_involution_and_edge_sum(g):
    h = complement(g)
    assert complement(h) == g
    assert g.m + h.m == g.n * (g.n - 1) // 2


@given(graphs(min_n=2, max_n=9))
def test_delete_then_add_restores(g):
    for e in g.edges():
        h = delete_edge(g, e)
        assert h.m == g.m - 1
        assert add_edge(h, e) == g
