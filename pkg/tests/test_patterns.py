from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from starcrit import families
from starcrit.graph import complement, delete_edge, from_edge_list
from starcrit.patterns import (
    PatternKind,
    PatternWitness,
    complement_is_c3c4_free,
    complement_is_c3c4_free_direct,
    complement_is_k4_free,
    contains_p4_by_degree,
    contains_p4_subgraph,
    find_induced,
    find_induced_naive,
    is_free,
    is_star_graph,
)

TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])


def v(i):
    """Vertex v_i of the usual 1-based naming as a 0-based index."""
    return i - 1


def test_pattern_orders_and_sizes():
    sizes = {k: (k.order, len(k.role_edges)) for k in PatternKind}
    assert sizes == {
        PatternKind.I3: (3, 0),
        PatternKind.TWO_K2: (4, 2),
        PatternKind.I4: (4, 0),
        PatternKind.TWO_K2_PLUS_K1: (5, 2),
        PatternKind.P3_PLUS_P2: (5, 3),
    }


def test_horn_minus_last_edge_has_i3():
    g = delete_edge(families.horn(5), (v(4), v(5)))
    w = find_induced(g, PatternKind.I3)
    assert w.vertices == (2, 3, 4)


def test_horn_minus_v1v4_has_2k2():
    g = delete_edge(families.horn(5), (v(1), v(4)))
    w = find_induced(g, PatternKind.TWO_K2)
    assert w.vertices == (0, 2, 3, 4)
    edges = {frozenset(w.vertices[:2]), frozenset(w.vertices[2:])}
    assert edges == {frozenset((v(4), v(5))), frozenset((v(1), v(3)))}


def test_c5_has_no_i3():
    c5 = families.cycle(5)
    assert find_induced(c5, PatternKind.I3) is None
    # oracle: every 3-subset of C5 contains an edge
    assert all(any(c5.adjacent(a, b) for a, b in combinations(t, 2)) for t in combinations(range(5), 3))


def test_double_horn_minus_edge_has_p3_plus_p2():
    g = delete_edge(families.double_horn(6), (v(4), v(3)))
    w = find_induced(g, PatternKind.P3_PLUS_P2)
    assert w.vertices == (0, 2, 4, 3, 5)
    assert set(w.vertices[:3]) == {v(1), v(3), v(5)}
    assert set(w.vertices[3:]) == {v(6), v(4)}


def test_is_free_examples():
    n1 = {PatternKind.I3, PatternKind.TWO_K2}
    assert is_free(families.complete(6), n1)
    assert is_free(families.horn(6), n1)
    assert not is_free(families.cycle(6), {PatternKind.TWO_K2})
    assert find_induced(families.cycle(6), PatternKind.TWO_K2).vertices == (0, 1, 3, 4)


def test_p4_subgraph_examples():
    assert contains_p4_subgraph(families.complete(4))
    assert not contains_p4_subgraph(families.star(5))
    assert contains_p4_subgraph(families.cycle(4))


def test_star_graph_examples():
    assert is_star_graph(families.star(5))
    assert not is_star_graph(families.path(4))
    assert is_star_graph(families.complete(1))
    assert not is_star_graph(TWO_K2)


def test_complement_c3c4_examples():
    assert complement_is_c3c4_free(families.horn(6))
    assert not complement_is_c3c4_free(TWO_K2)
    assert complement_is_c3c4_free(families.complete(5))
    # complement of C5 is C5 again, which has neither a C3 nor a C4
    assert complement_is_c3c4_free(families.cycle(5))


def test_complement_k4_examples():
    assert complement_is_k4_free(families.double_horn(6))
    assert not complement_is_k4_free(families.independent(4))
    assert complement_is_k4_free(families.complete(4))


def test_witness_format():
    assert PatternWitness(PatternKind.TWO_K2, (0, 1, 3, 4)).format() == "(0,1),(3,4)"
    assert PatternWitness(PatternKind.P3_PLUS_P2, (0, 2, 4, 3, 5)).format(one_based=True) == "(1,3,5),(4,6)"


@given(graphs(max_n=7))
def test_detectors_match_naive_scan(g):
    for kind in PatternKind:
        fast = find_induced(g, kind)
        assert fast == find_induced_naive(g, kind)
        if fast is not None:
            assert fast.is_valid(g)


def test_detectors_match_naive_scan_exhaustive(connected_upto_6):
    for g in connected_upto_6:
        for kind in PatternKind:
            assert find_induced(g, kind) == find_induced_naive(g, kind)


def _independence_number(g):
    return max(k for k in range(g.n + 1) for t in combinations(range(g.n), k)
               if not any(g.adjacent(a, b) for a, b in combinations(t, 2)))


@given(graphs(max_n=7))
def test_i3_free_iff_independence_at_most_two(g):
    assert is_free(g, {PatternKind.I3}) == (_independence_number(g) <= 2)


def _has_induced_c4(h):
    for t in combinations(range(h.n), 4):
        sub = h.induced(t)
        if sub.m == 4 and all(d == 2 for d in sub.degrees()):
            return True
    return False


@given(graphs(max_n=7))
def test_2k2_iff_induced_c4_in_complement(g):
    assert (find_induced(g, PatternKind.TWO_K2) is not None) == _has_induced_c4(complement(g))


@given(graphs(max_n=7))
def test_complement_routes_agree(g):
    assert complement_is_c3c4_free_direct(g) == is_free(g, {PatternKind.I3, PatternKind.TWO_K2})


@given(graphs(max_n=7))
def test_p4_scan_matches_degree_argument(g):
    assert contains_p4_subgraph(g) == contains_p4_by_degree(g)


def test_p4_free_connected_graphs_are_stars(connected_upto_6, connected_7):
    for g in connected_upto_6 + connected_7:
        if g.n >= 4:
            assert is_star_graph(g) == (not contains_p4_subgraph(g))


@pytest.mark.parametrize("kind", list(PatternKind))
def test_pattern_graph_is_its_own_witness(kind):
    g = from_edge_list(kind.order, kind.role_edges)
    w = find_induced(g, kind)
    assert w is not None and w.is_valid(g)
