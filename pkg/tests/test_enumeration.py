import random

import pytest
from hypothesis import given

from conftest import graphs, random_graphs
from starcrit import families
from starcrit.enumeration import (
    CANONICAL_MAX_ORDER,
    CanonicalForm,
    EnumerationError,
    canonical_form,
    canonical_form_brute,
    canonical_graph,
    canonical_labeling,
    enumerate_all,
    enumerate_brute,
    enumerate_connected,
    enumerate_connected_upto,
)
from starcrit.graph import Graph, from_edge_list, is_connected

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n, connected_7):
    found = connected_7 if n == 7 else list(enumerate_connected(n))
    assert len(found) == CONNECTED_COUNTS[n]
    assert all(is_connected(g) for g in found)


@pytest.mark.parametrize("n", range(1, 8))
def test_all_counts(n):
    assert sum(1 for _ in enumerate_all(n)) == ALL_COUNTS[n]


def test_upto_six_is_143(connected_upto_6):
    assert len(connected_upto_6) == 143


def test_order_four_listing():
    forms = [canonical_form(g) for g in enumerate_all(4)]
    assert len(forms) == 11 and forms == sorted(forms)
    assert sum(1 for g in enumerate_all(4) if is_connected(g)) == 6


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("connected", [False, True])
def test_augmentation_matches_brute_force(n, connected):
    fast = list(enumerate_connected(n)) if connected else list(enumerate_all(n))
    assert fast == enumerate_brute(n, connected)


def test_no_duplicates_at_seven(connected_7):
    assert len({canonical_form(g) for g in connected_7}) == len(connected_7)


def test_enumerated_graphs_are_canonical(connected_upto_6):
    for g in connected_upto_6:
        assert canonical_graph(g) == g


@given(graphs(max_n=6))
def test_canonical_form_matches_brute(g):
    assert canonical_form(g) == canonical_form_brute(g)


def test_canonical_form_matches_brute_at_seven():
    for g in random_graphs(seed=7, count=25, max_n=7, min_n=7):
        assert canonical_form(g) == canonical_form_brute(g)


def test_labeling_permutation_reaches_the_form():
    for g in random_graphs(seed=11, count=200, max_n=8):
        form, perm = canonical_labeling(g)
        assert sorted(perm) == list(range(g.n))
        assert canonical_form(g.relabel(perm)) == form
        assert form.graph().m == g.m


def test_relabelling_invariance():
    rng = random.Random(5)
    for g in random_graphs(seed=3, count=200, max_n=8):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_non_isomorphic_graphs_differ():
    # same degree sequence, different graphs
    c6 = families.cycle(6)
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_form(c6) != canonical_form(two_triangles)


def test_bit_string_round_trip():
    form = canonical_form(families.path(4))
    assert len(form.bit_string()) == 6
    assert CanonicalForm(4, int(form.bit_string(), 2)).graph() == form.graph()
    assert canonical_form(Graph(1, (0,))).bit_string() == ""


def test_order_limits():
    with pytest.raises(EnumerationError):
        list(enumerate_all(0))
    with pytest.raises(EnumerationError):
        list(enumerate_connected(CANONICAL_MAX_ORDER + 1))
    with pytest.raises(EnumerationError):
        canonical_form(families.path(CANONICAL_MAX_ORDER + 1))


def test_upto_is_concatenation():
    assert list(enumerate_connected_upto(4)) == [g for n in range(1, 5) for g in enumerate_connected(n)]


@pytest.mark.slow
def test_order_eight_counts():
    assert sum(1 for _ in enumerate_all(8)) == 12346
    assert sum(1 for _ in enumerate_connected(8)) == 11117
