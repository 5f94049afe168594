import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyaut.autsearch import find_isomorphism
from cayleyaut.cayley import (
    build_ambient_cayley,
    build_cayley,
    canonical_cycle,
    check_normality_conditions,
    condition_ii_holds,
    cycles_through,
    distance_from_identity,
    four_cycles_through,
    six_cycles_through,
)
from cayleyaut.graph import complete_bipartite_graph, disjoint_union, hypercube_graph, is_connected, path_graph
from cayleyaut.perms import Permutation, Transposition, compose
from cayleyaut.suites import random_girth5_set
from cayleyaut.transpositions import TranspositionSet, check_hypotheses

from conftest import to_networkx

T12, T13, T23, T34 = Transposition(1, 2), Transposition(1, 3), Transposition(2, 3), Transposition(3, 4)
TRIANGLE = TranspositionSet([(1, 2), (2, 3), (1, 3)])
C4 = TranspositionSet([(1, 2), (2, 3), (3, 4), (1, 4)])


@st.composite
def transposition_sets(draw, max_points=4):
    n = draw(st.integers(2, max_points))
    pool = list(itertools.combinations(range(1, n + 1), 2))
    return TranspositionSet(draw(st.lists(st.sampled_from(pool), min_size=1, unique=True)))


def test_build_cayley_examples():
    assert find_isomorphism(build_cayley(TRIANGLE).graph, complete_bipartite_graph(3, 3)) is not None
    k2 = build_cayley(TranspositionSet([(1, 2)])).graph
    assert find_isomorphism(k2, path_graph(2)) is not None
    for r in (1, 2, 3, 4):
        s = TranspositionSet((2 * i + 1, 2 * i + 2) for i in range(r))
        assert find_isomorphism(build_cayley(s).graph, hypercube_graph(r)) is not None


@given(transposition_sets())
def test_cayley_graph_invariants(s):
    cg = build_cayley(s)
    assert cg.element(cg.identity_vertex).is_identity()
    assert all(d == len(s) for d in cg.graph.degrees())
    assert is_connected(cg.graph)
    for u in range(cg.vertex_count):
        h = cg.element(u)
        expected = {cg.vertex_of(compose(t, h)) for t in s.permutations()}
        assert set(cg.graph.neighbours(u)) == expected


@given(transposition_sets(), st.data())
def test_right_translations_are_automorphisms(s, data):
    cg = build_cayley(s)
    g = cg.element(data.draw(st.integers(0, cg.vertex_count - 1)))
    rt = cg.right_translation(g)
    assert cg.graph.is_automorphism(rt)
    assert cg.element(rt[cg.identity_vertex]) == g


def test_ambient_cayley_is_disjoint_union():
    g = build_ambient_cayley(TranspositionSet([(1, 2)]), 3)
    assert find_isomorphism(g, disjoint_union([path_graph(2)] * 3)) is not None
    with pytest.raises(ValueError):
        build_ambient_cayley(TranspositionSet([(1, 4)]), 3)


def test_distance_examples():
    cg = build_cayley(TranspositionSet([(1, 2), (3, 4), (5, 6)]))
    dist = distance_from_identity(cg)
    assert dist[cg.identity_vertex] == 0
    assert dist[cg.vertex_of(Permutation.from_cycles((1, 2), (3, 4), (5, 6)))] == 3

    cg = build_cayley(TranspositionSet([(1, 2), (2, 3)]))
    dist = distance_from_identity(cg)
    assert dist[cg.vertex_of(Permutation.from_cycles((1, 2, 3)))] == 2
    assert dist[cg.vertex_of(Permutation.from_cycles((1, 3, 2)))] == 2
    assert dist[cg.vertex_of(T13)] == 3


def test_canonical_cycle():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((1, 3, 2)) == (1, 2, 3)
    assert canonical_cycle((5, 4, 9, 0)) == (0, 5, 4, 9)


@settings(max_examples=25, deadline=None)
@given(transposition_sets(), st.sampled_from([4, 6]))
def test_cycles_through_matches_networkx(s, length):
    cg = build_cayley(s)
    ours = cycles_through(cg.graph, 0, length)
    g = to_networkx(cg.graph)
    theirs = {
        canonical_cycle(tuple(c))
        for c in nx.simple_cycles(g, length_bound=length)
        if len(c) == length and 0 in c
    }
    assert set(ours) == theirs
    assert len(ours) == len(theirs)


def test_four_cycles_examples():
    cg = build_cayley(TranspositionSet([(1, 2), (3, 4)]))
    (cycle,) = four_cycles_through(cg, T12, T34)
    tk = cg.vertex_of(compose(T12.as_permutation(), T34.as_permutation()))
    assert set(cycle) == {cg.identity_vertex, cg.vertex_of(T12), tk, cg.vertex_of(T34)}

    assert four_cycles_through(build_cayley(TranspositionSet([(1, 2), (2, 3)])), T12, T23) == []
    assert len(four_cycles_through(build_cayley(TRIANGLE), T12, T23)) == 2
    with pytest.raises(ValueError):
        four_cycles_through(cg, T12, T12)


# (set, t, k, qualifying 6-cycles, 4-cycles through e,t,k), counted independently with networkx
FROZEN_CYCLE_COUNTS = [
    (TranspositionSet([(1, 2), (2, 3)]), T12, T23, 1, 0),
    (TranspositionSet([(1, 2), (1, 3), (1, 4), (1, 5)]), T12, T13, 1, 0),
    (TRIANGLE, T12, T23, 0, 2),
    (C4, T12, T23, 8, 0),
]


@pytest.mark.parametrize("s, t, k, six, four", FROZEN_CYCLE_COUNTS, ids=["P3", "K14", "K3", "C4"])
def test_cycle_counts_frozen(s, t, k, six, four):
    cg = build_cayley(s)
    assert len(six_cycles_through(cg, t, k)) == six
    assert len(four_cycles_through(cg, t, k)) == four


def test_two_k2_has_one_four_cycle():
    cg = build_cayley(TranspositionSet([(1, 2), (3, 4)]))
    assert len(four_cycles_through(cg, T12, T34)) == 1


def test_condition_ii_examples():
    ok, cycles = condition_ii_holds(build_cayley(TranspositionSet([(1, 2), (1, 3), (1, 4), (1, 5)])), T12, T13)
    assert ok and len(cycles) == 1
    ok, cycles = condition_ii_holds(build_cayley(TRIANGLE), T12, T23)
    assert not ok and len(cycles) != 1
    with pytest.raises(ValueError):
        condition_ii_holds(build_cayley(TranspositionSet([(1, 2), (3, 4)])), T12, T34)


def test_condition_ii_witness_shape():
    cg = build_cayley(TranspositionSet([(1, 2), (2, 3), (3, 4)]))
    dist = distance_from_identity(cg)
    ok, (cycle,) = condition_ii_holds(cg, T12, T23)
    assert ok
    assert {cg.identity_vertex, cg.vertex_of(T12), cg.vertex_of(T23)} <= set(cycle)
    assert max(dist[v] for v in cycle) == 3
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert cg.graph.has_edge(a, b)


def test_normality_conditions_examples():
    for s in (TranspositionSet([(1, 2), (2, 3), (3, 4)]),
              TranspositionSet([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
              TranspositionSet([(1, 2), (3, 4), (5, 6)])):
        nc = check_normality_conditions(build_cayley(s))
        assert nc.condition_i and nc.condition_ii and nc.failing_pairs == []

    nc = check_normality_conditions(build_cayley(C4))
    assert not (nc.condition_i and nc.condition_ii)

    nc = check_normality_conditions(build_cayley(TRIANGLE))
    # every commuting/non-commuting pair obeys the 4-cycle rule; the 6-cycle rule fails
    assert nc.condition_i
    assert not nc.condition_ii
    assert {tag for _, _, tag in nc.failing_pairs} == {"ii"}


@pytest.mark.parametrize("seed", range(5))
def test_condition_ii_on_random_girth5_sets(seed):
    s = random_girth5_set(random.Random(seed), max_order=120, max_points=6)
    assert check_hypotheses(s).girth_ok
    cg = build_cayley(s)
    for t, k in itertools.combinations(s.pairs, 2):
        if not t.commutes_with(k):
            assert condition_ii_holds(cg, t, k)[0]
