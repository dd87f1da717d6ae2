import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EIGHT_EDGES

from dijkstra_pq import generators
from dijkstra_pq.graph import INFINITY, LABEL_MAX, GraphBuilder, LabelOverflowError, graph_from_arcs
from dijkstra_pq.solver import (
    VARIANTS,
    bellman_ford,
    get_path,
    get_solver,
    path_weight,
    solve,
    solve_target,
)

ALL = sorted(VARIANTS)


def random_graph(seed, n, p, w_max=100):
    return generators.generate_random(generators.RandomConfig(n, p, w_max=w_max, seed=seed))


@pytest.mark.parametrize("variant", ALL)
def test_cycle(variant, cycle):
    res = solve(cycle, 0, variant)
    assert res.labels == [0, 10, 20, 30, 40]
    assert res.preds == [None, 0, 1, 2, 3]
    assert res.path(4) == [0, 1, 2, 3, 4]
    assert res.path(0) == []
    assert res.order == [0, 1, 2, 3, 4]
    assert res.complete


@pytest.mark.parametrize("variant", ALL)
def test_isolated_source(variant):
    res = solve(GraphBuilder(1).build(), 0, variant)
    assert res.labels == [0] and res.preds == [None]


@pytest.mark.parametrize("variant", ALL)
def test_unreachable_vertices(variant):
    g = graph_from_arcs(4, [(0, 1, 3), (2, 3, 1)])
    res = solve(g, 0, variant)
    assert res.labels[2] is INFINITY and res.labels[3] is INFINITY
    assert res.preds[2] is None and res.path(3) == []
    assert res.settled == [True, True, False, False]


@pytest.mark.parametrize("variant", ALL)
def test_source_out_of_range(variant, cycle):
    for s in (-1, 5):
        with pytest.raises(ValueError):
            get_solver(variant)(cycle, s)


def test_unknown_variant(cycle):
    with pytest.raises(ValueError, match="unknown variant"):
        solve(cycle, 0, "pairing")


@pytest.mark.parametrize("variant", ALL)
def test_eight_vertex_path(variant, eight):
    res = solve(eight, 0, variant)
    assert res.path(7) == [0, 1, 2, 7]
    assert res.labels[7] == 9
    assert path_weight(eight, res.path(7)) == 9


def test_eight_vertex_hand_labels(eight):
    # Worked by hand from EIGHT_EDGES.
    assert solve(eight, 0).labels == [0, 2, 5, 5, 9, 8, 11, 9]
    assert len(EIGHT_EDGES) == 11


@pytest.mark.parametrize("variant", ALL)
def test_200_random_graphs_match_bellman_ford(variant):
    r = random.Random(5)
    for i in range(200):
        n = r.randint(1, 40)
        g = random_graph(i, n, r.choice([0.1, 0.5]))
        s = r.randrange(n)
        assert solve(g, s, variant).labels == bellman_ford(g, s).labels


@pytest.mark.parametrize("variant", ALL)
def test_self_loops_parallel_arcs_and_zero_weights(variant):
    g = graph_from_arcs(4, [(0, 0, 0), (0, 1, 9), (0, 1, 4), (1, 2, 0), (2, 1, 0), (2, 3, 7), (1, 3, 7)])
    res = solve(g, 0, variant)
    assert res.labels == [0, 4, 4, 11]
    assert path_weight(g, res.path(3)) == 11


@pytest.mark.parametrize("variant", ["tree", "heap"])
def test_ties_are_broken_by_vertex(variant):
    # Ordered by (label, vertex): equal labels come out lowest vertex first.
    g = graph_from_arcs(5, [(0, 4, 1), (0, 3, 1), (0, 2, 1), (0, 1, 1)])
    assert solve(g, 0, variant).order == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("variant", ALL)
def test_order_is_nondecreasing_in_label(variant):
    g = random_graph(3, 60, 0.2)
    res = solve(g, 7, variant)
    labels = [res.labels[u] for u in res.order]
    assert labels == sorted(labels)
    assert len(set(res.order)) == len(res.order)


@pytest.mark.parametrize("variant", ALL)
def test_overflow_detected(variant):
    g = graph_from_arcs(3, [(0, 1, LABEL_MAX), (1, 2, 1)])
    with pytest.raises(LabelOverflowError):
        solve(g, 0, variant)
    ok = graph_from_arcs(3, [(0, 1, LABEL_MAX - 1), (1, 2, 1)])
    assert solve(ok, 0, variant).labels[2] == LABEL_MAX


@pytest.mark.parametrize("variant", ALL)
def test_solve_target_stops_early(variant, cycle):
    res = solve_target(cycle, 0, 2, variant)
    assert res.order == [0, 1, 2]
    assert not res.complete
    assert res.labels[2] == 20 and res.path(2) == [0, 1, 2]
    assert res.is_final(2) and not res.is_final(3)


@pytest.mark.parametrize("variant", ALL)
def test_solve_target_edge_cases(variant):
    g = graph_from_arcs(3, [(0, 1, 5)])
    res = solve_target(g, 0, 0, variant)
    assert res.order == [0] and res.labels[0] == 0 and res.path(0) == []
    res = solve_target(g, 0, 2, variant)
    assert res.labels[2] is INFINITY and res.complete
    with pytest.raises(ValueError, match="target"):
        solve_target(g, 0, 3, variant)


def test_get_path():
    preds = [None, 0, 1, 1, None]
    assert get_path(preds, 0, 3) == [0, 1, 3]
    assert get_path(preds, 0, 0) == []
    assert get_path(preds, 0, 4) == []
    with pytest.raises(ValueError):
        get_path([1, 0, None], 2, 0)  # cycle never reaches the source


def test_path_weight_missing_arc(cycle):
    with pytest.raises(ValueError):
        path_weight(cycle, [0, 2])
    assert path_weight(cycle, [3]) == 0


def test_bellman_ford_marks_reached():
    g = graph_from_arcs(3, [(0, 1, 2)])
    res = bellman_ford(g, 0)
    assert res.labels == [0, 2, INFINITY] and res.settled == [True, True, False]


def test_result_invariants_planar():
    g = generators.generate_planar(generators.PlanarConfig(300, seed=3))
    ref = None
    for variant in ALL:
        res = solve(g, 0, variant)
        if ref is None:
            ref = res.labels
        assert res.labels == ref
        for u in range(g.n):
            p = res.preds[u]
            if p is not None:
                w = min(w for v, w in zip(g.heads[p], g.weights[p]) if v == u)
                assert res.labels[u] == res.labels[p] + w
        assert all(x is not INFINITY for x in res.labels)


arc_lists = st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 20)), max_size=50),
        st.integers(0, n - 1),
    )
)


@given(arc_lists)
def test_all_variants_agree_with_oracle(case):
    n, arcs, s = case
    g = graph_from_arcs(n, arcs)
    oracle = bellman_ford(g, s).labels
    for variant in ALL:
        res = solve(g, s, variant)
        assert res.labels == oracle
        for u in range(n):
            if res.preds[u] is not None:
                assert path_weight(g, res.path(u)) == oracle[u]
