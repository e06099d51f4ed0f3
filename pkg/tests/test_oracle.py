import random

import pytest

from nhca.catalog import make
from nhca.graph import Graph, complete_graph, cycle_graph, induced_subgraph, path_graph
from nhca.models import ArcModel, IntervalModel, intersection_graph, is_left_right_anchored, verify_nhca_model
from nhca.oracle import (
    OracleVerdict,
    brute_force_circular_arc,
    brute_force_end_vertex,
    brute_force_interval,
    brute_force_left_right,
    brute_force_nhca,
)


def test_nhca_examples():
    v = brute_force_nhca(cycle_graph(4))
    assert v.decided and v.member and verify_nhca_model(cycle_graph(4), v.model)
    assert not brute_force_nhca(make("wheel:4").graph).member
    assert not brute_force_nhca(make("c6-complement").graph).member


def test_interval_and_circular_examples():
    assert not brute_force_interval(cycle_graph(4)).member
    assert brute_force_circular_arc(cycle_graph(4)).member
    assert not brute_force_circular_arc(make("g1").graph).member
    for n in range(1, 8):
        v = brute_force_interval(path_graph(n))
        assert v.member and isinstance(v.model, IntervalModel)


def test_anchored_examples():
    assert brute_force_end_vertex(path_graph(5), 0).member
    assert not brute_force_end_vertex(path_graph(5), 2).member
    v = brute_force_left_right(complete_graph(2), [0], [1])
    assert v.member and is_left_right_anchored(v.model, [0], [1])


def test_circular_arc_only_classes():
    # the 4-wheel is a circular-arc graph but not NHCA
    w4 = make("wheel:4").graph
    v = brute_force_circular_arc(w4)
    assert v.member and intersection_graph(v.model) == w4


def test_budget_gives_undecided():
    v = brute_force_nhca(make("wheel:6").graph, budget=10)
    assert not v.decided and v.nodes_explored > 10


def test_verdict_truthiness_is_refused():
    with pytest.raises(TypeError):
        bool(OracleVerdict(True, True))


def test_hereditary_on_random_chains():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(5, 7)
        M = 4 * n
        arcs = []
        for _ in range(n):
            s = rng.randrange(M)
            arcs.append((s, (s + rng.randrange(M // 2)) % M))
        g = intersection_graph(ArcModel(M, tuple(arcs)))
        member = brute_force_nhca(g).member
        while g.n > 1:
            keep = sorted(rng.sample(range(g.n), g.n - 1))
            g, _ = induced_subgraph(g, keep)
            sub_member = brute_force_nhca(g).member
            if member:
                assert sub_member
            member = sub_member
