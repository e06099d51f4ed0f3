import random

import pytest

from nhca.builder import (
    InternalContradiction,
    build_nhca_model,
    build_segment_models,
    classify_vertices,
    glue_arcs,
    model_from_hole,
)
from nhca.catalog import Family, make
from nhca.detector import ObstructionWitness
from nhca.graph import Graph, complete_graph, cycle_graph
from nhca.models import ArcModel, intersection_graph, verify_nhca_model


def c_plus(n, extra):
    """C_n on 0..n-1 plus vertices n, n+1, ... with the given neighbour lists."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    for k, nbrs in enumerate(extra):
        edges += [(n + k, u) for u in nbrs]
    return Graph.from_edges(n + len(extra), edges)


def test_classify_pendant():
    g = c_plus(4, [[0]])
    cls = classify_vertices(g, (0, 1, 2, 3))
    assert cls.O == (1 << 4, 0, 0, 0)
    assert not any(cls.A) and not any(cls.B) and not any(cls.T)


def test_classify_two_neighbours_without_witness():
    g = c_plus(4, [[0, 1]])
    cls = classify_vertices(g, (0, 1, 2, 3))
    assert cls.T[0] == 1 << 4
    assert not any(cls.A) and not any(cls.B)


def test_classify_overlapping_sets():
    # C5 = v1..v5 as 0..4; u sees v5, v1, v2, i.e. positions 4, 0, 1
    g = c_plus(5, [[4, 0, 1]])
    cls = classify_vertices(g, (0, 1, 2, 3, 4))
    u = 1 << 5
    assert cls.A[0] & u and cls.B[0] & u
    # u also sits in the closed segments on both sides of position 0
    assert cls.segment_two(4) & u and cls.segment_two(0) & u


def test_classification_rejects_non_holes():
    with pytest.raises(ValueError):
        classify_vertices(complete_graph(4), (0, 1, 2, 3))


def test_theorem4_violation_is_reported():
    # a vertex adjacent to two opposite cycle vertices is a cycle
    # neighbourhood that is not a path; the graph contains G1
    g = c_plus(4, [[0, 2]])
    with pytest.raises(InternalContradiction) as info:
        classify_vertices(g, (0, 1, 2, 3))
    assert info.value.vertex == 4


def test_segment_models_empty_for_plain_cycle():
    g = cycle_graph(6)
    cls = classify_vertices(g, tuple(range(6)))
    for one, two in build_segment_models(g, cls):
        assert one.vertices == () and two.vertices == ()


def test_pendant_piece_inside_private_region():
    g = c_plus(4, [[0]])
    model = model_from_hole(g, (0, 1, 2, 3))
    assert verify_nhca_model(g, model)
    pend = model.points(4)
    for c in (1, 3):
        assert not pend & model.points(c)
    assert pend & ~model.points(0) == 0


def test_glued_arc_is_contiguous_across_segments():
    g = c_plus(5, [[4, 0, 1]])
    cls = classify_vertices(g, (0, 1, 2, 3, 4))
    model = glue_arcs(g, cls, build_segment_models(g, cls))
    assert intersection_graph(model) == g
    s, e = model.arcs[5]
    assert model.points(5) == ArcModel(model.M, ((s, e),)).points(0)


def test_build_examples():
    assert isinstance(build_nhca_model(Graph(1, (0,))), ArcModel)
    w = build_nhca_model(make("net:2").graph)
    assert isinstance(w, ObstructionWitness) and w.family.family is Family.NET
    m = build_nhca_model(cycle_graph(7))
    assert isinstance(m, ArcModel) and verify_nhca_model(cycle_graph(7), m)


def test_build_empty_graph():
    m = build_nhca_model(Graph(0, ()))
    assert isinstance(m, ArcModel) and len(m) == 0


def test_random_arc_graphs_get_certificates():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(4, 11)
        M = 4 * n
        arcs = []
        for _ in range(n):
            s = rng.randrange(M)
            arcs.append((s, (s + rng.randrange(M // 2)) % M))
        g = intersection_graph(ArcModel(M, tuple(arcs)))
        out = build_nhca_model(g)
        if isinstance(out, ArcModel):
            assert verify_nhca_model(g, out)
        else:
            assert out.verify(g)
