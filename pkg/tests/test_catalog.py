import pytest

from nhca.catalog import (
    Family,
    FamilyId,
    Inconclusive,
    gimbel_members,
    interval_members,
    make,
    nhca_members,
    validate_minimality,
)
from nhca.enumeration import are_isomorphic
from nhca.graph import Graph, GraphError, complete_graph, cycle_graph, induced_subgraph
from nhca.oracle import brute_force_end_vertex, brute_force_interval, brute_force_nhca


def names(entries):
    return {str(e.family) for e in entries}


def nhca_oracle(h):
    v = brute_force_nhca(h)
    return v.member if v.decided else None


def test_family_parsing_and_ranges():
    assert FamilyId.parse("net:2") == FamilyId(Family.NET, 2)
    assert str(FamilyId.parse("c6-complement")) == "c6-complement"
    for bad in ("net:1", "tent:2", "wheel:3", "cycle:3", "cycle-star:3", "gimbel:-1", "g1:2", "g5", "wheel"):
        with pytest.raises(GraphError):
            FamilyId.parse(bad)


@pytest.mark.parametrize(
    "spec, n",
    [
        ("cycle:5", 5), ("cycle-star:4", 5), ("wheel:4", 5), ("net:2", 6), ("net:5", 9), ("tent:3", 6),
        ("tent:6", 9), ("bipartite-claw", 7), ("umbrella", 7), ("g1", 5), ("g2", 6), ("g3", 6), ("g4", 7),
        ("domino", 6), ("c6-complement", 6), ("gimbel:0", 5), ("gimbel:1", 6), ("gimbel:2", 5), ("gimbel:5", 8),
    ],
)
def test_sizes(spec, n):
    entry = make(spec)
    assert entry.graph.n == n == entry.family.order()


def test_wheel4_edges():
    assert make("wheel:4").graph.edge_count() == 8


def test_net_is_triangle_with_pendants():
    classical = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    g = make("net:2").graph
    assert are_isomorphic(g, classical)
    assert sorted(g.degree(v) for v in range(6)) == [1, 1, 1, 3, 3, 3]


def test_tent_is_3_sun():
    sun = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)])
    g = make("tent:3").graph
    assert are_isomorphic(g, sun)
    assert sorted(g.degree(v) for v in range(6)) == [2, 2, 2, 4, 4, 4]


def test_g1_is_k23():
    k23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert are_isomorphic(make("g1").graph, k23)


def test_c6_complement_is_prism():
    from nhca.graph import complement

    assert make("c6-complement").graph == complement(cycle_graph(6))


def test_umbrella_derivations_agree():
    # one derivation: hole v0..v4 with v_i = 2; path x1 x2 a x4 x5 whose outer
    # vertices see only v_i on the hole, a sees v_{i-2}, v_{i-1}, v_i; keep
    # {v_{i-2}, v_i} and the path
    x1, x2, a, x4, x5, vi, vim2 = range(7)
    first = Graph.from_edges(
        7,
        [(x1, x2), (x2, a), (a, x4), (x4, x5)] + [(vi, x) for x in (x1, x2, a, x4, x5)] + [(vim2, a)],
    )
    # other derivation: path x1 x2 b x4 x5 with every vertex adjacent to
    # v_{i+1}, and w adjacent to b only among the kept vertices
    b, vip1, w = 2, 5, 6
    second = Graph.from_edges(
        7,
        [(x1, x2), (x2, b), (b, x4), (x4, x5)] + [(vip1, x) for x in (x1, x2, b, x4, x5)] + [(w, b)],
    )
    assert are_isomorphic(first, second)
    assert are_isomorphic(first, make("umbrella").graph)


def test_nhca_members_small():
    assert nhca_members(4) == []
    assert names(nhca_members(5)) == {"g1", "wheel:4", "cycle-star:4"}
    added = names(nhca_members(6)) - names(nhca_members(5))
    assert added == {"net:2", "tent:3", "g2", "g3", "domino", "c6-complement", "wheel:5", "cycle-star:5"}
    assert not any(e.family.family is Family.CYCLE for e in nhca_members(9))


def test_interval_members_small():
    assert names(interval_members(4)) == {"cycle:4"}
    assert names(interval_members(6)) - names(interval_members(4)) == {"cycle:5", "cycle:6", "net:2", "tent:3"}
    assert names(interval_members(7)) - names(interval_members(6)) == {
        "cycle:7", "net:3", "tent:4", "bipartite-claw", "umbrella",
    }


def test_members_sorted_by_size():
    orders = [e.graph.n for e in nhca_members(9)]
    assert orders == sorted(orders)


def test_validate_minimality_examples():
    assert validate_minimality(make("wheel:4"), nhca_oracle)
    assert validate_minimality(make("cycle:4"), lambda h: brute_force_interval(h).member)
    assert not validate_minimality(make("cycle:4"), nhca_oracle)


def test_validate_minimality_inconclusive():
    with pytest.raises(Inconclusive):
        validate_minimality(make("g1"), lambda h: None)


def test_not_every_graph_is_minimal():
    # K4 is NHCA, so it is not forbidden
    from nhca.catalog import CatalogEntry

    assert not validate_minimality(CatalogEntry(FamilyId(Family.G1), complete_graph(4)), nhca_oracle)


@pytest.mark.parametrize("s", range(7))
def test_gimbel_marked_vertex_is_minimal_non_end(s):
    entry = make(FamilyId(Family.GIMBEL, s))
    g, marked = entry.graph, entry.marked_vertex
    assert brute_force_interval(g).member
    assert not brute_force_end_vertex(g, marked).member
    for v in range(g.n):
        if v == marked:
            continue
        keep = [u for u in range(g.n) if u != v]
        sub, order = induced_subgraph(g, keep)
        assert brute_force_end_vertex(sub, order.index(marked)).member, (s, v)


def test_gimbel_members_sizes():
    assert names(gimbel_members(5)) == {"gimbel:0", "gimbel:2"}
    assert names(gimbel_members(6)) == {"gimbel:0", "gimbel:1", "gimbel:2", "gimbel:3"}
