import itertools

import pytest
from hypothesis import given, settings, strategies as st

from eqcorona.graph import (Coloring, ColoringError, GraphError, analyze_coloring, build_graph,
                            complete_graph, complete_multipartite, cycle_graph, fan_graph,
                            graph_family, max_degree, path_graph, wheel_graph)
from eqcorona.corona import CoronaSpec, corona, corona_power


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.num_edges == 3 and max_degree(g) == 2 and g.is_cycle()


def test_build_p2():
    g = build_graph(2, [(0, 1)])
    assert g.edges() == [(0, 1)] and g.is_complete()


def test_duplicates_collapse():
    g = build_graph(4, [(0, 1), (0, 1), (1, 0)])
    assert g.num_edges == 1 and g.degree(2) == 0 and not g.is_connected()


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_families():
    assert cycle_graph(4).num_edges == 4
    assert complete_graph(2).num_edges == 1
    assert complete_multipartite((3, 3)).num_edges == 9
    assert path_graph(5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert graph_family("multipartite", (1, 2, 3)).num_edges == 11
    assert wheel_graph(5).num_edges == 10 and fan_graph(5).num_edges == 9
    with pytest.raises(GraphError):
        cycle_graph(2)
    with pytest.raises(GraphError):
        graph_family("star", 3)


def test_max_degree_of_coronas():
    c3 = cycle_graph(3)
    assert max_degree(c3) == 2
    assert max_degree(corona(c3, complete_graph(2))) == 4
    assert max_degree(corona_power(CoronaSpec(c3, complete_graph(2), 2))) == 6
    assert max_degree(build_graph(3, [])) == 0


def test_analyze_examples():
    p2 = path_graph(2)
    r = analyze_coloring(p2, Coloring(2, (1, 2)))
    assert r.proper and r.sizes == (1, 1) and r.discrepancy == 0 and r.strongly_equitable
    assert not analyze_coloring(p2, Coloring(2, (1, 1))).proper
    r = analyze_coloring(p2, Coloring(3, (1, 2)))
    assert r.proper and r.sizes == (1, 1, 0) and r.equitable and not r.strongly_equitable


def test_analyze_errors():
    with pytest.raises(ColoringError):
        analyze_coloring(path_graph(3), Coloring(2, (1, 2)))
    with pytest.raises(ColoringError):
        Coloring(2, (1, 3))


def test_improper_lists_edge():
    r = analyze_coloring(path_graph(3), Coloring(2, (1, 2, 2)))
    assert r.bad_edges == ((1, 2),) and not r.ok


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=30)) if pairs else []
    return build_graph(n, edges)


@given(graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges
    for v in range(g.n):
        for u in g.adj[v]:
            assert v in g.adj[u]


@settings(max_examples=200)
@given(graphs(), st.data())
def test_color_permutation_invariance(g, data):
    k = data.draw(st.integers(1, 5))
    colors = data.draw(st.lists(st.integers(1, k), min_size=g.n, max_size=g.n))
    perm = data.draw(st.permutations(range(1, k + 1)))
    c = Coloring(k, tuple(colors))
    r1 = analyze_coloring(g, c)
    r2 = analyze_coloring(g, c.relabel({i + 1: p for i, p in enumerate(perm)}))
    assert (r1.proper, r1.equitable, r1.discrepancy) == (r2.proper, r2.equitable, r2.discrepancy)
    if r1.strongly_equitable:
        assert g.n % k == 0
