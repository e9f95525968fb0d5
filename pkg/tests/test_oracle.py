import networkx as nx
import pytest

from eqcorona import oracle
from eqcorona.colorers.theorems import three_color_size_recurrence
from eqcorona.corona import CoronaSpec, corona
from eqcorona.graph import (Coloring, ColoringError, analyze_coloring, build_graph,
                            complete_graph, complete_multipartite, cycle_graph, path_graph)
from oracles import equitable_chromatic_number as ref_chi_eq, nx_corona

K1 = build_graph(1, [])


def test_chromatic_number_examples():
    assert oracle.chromatic_number(cycle_graph(5)) == 3
    assert oracle.chromatic_number(complete_graph(4)) == 4
    assert oracle.chromatic_number(corona(cycle_graph(3), complete_graph(2))) == 3
    assert oracle.chromatic_number(complete_graph(4), cap=3) is None
    assert oracle.chromatic_number(build_graph(3, [])) == 1


def test_equitable_examples():
    k33 = complete_multipartite((3, 3))
    assert oracle.is_equitably_k_colorable(k33, 2)
    assert not oracle.is_equitably_k_colorable(k33, 3)
    res = oracle.is_equitably_k_colorable(cycle_graph(4), 3)
    assert res and sorted(res.witness.sizes()) == [1, 1, 2]
    assert oracle.equitable_chromatic_number(k33) == 2


@pytest.mark.parametrize("m,expected", [(3, 4), (5, 4), (8, 5)])
def test_wheels(m, expected):
    assert oracle.equitable_chromatic_number(corona(K1, cycle_graph(m))) == expected


def test_witnesses_are_valid():
    g = corona(path_graph(4), cycle_graph(5))
    for k in range(3, 7):
        res = oracle.is_equitably_k_colorable(g, k)
        if res:
            assert analyze_coloring(g, res.witness).ok and res.witness.k == k


def test_deterministic_witness():
    g = corona(cycle_graph(5), path_graph(4))
    a = oracle.is_equitably_k_colorable(g, 3).witness
    b = oracle.is_equitably_k_colorable(g, 3).witness
    assert a == b


@pytest.mark.parametrize("G,H", [
    (path_graph(2), path_graph(5)), (path_graph(3), cycle_graph(3)),
    (cycle_graph(5), path_graph(3)), (path_graph(4), complete_graph(2)),
    (complete_multipartite((2, 3)), path_graph(2)),
])
def test_chi_eq_against_reference(G, H):
    g = corona(G, H)
    ref = nx_corona(nx.Graph(G.edges()) if G.num_edges else nx.empty_graph(G.n), nx.Graph(H.edges()))
    ref.add_nodes_from(range(g.n))
    k = oracle.equitable_chromatic_number(g)
    assert k == ref_chi_eq(ref)
    assert oracle.chromatic_number(g) <= k <= max(g.degree(v) for v in range(g.n)) + 1


def test_limit_and_env(monkeypatch):
    big = cycle_graph(70)
    with pytest.raises(oracle.SearchLimitExceeded):
        oracle.chromatic_number(big)
    monkeypatch.setenv("COLORER_LIMIT", "80")
    assert oracle.chromatic_number(big) == 2
    with pytest.raises(oracle.SearchLimitExceeded):
        oracle.is_equitably_k_colorable(big, 2, limit=10)


def test_timeout_raises():
    g = nx.convert_node_labels_to_integers(nx.mycielski_graph(6))
    G = build_graph(g.number_of_nodes(), g.edges())
    with pytest.raises(oracle.SearchTimeout):
        oracle.find_proper_coloring(G, 5, timeout=0.0)


def test_forced_sizes_examples():
    base = Coloring(3, (1, 2, 3, 1))
    spec = CoronaSpec(path_graph(4), cycle_graph(6), 1)
    assert sorted(oracle.forced_three_coloring_sizes_for(spec, base)) == [8, 10, 10]
    spec2 = CoronaSpec(path_graph(4), cycle_graph(6), 2)
    s2 = oracle.forced_three_coloring_sizes_for(spec2, base)
    assert max(s2) - min(s2) == 4 and sum(s2) == 196
    assert tuple(s2) == three_color_size_recurrence((2, 1, 1), 3, 2).sizes
    even = oracle.forced_three_coloring_sizes_for(CoronaSpec(cycle_graph(6), cycle_graph(6), 1),
                                                 Coloring(3, (1, 2, 3, 1, 2, 3)))
    assert len(set(even)) == 1


def test_forced_sizes_errors():
    spec = CoronaSpec(path_graph(3), cycle_graph(5), 1)
    with pytest.raises(ValueError):
        oracle.forced_three_coloring_sizes_for(spec, Coloring(3, (1, 2, 3)))
    spec = CoronaSpec(path_graph(3), cycle_graph(4), 1)
    with pytest.raises(ColoringError):
        oracle.forced_three_coloring_sizes_for(spec, Coloring(3, (1, 1, 2)))


def test_cycle_order():
    assert oracle.cycle_order(cycle_graph(5)) == [0, 1, 2, 3, 4] or \
        oracle.cycle_order(cycle_graph(5)) == [0, 4, 3, 2, 1]
    with pytest.raises(ValueError):
        oracle.cycle_order(path_graph(4))
