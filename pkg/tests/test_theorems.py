import pytest
from hypothesis import given, settings, strategies as st

from eqcorona import oracle
from eqcorona.colorers.certificate import EQUALITY, UPPER_BOUND, Certificate
from eqcorona.colorers.levels import tail_plan
from eqcorona.colorers.shapes import General, Multipartite, Path
from eqcorona.colorers.theorems import (color_complete_corona, color_even_cycle_corona_3,
                                        color_even_cycle_corona_4, color_k1_cone, color_k1_cycle_corona,
                                        color_k1_path_corona, color_multipartite_corona,
                                        color_odd_cycle_corona, color_path_corona_3,
                                        color_path_corona_4, complete_pattern_bound,
                                        extend_even_cycle_3, fan_equitable,
                                        three_color_size_recurrence, wheel_equitable)
from eqcorona.corona import corona
from eqcorona.graph import (Coloring, ColoringError, analyze_coloring, build_graph,
                            cycle_graph, path_graph)

K1 = build_graph(1, [])
C6_EQ3 = Coloring(3, (1, 2, 3, 1, 2, 3))
P4_EQ4 = Coloring(4, (1, 2, 3, 4))


def checked(cert: Certificate) -> Certificate:
    cert.check()
    return cert


def test_complete_factor_uses_m_plus_1():
    c = checked(color_complete_corona(cycle_graph(3), Coloring(3, (1, 2, 3)), 2, 1))
    assert (c.theorem, c.claim, c.claimed_k, c.sizes) == ("P1", EQUALITY, 3, (3, 3, 3))
    assert oracle.equitable_chromatic_number(c.product()) == 3
    c = checked(color_complete_corona(cycle_graph(3), Coloring(3, (1, 2, 3)), 2, 2))
    assert c.sizes == (9, 9, 9)
    c = checked(color_complete_corona(path_graph(2), Coloring(2, (1, 2)), 1, 1))
    assert c.sizes == (2, 2)
    with pytest.raises(ColoringError):
        color_complete_corona(cycle_graph(3), Coloring(3, (1, 2, 3)), 1, 1)
    with pytest.raises(ColoringError):
        color_complete_corona(path_graph(2), Coloring(2, (1, 1)), 2, 1)


def test_pattern_bound():
    c = checked(complete_pattern_bound(cycle_graph(5), Coloring(3, (1, 2, 1, 2, 3)), Path(4), 1))
    assert (c.theorem, c.claim, c.claimed_k) == ("fallback", UPPER_BOUND, 5)


def test_rotation_examples():
    c = checked(color_multipartite_corona(cycle_graph(6), C6_EQ3, General(path_graph(3), ((0, 2), (1,))), 1))
    assert c.sizes == (8, 8, 8) and c.theorem == "T2"
    c = checked(color_multipartite_corona(cycle_graph(6), C6_EQ3, Multipartite((1, 1)), 2))
    assert c.sizes == (18, 18, 18)
    c5 = General(cycle_graph(5), ((0, 2), (1, 3), (4,)))
    c = checked(color_multipartite_corona(path_graph(4), P4_EQ4, c5, 1))
    assert c.sizes == (6, 6, 6, 6) and c.theorem == "T2"
    with pytest.raises(ColoringError):
        color_multipartite_corona(cycle_graph(5), Coloring(3, (1, 2, 1, 2, 3)), Multipartite((1, 1)), 1)


def test_extend_even_cycle_3():
    assert extend_even_cycle_3(path_graph(2), Coloring(3, (1, 2)), 2).sizes() == (3, 3, 4)
    assert extend_even_cycle_3(cycle_graph(6), C6_EQ3, 3).sizes() == (14, 14, 14)
    assert sorted(extend_even_cycle_3(cycle_graph(4), Coloring(3, (1, 2, 1, 3)), 2).sizes()) == [6, 7, 7]
    g = corona(path_graph(2), cycle_graph(4))
    assert analyze_coloring(g, extend_even_cycle_3(path_graph(2), Coloring(3, (1, 2)), 2)).ok
    with pytest.raises(ColoringError):
        extend_even_cycle_3(cycle_graph(4), Coloring(3, (1, 2, 1, 3)), 3)


def test_even_cycle_three_colors():
    c = checked(color_even_cycle_corona_3(cycle_graph(5), Coloring(3, (1, 2, 1, 2, 3)), 2, 2))
    assert c.theorem == "T4" and c.claimed_k == 3


def test_tail_plans():
    for n, tail in ((9, 5), (6, 2), (3, 3), (21, 5), (18, 2), (15, 3)):
        plan = tail_plan(n, 3)
        assert 4 * plan.x + len(plan.tail) == n and len(plan.tail) == tail
        for owner, counts in plan.tail:
            assert owner not in dict(counts) and sum(c for _, c in counts) == 6
    assert tail_plan(21, 3).x == 4  # 3p + 1 with p = 1
    with pytest.raises(ValueError):
        tail_plan(8, 3)


@pytest.mark.parametrize("G,c4", [
    (cycle_graph(9), Coloring(4, (1, 2, 3, 4, 1, 2, 3, 4, 2))),
    (cycle_graph(6), Coloring(4, (1, 2, 3, 4, 1, 2))),
    (cycle_graph(21), Coloring(4, tuple(i % 4 + 1 for i in range(20)) + (2,))),
])
def test_even_cycle_four_colors_divisible(G, c4):
    c = checked(color_even_cycle_corona_4(G, c4, 3, 1))
    assert c.theorem == "T5" and c.claim == UPPER_BOUND and c.permutation is not None
    assert sorted(c.permutation) == list(range(G.n))
    assert c.levels[0].startswith("tail-plan")


def test_even_cycle_four_colors_and_rotation():
    c = checked(color_even_cycle_corona_4(path_graph(4), P4_EQ4, 3, 2))
    assert c.theorem == "T6" and c.claim == EQUALITY and c.sizes == (49, 49, 49, 49)
    assert not oracle.is_equitably_k_colorable(corona(path_graph(4), cycle_graph(6)), 3)
    with pytest.raises(ColoringError):
        color_even_cycle_corona_4(path_graph(4), P4_EQ4, 2, 1)


def test_recurrence_examples():
    r = three_color_size_recurrence((2, 1, 1), 3, 1)
    assert r.sizes == (8, 10, 10) and r.max_difference == 2 == r.predicted
    assert three_color_size_recurrence((2, 1, 1), 3, 2).max_difference == 4
    assert three_color_size_recurrence((2, 2, 2), 5, 4).max_difference == 0
    with pytest.raises(ValueError):
        three_color_size_recurrence((1, 1), 3, 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3), st.integers(2, 6), st.integers(1, 5))
def test_recurrence_scales_difference(s0, k, l):
    r = three_color_size_recurrence(s0, k, l)
    assert r.max_difference == r.predicted
    assert sum(r.sizes) == sum(s0) * (2 * k + 1) ** l


def test_odd_cycle_four_colors():
    c = checked(color_odd_cycle_corona(path_graph(4), P4_EQ4, 2, 1))
    assert c.sizes == (6, 6, 6, 6) and c.theorem == "T7" and not c.notes
    c = checked(color_odd_cycle_corona(path_graph(3), Coloring(4, (1, 2, 3)), 1, 1))
    assert c.sizes == (3, 3, 3, 3)
    assert oracle.equitable_chromatic_number(c.product()) == 4
    c = checked(color_odd_cycle_corona(cycle_graph(5), Coloring(4, (1, 2, 3, 4, 2)), 2, 2))
    assert c.notes and c.claim == EQUALITY


def test_wheel_and_fan():
    w = wheel_equitable(4)
    assert w.k == 3 and w.classes() == [[0], [1, 3], [2, 4]]
    assert wheel_equitable(3).k == 4
    f = fan_equitable(5)
    assert f.k == 4 and sorted(f.sizes()) == [1, 1, 2, 2]
    for m in range(3, 12):
        assert analyze_coloring(corona(K1, cycle_graph(m)), wheel_equitable(m)).ok
        assert analyze_coloring(corona(K1, path_graph(m)), fan_equitable(m)).ok
        assert wheel_equitable(m).k == (4 if m == 3 else -(-m // 2) + 1)
        assert fan_equitable(m).k == -(-m // 2) + 1


def test_k1_cycles():
    assert checked(color_k1_cycle_corona(5, 1)).claimed_k == 4
    c = checked(color_k1_cycle_corona(4, 2))
    assert c.claimed_k == 3 and c.theorem == "T8"
    c = checked(color_k1_cycle_corona(5, 2))
    assert c.sizes == (9, 9, 9, 9)
    for m in (6, 7, 8):
        assert checked(color_k1_cycle_corona(m, 2)).claimed_k == 4
    assert checked(color_k1_cycle_corona(6, 3)).claimed_k == 4


def test_k1_paths():
    assert checked(color_k1_path_corona(5, 1)).claimed_k == 4
    c = checked(color_k1_path_corona(3, 2))
    assert c.claimed_k == 3 and c.theorem == "T13" and c.sizes == (6, 5, 5)
    c = checked(color_k1_path_corona(6, 2))
    assert (c.claimed_k, c.claim) == (4, EQUALITY)
    assert checked(color_k1_path_corona(7, 2)).claim == UPPER_BOUND


def test_path_routes():
    c = checked(color_path_corona_3(path_graph(2), Coloring(3, (1, 2)), 2, 1))
    assert c.sizes == (2, 2, 2) and c.theorem == "T10"
    c = checked(color_path_corona_3(path_graph(2), Coloring(3, (1, 2)), 5, 1))
    assert c.sizes == (4, 4, 4)
    c = checked(color_path_corona_3(cycle_graph(6), C6_EQ3, 3, 2))
    assert len(set(c.sizes)) == 1
    assert checked(color_path_corona_3(cycle_graph(6), C6_EQ3, 7, 1)).theorem == "C9"
    with pytest.raises(ColoringError):
        color_path_corona_3(cycle_graph(5), Coloring(3, (1, 2, 1, 2, 3)), 6, 1)
    c = checked(color_path_corona_4(path_graph(4), P4_EQ4, 7, 1))
    assert c.theorem == "C11" and c.product().n == 32
    with pytest.raises(ColoringError):
        color_path_corona_4(path_graph(4), P4_EQ4, 5, 1)


def test_certificate_json_round_trip():
    c = color_even_cycle_corona_4(cycle_graph(9), Coloring(4, (1, 2, 3, 4, 1, 2, 3, 4, 2)), 3, 1)
    back = Certificate.from_json(c.to_json())
    assert back.coloring == c.coloring and back.permutation == c.permutation
    assert back.spec.G.edges() == c.spec.G.edges() and back.theorem == "T5"
    back.check()
    with pytest.raises(ValueError):
        Certificate(c.spec, c.coloring, "T99", EQUALITY, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda m: st.tuples(
    st.just(m), st.sets(st.tuples(st.integers(0, m - 1), st.integers(0, m - 1))))))
def test_k1_cone_matches_oracle(data):
    import networkx as nx
    from oracles import equitable_chromatic_number, nx_corona
    m, pairs = data
    edges = sorted({(min(u, v), max(u, v)) for u, v in pairs if u != v})
    H = build_graph(m, edges)
    cert = checked(color_k1_cone(General(H, tuple((v,) for v in range(m)))))
    ref = nx.Graph()
    ref.add_nodes_from(range(m))
    ref.add_edges_from(edges)
    K = nx.Graph()
    K.add_node(0)
    assert cert.claim == EQUALITY
    assert cert.claimed_k == equitable_chromatic_number(nx_corona(K, ref))


def test_k1_cone_multipartite_closed_form():
    cert = checked(color_k1_cone(Multipartite((2, 2, 1))))
    assert (cert.claim, cert.claimed_k) == (EQUALITY, 4)
    cert = checked(color_k1_cone(Multipartite((3, 4))))
    assert cert.claimed_k == 8 - 1 - 2
