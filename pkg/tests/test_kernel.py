import importlib
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from eqcorona import _kernel, _search_py
from eqcorona.graph import build_graph
from oracles import equitably_colorable

try:
    from eqcorona import _search as _compiled
except ImportError:
    _compiled = None

needs_compiled = pytest.mark.skipif(_compiled is None, reason="compiled kernel not built")


@st.composite
def adjs(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=25)) if pairs else []
    return build_graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(adjs(), st.integers(1, 5), st.booleans())
def test_python_kernel_against_reference(g, k, eq):
    status, colors, _ = _search_py.search(g.adj, k, eq)
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    if eq:
        assert (status == _search_py.FOUND) == equitably_colorable(ref, k)
    if status == _search_py.FOUND:
        assert all(colors[u] != colors[v] for u, v in g.edges())
        if eq:
            sizes = [colors.count(c) for c in range(k)]
            assert max(sizes) - min(sizes) <= 1


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(adjs(14), st.integers(1, 5), st.booleans())
def test_compiled_matches_python(g, k, eq):
    a = _search_py.search(g.adj, k, eq)
    b = _compiled.search(g.adj, k, eq)
    assert a[0] == b[0] and a[1] == b[1] and a[2] == b[2]


def test_edge_cases():
    for impl in filter(None, [_search_py, _compiled]):
        assert impl.search((), 3, True)[0] == _search_py.FOUND
        assert impl.search(((),), 0, False)[0] == _search_py.EXHAUSTED


def mycielski_adj(i):
    g = nx.convert_node_labels_to_integers(nx.mycielski_graph(i))
    return tuple(tuple(sorted(g[v])) for v in range(g.number_of_nodes()))


def test_timeout_reported():
    # chi(M_6) = 6; refuting 5 colors takes a few hundred thousand nodes
    adj = mycielski_adj(6)
    for impl in filter(None, [_search_py, _compiled]):
        status, colors, nodes = impl.search(adj, 5, False, 0.0)
        assert status == _search_py.TIMED_OUT and colors is None


def test_mycielski_refutation_agrees():
    adj = mycielski_adj(5)
    for impl in filter(None, [_search_py, _compiled]):
        assert impl.search(adj, 4, False)[0] == _search_py.EXHAUSTED
        assert impl.search(adj, 5, False)[0] == _search_py.FOUND


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("EQCORONA_PURE_PYTHON", "1")
    mod = importlib.reload(_kernel)
    try:
        assert mod.BACKEND == "python" and mod.search is _search_py.search
    finally:
        monkeypatch.delenv("EQCORONA_PURE_PYTHON")
        importlib.reload(_kernel)
    assert _kernel.BACKEND == ("cython" if _compiled else "python")
