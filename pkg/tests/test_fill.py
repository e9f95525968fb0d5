from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from eqcorona.colorers.fill import (InfeasibleCounts, compositions, cycle_count_vectors,
                                    cycle_feasible, cycle_fill, distinct_count_vectors,
                                    path_count_vectors, path_feasible, path_fill)


def cyclic_ok(seq):
    return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def test_cycle_examples():
    s = cycle_fill(6, {"a": 3, "b": 2, "c": 1})
    assert cyclic_ok(s) and Counter(s) == {"a": 3, "b": 2, "c": 1}
    assert cycle_fill(6, {"a": 3, "b": 3}) in (list("ababab"), list("bababa"))
    with pytest.raises(InfeasibleCounts):
        cycle_fill(4, {"a": 3, "b": 1})


def test_path_examples():
    assert path_fill(3, {"a": 2, "b": 1}) == list("aba")
    assert path_fill(5, {"a": 3, "b": 2}) == list("ababa")
    assert path_fill(2, {"a": 1, "b": 1}) == list("ab")
    with pytest.raises(InfeasibleCounts):
        path_fill(4, {"a": 3, "b": 1})


def test_two_color_cycle_needs_halves():
    assert not cycle_feasible(6, (4, 2))
    assert not cycle_feasible(5, (3, 2))
    assert cycle_feasible(5, (2, 2, 1))
    with pytest.raises(InfeasibleCounts):
        cycle_fill(5, [(1, 3), (2, 2)])


def test_vector_enumeration():
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert cycle_count_vectors(4, 2) == [(2, 2)]
    assert set(path_count_vectors(3, 2)) == {(2, 1), (1, 2)}
    assert sorted(distinct_count_vectors(2, 3)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


@st.composite
def feasible(draw, kind):
    L = draw(st.integers(3 if kind == "cycle" else 1, 24))
    parts = draw(st.integers(1, 5))
    cap = L // 2 if kind == "cycle" else (L + 1) // 2
    counts = [0] * parts
    for _ in range(L):
        i = draw(st.integers(0, parts - 1))
        counts[i] += 1
    ok = cycle_feasible(L, counts) if kind == "cycle" else path_feasible(L, counts)
    return L, counts, ok, cap


@settings(max_examples=300)
@given(feasible("cycle"))
def test_cycle_fill_fuzz(case):
    L, counts, ok, _ = case
    if not ok:
        with pytest.raises(InfeasibleCounts):
            cycle_fill(L, list(enumerate(counts)))
        return
    seq = cycle_fill(L, list(enumerate(counts)))
    assert len(seq) == L and cyclic_ok(seq)
    assert all(seq.count(i) == c for i, c in enumerate(counts))


@settings(max_examples=300)
@given(feasible("path"))
def test_path_fill_fuzz(case):
    L, counts, ok, _ = case
    if not ok:
        with pytest.raises(InfeasibleCounts):
            path_fill(L, list(enumerate(counts)))
        return
    seq = path_fill(L, list(enumerate(counts)))
    assert all(seq[i] != seq[i + 1] for i in range(L - 1))
    assert all(seq.count(i) == c for i, c in enumerate(counts))
