"""Constructive equitable colorings of ``G o^l H`` for the structured factors.

Each public ``color_*`` function returns a :class:`Certificate`. Multi-level
products are colored by repeating the one-level construction on the current
product, which is valid because each one-level statement holds for every
equitably colored base graph.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

from ..corona import CoronaSpec
from ..graph import (Coloring, ColoringError, Graph, analyze_coloring,
                     complete_graph)
from .certificate import EQUALITY, UPPER_BOUND, Certificate
from .levels import (balanced_level, check_level, complete_level, rotation_level,
                     sizes_of, tail_plan_level)
from .shapes import Complete, EvenCycle, HShape, Multipartite, OddCycle, Path

K1 = complete_graph(1)


def _require_proper(G: Graph, c: Coloring) -> None:
    rep = analyze_coloring(G, c)
    if not rep.proper:
        raise ColoringError(f"coloring of G is improper on {rep.bad_edges[:3]}")


def _require_equitable(G: Graph, c: Coloring, k: int) -> None:
    if c.k != k:
        raise ColoringError(f"expected an equitable {k}-coloring, got k={c.k}")
    rep = analyze_coloring(G, c)
    if not rep.ok:
        raise ColoringError(f"coloring of G is not proper and equitable (sizes {rep.sizes})")


def _finish(G: Graph, shape: HShape, l: int, colors: list[int], K: int, theorem: str,
            claim: str, levels: list[str], **extra) -> Certificate:
    sizes = sizes_of(colors, K)
    if max(sizes) - min(sizes) > 1:
        raise AssertionError(f"{theorem} produced unbalanced sizes {sizes}")
    return Certificate(CoronaSpec(G, shape.graph(), l), Coloring(K, tuple(colors)),
                       theorem, claim, K, levels=levels, **extra)


def _step(colors: list[int], H: Graph, new: list[int]) -> list[int]:
    check_level(new, len(colors), H)
    return new


# -- complete graphs ---------------------------------------------------------

def color_complete_corona(G: Graph, cG: Coloring, m: int, l: int) -> Certificate:
    """``G o^l K_m`` with ``m + 1`` colors; every level ends strongly equitable."""
    _require_proper(G, cG)
    if max(cG.colors, default=1) > m + 1:
        raise ColoringError(f"coloring of G uses more than {m + 1} colors")
    shape = Complete(m)
    H = shape.graph()
    colors = list(cG.colors)
    for _ in range(l):
        colors = _step(colors, H, complete_level(colors, m + 1, m))
    return _finish(G, shape, l, colors, m + 1, "P1", EQUALITY, ["complete"] * l)


def complete_pattern_bound(G: Graph, cG: Coloring, shape: HShape, l: int) -> Certificate:
    """Upper bound ``m + 1`` for any ``H`` on ``m`` vertices: reuse the ``K_m`` pattern."""
    m = shape.m
    _require_proper(G, cG)
    if max(cG.colors, default=1) > m + 1:
        raise ColoringError(f"coloring of G uses more than {m + 1} colors")
    H = shape.graph()
    colors = list(cG.colors)
    for _ in range(l):
        colors = _step(colors, H, complete_level(colors, m + 1, m))
    return _finish(G, shape, l, colors, m + 1, "fallback", UPPER_BOUND, ["complete-pattern"] * l,
                   notes=[f"H is a subgraph of K_{m}; coloring reused"])


def _spread_positions(sizes: Sequence[int]) -> list[int]:
    """Colors placed on a cycle so the larger classes are evenly spread."""
    K = len(sizes)
    lo = min(sizes)
    big = [c for c in range(1, K + 1) if sizes[c - 1] > lo]
    small = [c for c in range(1, K + 1) if sizes[c - 1] == lo]
    b = len(big)
    slots = {(i * K) // b for i in range(b)}
    return [big.pop(0) if q in slots else small.pop(0) for q in range(K)]


def window_level(colors: list[int], K: int, m: int) -> list[int]:
    """Copy at position ``p`` gets the colors at positions ``p+1..p+m`` of the spread cycle.

    Every class grows by a window sum of ``m + 1`` consecutive classes, and window
    sums over an evenly spread two-valued sequence differ by at most one.
    """
    if m > K - 1:
        raise ValueError(f"{m} distinct colors needed per copy, only {K - 1} available")
    ring = _spread_positions(sizes_of(colors, K))
    pos = {c: q for q, c in enumerate(ring)}
    new = []
    for a in colors:
        p = pos[a]
        new.extend(ring[(p + t) % K] for t in range(1, m + 1))
    return colors + new


def window_pattern_bound(G: Graph, cG: Coloring, shape: HShape, l: int) -> Certificate:
    """Upper bound ``k`` from an equitable ``k``-coloring of ``G`` with ``k > m``."""
    k = cG.k
    _require_equitable(G, cG, k)
    H = shape.graph()
    colors = list(cG.colors)
    for _ in range(l):
        colors = _step(colors, H, window_level(colors, k, shape.m))
    return _finish(G, shape, l, colors, k, "fallback", UPPER_BOUND, ["window"] * l,
                   notes=[f"H is a subgraph of K_{shape.m}; cyclic window over {k} colors"])


# -- multipartite factors ----------------------------------------------------

def _padded_parts(shape: HShape, k: int) -> list[list[int]]:
    parts = [p for p in shape.parts() if p]
    if len(parts) > k - 1:
        raise ColoringError(f"H has {len(parts)} parts, at most {k - 1} allowed")
    return parts + [[] for _ in range(k - 1 - len(parts))]


def rotation_levels(colors: list[int], K: int, shape: HShape, l: int) -> list[int]:
    H = shape.graph()
    parts = _padded_parts(shape, K)
    for _ in range(l):
        colors = _step(colors, H, rotation_level(colors, K, parts, shape.m))
    return colors


def color_multipartite_corona(G: Graph, cG: Coloring, shape: HShape, l: int) -> Certificate:
    """Rotation scheme for an ``r``-partite ``H`` with ``r <= k - 1`` when ``k | n``."""
    k = cG.k
    if G.n % k:
        raise ColoringError(f"k={k} does not divide n={G.n}")
    _require_equitable(G, cG, k)
    r = len([p for p in shape.parts() if p])
    colors = rotation_levels(list(cG.colors), k, shape, l)
    tag = "T2" if r == k - 1 else "C3"
    return _finish(G, shape, l, colors, k, tag, UPPER_BOUND, ["rotation"] * l)


# -- even cycles -------------------------------------------------------------

def extend_even_cycle_3(Gcur: Graph, c3: Coloring, k: int) -> Coloring:
    """One level of ``Gcur o C_2k`` with 3 colors (``k = 2`` or ``3 | n``)."""
    colors, _ = _even3_level(list(c3.colors), EvenCycle(2 * k), Gcur.n)
    return Coloring(3, tuple(colors))


def _even3_level(colors: list[int], shape: EvenCycle, n: int) -> tuple[list[int], str]:
    sizes = sizes_of(colors, 3)
    if n % 3 == 0 and max(sizes) == min(sizes):
        return _step(colors, shape.graph(), rotation_level(colors, 3, shape.parts(), shape.m)), "rotation"
    if shape.k == 2:
        items = [[(c, 2) for c in (1, 2, 3) if c != a] for a in colors]
        new = colors + [x for it in items for x in shape.realize(it)]
        return _step(colors, shape.graph(), new), "alternate"
    raise ColoringError("three colors need k = 2 or 3 | n")


def color_even_cycle_corona_3(G: Graph, c3: Coloring, k: int, l: int) -> Certificate:
    if G.n < 2:
        raise ColoringError("G needs at least two vertices")
    if not (k == 2 or G.n % 3 == 0):
        raise ColoringError("needs k = 2 or 3 | n")
    _require_equitable(G, c3, 3)
    shape = EvenCycle(2 * k)
    colors, levels = list(c3.colors), []
    for _ in range(l):
        colors, how = _even3_level(colors, shape, len(colors))
        levels.append(how)
    return _finish(G, shape, l, colors, 3, "T4", EQUALITY, levels)


def four_color_levels(colors: list[int], shape: HShape, l: int) -> tuple[list[int], list[str], dict]:
    """Equitable 4-coloring levels for a cycle (or path) factor.

    ``4 | N``: rotation. Even cycle with ``3 | N``: the explicit mod-12 tail
    construction. Otherwise: pattern balancing.
    """
    H = shape.graph()
    levels, extra = [], {}
    for _ in range(l):
        N = len(colors)
        sizes = sizes_of(colors, 4)
        if N % 4 == 0 and max(sizes) == min(sizes) and len(shape.parts()) <= 3:
            colors = _step(colors, H, rotation_level(colors, 4, shape.parts(), shape.m))
            levels.append("rotation")
        elif isinstance(shape, EvenCycle) and shape.k >= 3 and N % 3 == 0:
            new, order, plan = tail_plan_level(colors, shape, shape.k)
            colors = _step(colors, H, new)
            levels.append(f"tail-plan p={plan.p} x={plan.x} tail={len(plan.tail)}")
            extra.setdefault("permutation", order)
        else:
            new, info = balanced_level(colors, 4, shape)
            colors = _step(colors, H, new)
            levels.append(f"balanced head={info['head_blocks']} tail={info['tail']}")
    return colors, levels, extra


def color_even_cycle_corona_4(G: Graph, c4: Coloring, k: int, l: int) -> Certificate:
    """Four colors for ``G o^l C_2k``; equality when ``3`` does not divide ``n``."""
    if k < 3:
        raise ColoringError("needs k >= 3")
    return _even_cycle_4(G, c4, k, l)


def _even_cycle_4(G: Graph, c4: Coloring, k: int, l: int) -> Certificate:
    if G.n < 2:
        raise ColoringError("G needs at least two vertices")
    _require_equitable(G, c4, 4)
    shape = EvenCycle(2 * k)
    colors, levels, extra = four_color_levels(list(c4.colors), shape, l)
    if k >= 3 and G.n % 3:
        return _finish(G, shape, l, colors, 4, "T6", EQUALITY, levels, **extra)
    return _finish(G, shape, l, colors, 4, "T5" if k >= 3 else "fallback", UPPER_BOUND, levels, **extra)


class RecurrenceResult(NamedTuple):
    sizes: tuple[int, ...]
    max_difference: int
    predicted: int


def three_color_size_recurrence(sizes0: Sequence[int], k: int, l: int) -> RecurrenceResult:
    """Class sizes of the forced 3-coloring of ``G o^l C_2k``.

    Each level maps ``|C_i|`` to ``|C_i| + k (N - |C_i|)``, so every pairwise
    difference is multiplied by ``k - 1`` in absolute value.
    """
    if len(sizes0) != 3:
        raise ValueError("need three class sizes")
    sizes = tuple(sizes0)
    for _ in range(l):
        total = sum(sizes)
        sizes = tuple(s + k * (total - s) for s in sizes)
    d0 = max(sizes0) - min(sizes0)
    return RecurrenceResult(sizes, max(sizes) - min(sizes), (k - 1) ** l * d0)


# -- odd cycles --------------------------------------------------------------

def color_odd_cycle_corona(G: Graph, c4: Coloring, k: int, l: int) -> Certificate:
    """``G o^l C_2k+1`` with exactly four colors."""
    if G.n < 2:
        raise ColoringError("G needs at least two vertices")
    _require_equitable(G, c4, 4)
    if k == 1:
        cert = color_complete_corona(G, c4, 3, l)
        cert.notes.append("C_3 = K_3")
        return cert
    shape = OddCycle(2 * k + 1)
    colors, levels, extra = four_color_levels(list(c4.colors), shape, l)
    notes = []
    if any(not lv.startswith("rotation") for lv in levels):
        notes.append("rotation needs 4 | n; balanced levels used instead")
    return _finish(G, shape, l, colors, 4, "T7", EQUALITY, levels, notes=notes, **extra)


# -- K_1 with cycles and paths (wheels and fans) -----------------------------

def _paired_rim(m: int, gap: int) -> list[int]:
    # rim vertex i and i + gap share a color; a leftover vertex gets its own
    col = [0] * m
    c = 2
    for i in range(m):
        if col[i]:
            continue
        col[i] = c
        if i + gap < m and not col[i + gap]:
            col[i + gap] = c
        c += 1
    return col


def wheel_equitable(m: int) -> Coloring:
    """Equitable coloring of ``K_1 o C_m`` (hub first) with the optimal number of colors."""
    if m < 3:
        raise ValueError("wheel needs m >= 3")
    if m == 3:
        return Coloring(4, (1, 2, 3, 4))
    gap = m // 2 if m % 2 == 0 else (m - 1) // 2
    rim = _paired_rim(m, gap)
    return Coloring(max(rim), tuple([1] + rim))


def fan_equitable(m: int) -> Coloring:
    """Equitable coloring of ``K_1 o P_m`` (hub first)."""
    if m < 1:
        raise ValueError("fan needs m >= 1")
    if m <= 2:
        return Coloring(m + 1, tuple(range(1, m + 2)))
    rim = _paired_rim(m, (m + 1) // 2)
    return Coloring(max(rim), tuple([1] + rim))


def _k1_even_cycle_l2(k: int) -> list[int]:
    """Explicit 4-coloring of ``K_1 o^2 C_2k`` (``k >= 3``)."""
    L = 2 * k
    shape = EvenCycle(L)
    ring = shape.realize([(2, -(-L // 3)), (3, -(-(L - 1) // 3)), (4, -(-(L - 2) // 3))])
    colors = [1] + ring
    lo, hi = L // 3, -(-L // 3)
    vecs = [v for v in shape.count_vectors(3) if all(lo <= x <= hi for x in v)]
    new, _ = balanced_level(colors, 4, shape, vectors=vecs, use_head=False)
    return _step(colors, shape.graph(), new)


def _k1_odd_cycle_l2(k: int) -> list[int]:
    """Explicit 4-coloring of ``K_1 o^2 C_2k+1``: every class has ``(k+1)^2`` vertices."""
    shape = OddCycle(2 * k + 1)
    colors = [1] + shape.realize([(2, k), (3, k), (4, 1)])
    table = {
        1: [(2, 1), (3, k), (4, k)],
        2: [(1, 1), (3, k), (4, k)],
        3: [(1, k), (2, k), (4, 1)],
        4: [(1, k), (2, k), (3, 1)],
    }
    new = colors + [x for a in colors for x in shape.realize(table[a])]
    return _step(colors, shape.graph(), new)


def color_k1_cycle_corona(m: int, l: int) -> Certificate:
    """``K_1 o^l C_m``: wheel for ``l = 1``; 3 colors for ``m = 4`` and 4 otherwise when ``l >= 2``."""
    if m < 3 or l < 1:
        raise ValueError("needs m >= 3 and l >= 1")
    shape = EvenCycle(m) if m % 2 == 0 else OddCycle(m)
    if m == 3:
        cert = color_complete_corona(K1, Coloring(1, (1,)), 3, l)
        cert.theorem = "E1" if l == 1 else "T8"
        cert.notes.append("C_3 = K_3")
        return cert
    if l == 1:
        w = wheel_equitable(m)
        return _finish(K1, shape, 1, list(w.colors), w.k, "E1", EQUALITY, ["wheel"])
    if m == 4:
        colors, levels = list(wheel_equitable(4).colors), ["wheel"]
        for _ in range(l - 1):
            colors, how = _even3_level(colors, shape, len(colors))
            levels.append(how)
        return _finish(K1, shape, l, colors, 3, "T8", EQUALITY, levels)
    if m % 2:
        colors = _k1_odd_cycle_l2(shape.k)
        levels = ["explicit", "explicit"]
    else:
        colors = _k1_even_cycle_l2(shape.k)
        levels = ["explicit", "balanced"]
    extra = {}
    if l > 2:
        colors, more, extra = four_color_levels(colors, shape, l - 2)
        levels += more
    return _finish(K1, shape, l, colors, 4, "T8", EQUALITY, levels, **extra)


def color_k1_path_corona(m: int, l: int) -> Certificate:
    """``K_1 o^l P_m``: fan for ``l = 1``; otherwise 3 colors for ``m <= 5`` and 4 for ``m >= 6``."""
    if m < 2 or l < 1:
        raise ValueError("needs m >= 2 and l >= 1")
    shape = Path(m)
    H = shape.graph()
    if l == 1:
        f = fan_equitable(m)
        return _finish(K1, shape, 1, list(f.colors), f.k, "FAN", EQUALITY, ["fan"])
    if m <= 5:
        # a proper 3-coloring of the fan, then balanced 3-color levels
        colors = [1] + [2 + (i % 2) for i in range(m)]
        levels = ["fan"]
        for _ in range(l - 1):
            new, how = _path3_level(colors, shape)
            colors = _step(colors, H, new)
            levels.append(how)
        return _finish(K1, shape, l, colors, 3, "T13", EQUALITY, levels)
    cyc = color_k1_cycle_corona(m, l)
    claim = EQUALITY if m % 2 == 0 else UPPER_BOUND
    return _finish(K1, shape, l, list(cyc.coloring.colors), 4, "T13", claim,
                   cyc.levels, notes=[f"coloring of K_1 o^{l} C_{m} reused"])


# -- paths with G on n >= 2 vertices ----------------------------------------

def _path3_level(colors: list[int], shape: Path) -> tuple[list[int], str]:
    m = shape.m
    N = len(colors)
    sizes = sizes_of(colors, 3)
    if N % 3 == 0 and max(sizes) == min(sizes):
        return rotation_level(colors, 3, shape.parts(), m), "rotation"
    if m == 2:
        return complete_level(colors, 3, 2), "one-of-each"
    if m == 4:
        items = [[(c, 2) for c in (1, 2, 3) if c != a] for a in colors]
        return colors + [x for it in items for x in shape.realize(it)], "alternate"
    if m in (3, 5):
        new, info = balanced_level(colors, 3, shape)
        return new, f"balanced head={info['head_blocks']} tail={info['tail']}"
    raise ColoringError(f"no 3-color level for P_{m} when 3 does not divide {N}")


def color_path_corona_3(G: Graph, c3: Coloring, m: int, l: int) -> Certificate:
    """``G o^l P_m`` with three colors for ``m`` in 2..5 or ``3 | n``."""
    if G.n < 2:
        raise ColoringError("G needs at least two vertices")
    if not (m in (2, 3, 4, 5) or G.n % 3 == 0):
        raise ColoringError("needs m in {2, 3, 4, 5} or 3 | n")
    if m < 2:
        raise ColoringError("needs m >= 2")
    _require_equitable(G, c3, 3)
    shape = Path(m)
    H = shape.graph()
    colors, levels = list(c3.colors), []
    for _ in range(l):
        new, how = _path3_level(colors, shape)
        colors = _step(colors, H, new)
        levels.append(how)
    tag = "T10" if m in (2, 3, 5) else "C9"
    return _finish(G, shape, l, colors, 3, tag, EQUALITY, levels)


def color_path_corona_4(G: Graph, c4: Coloring, m: int, l: int) -> Certificate:
    """``G o^l P_m`` (``m >= 6``) colored as ``G o^l C_m``; the path is a subgraph of the cycle."""
    if m < 6:
        raise ColoringError("needs m >= 6")
    if G.n == 1:
        return color_k1_path_corona(m, l)
    if m % 2 == 0:
        cyc = _even_cycle_4(G, c4, m // 2, l)
    else:
        cyc = color_odd_cycle_corona(G, c4, (m - 1) // 2, l)
    shape = Path(m)
    return _finish(G, shape, l, list(cyc.coloring.colors), 4, "C11", UPPER_BOUND, cyc.levels,
                   permutation=cyc.permutation,
                   notes=[f"coloring of G o^{l} C_{m} ({cyc.theorem}) reused"])


def four_color_path_levels(G: Graph, c4: Coloring, m: int, l: int) -> Certificate:
    """Four colors for short paths when only an equitable 4-coloring of ``G`` is known."""
    _require_equitable(G, c4, 4)
    shape = Path(m)
    colors, levels, extra = four_color_levels(list(c4.colors), shape, l)
    return _finish(G, shape, l, colors, 4, "fallback", UPPER_BOUND, levels, **extra)


def four_color_cycle_levels(G: Graph, c4: Coloring, length: int, l: int) -> Certificate:
    _require_equitable(G, c4, 4)
    shape = EvenCycle(length) if length % 2 == 0 else OddCycle(length)
    colors, levels, extra = four_color_levels(list(c4.colors), shape, l)
    return _finish(G, shape, l, colors, 4, "fallback", UPPER_BOUND, levels, **extra)


# -- K_1 o H for arbitrary H -------------------------------------------------

EXACT_MATCHING_MAX = 22


def _complement_matching(shape: HShape) -> tuple[list[tuple[int, int]], bool]:
    """Matching in the complement of ``H`` and whether it is maximum."""
    if isinstance(shape, Multipartite):
        pairs = []
        for part in shape.parts():
            pairs += [(part[i], part[i + 1]) for i in range(0, len(part) - 1, 2)]
        return pairs, True
    H = shape.graph()
    m = H.n
    non = [[u for u in range(m) if u != v and not H.has_edge(u, v)] for v in range(m)]
    if m > EXACT_MATCHING_MAX:
        used, pairs = set(), []
        for v in sorted(range(m), key=lambda v: len(non[v])):
            if v in used:
                continue
            u = next((u for u in non[v] if u not in used), None)
            if u is not None:
                used |= {u, v}
                pairs.append((v, u))
        return pairs, False
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[tuple[int, int], ...]:
        free = full & ~mask
        if not free:
            return ()
        v = (free & -free).bit_length() - 1
        out = best(mask | 1 << v)
        for u in non[v]:
            if not mask >> u & 1:
                cand = ((v, u),) + best(mask | 1 << v | 1 << u)
                if len(cand) > len(out):
                    out = cand
        return out

    pairs = list(best(0))
    best.cache_clear()
    return pairs, True


def color_k1_cone(shape: HShape) -> Certificate:
    """``K_1 o H``: the hub is alone in its class, so the other classes are pairs of non-adjacent vertices."""
    m = shape.m
    pairs, exact = _complement_matching(shape)
    colors = [1] + [0] * m
    c = 1
    for u, v in pairs:
        c += 1
        colors[1 + u] = colors[1 + v] = c
    for v in range(m):
        if not colors[1 + v]:
            c += 1
            colors[1 + v] = c
    return _finish(K1, shape, 1, colors, c, "fallback", EQUALITY if exact else UPPER_BOUND, ["cone"],
                   notes=[f"{len(pairs)} pairs from a {'maximum' if exact else 'greedy'} "
                          "matching of the complement of H"])
