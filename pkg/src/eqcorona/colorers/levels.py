"""One corona level at a time.

Every function here takes the flat color list of the current product (colors
``1..K``, level-order numbering) and returns the color list of the product with
one more copy of ``H`` attached to every vertex.
"""
from __future__ import annotations

import sys
from collections import Counter
from typing import Optional, Sequence

from .certificate import TailPlan
from .shapes import HShape

Items = list[tuple[int, int]]


class BalanceError(RuntimeError):
    pass


def sizes_of(colors: Sequence[int], K: int) -> list[int]:
    cnt = Counter(colors)
    return [cnt.get(c, 0) for c in range(1, K + 1)]


def check_level(colors: Sequence[int], N: int, H) -> None:
    """Structural properness of the newest level: copies avoid the owner color and respect ``H``."""
    m = H.n
    h_edges = H.edges()
    for j in range(N):
        base = N + j * m
        a = colors[j]
        for t in range(m):
            if colors[base + t] == a:
                raise AssertionError(f"copy of vertex {j} reuses the owner color {a}")
        for u, v in h_edges:
            if colors[base + u] == colors[base + v]:
                raise AssertionError(f"copy of vertex {j} has a monochromatic edge")


def complete_level(colors: list[int], K: int, m: int) -> list[int]:
    """Copy at a vertex colored ``a`` gets the first ``m`` colors of ``{1..K} - {a}``."""
    if m > K - 1:
        raise ValueError(f"K_{m} copies need at least {m + 1} colors")
    new = []
    for a in colors:
        new.extend([c for c in range(1, K + 1) if c != a][:m])
    return colors + new


def rotation_level(colors: list[int], K: int, parts: Sequence[Sequence[int]], m: int) -> list[int]:
    """Part ``X_j`` of the copy at a vertex of color ``i`` gets color ``i - j`` (mod ``K``)."""
    if len(parts) > K - 1:
        raise ValueError(f"{len(parts)} parts do not fit into {K} colors")
    N = len(colors)
    new = [0] * (N * m)
    for j, a in enumerate(colors):
        base = j * m
        for idx, part in enumerate(parts, 1):
            c = (a - idx - 1) % K + 1
            for t in part:
                new[base + t] = c
    return colors + new


def items_level(colors: list[int], shape: HShape, items_per_copy: Sequence[Items]) -> list[int]:
    new = []
    for items in items_per_copy:
        new.extend(shape.realize(items))
    return colors + new


def _sorted_color_names(sizes: Sequence[int]) -> list[int]:
    return sorted(range(1, len(sizes) + 1), key=lambda c: (-sizes[c - 1], c))


def interleaved_order(colors: Sequence[int], K: int) -> tuple[list[int], list[int]]:
    """Vertices ordered so the ``i``-th one has sorted color ``i mod K`` while possible.

    Returns ``(order, names)`` where ``names[i]`` is the original color playing
    the role of sorted color ``i + 1`` (non-increasing class sizes).
    """
    names = _sorted_color_names(sizes_of(colors, K))
    buckets = {c: [] for c in names}
    for v, c in enumerate(colors):
        buckets[c].append(v)
    order = []
    depth = max(len(b) for b in buckets.values())
    for b in range(depth):
        for c in names:
            if b < len(buckets[c]):
                order.append(buckets[c][b])
    return order, names


def tail_plan(n: int, k: int) -> TailPlan:
    """Copy-count table for the last copies when ``3 | n`` and ``4`` does not divide ``n``."""
    if n % 3 or n % 4 == 0:
        raise ValueError(f"tail plan needs 3 | n and 4 not dividing n, got n={n}")
    up, dn = (k + 1) // 2, k // 2
    r = n % 12
    if r == 9:
        tail = ((1, ((2, k), (3, up), (4, dn))),
                (2, ((1, k), (4, up), (3, dn))),
                (3, ((1, k), (4, k))),
                (4, ((2, k), (3, up), (1, dn))),
                (1, ((3, k), (4, up), (2, dn))))
    elif r == 6:
        tail = ((1, ((2, k), (3, up), (4, dn))),
                (2, ((1, k), (4, up), (3, dn))))
    else:
        tail = ((1, ((3, k), (4, up), (2, dn))),
                (2, ((1, k), (4, up), (3, dn))),
                (3, ((2, k), (4, up), (1, dn))))
    x, rest = divmod(n - len(tail), 4)
    assert rest == 0
    return TailPlan(n=n, k=k, p=n // 12, x=x, tail=tail)


def tail_plan_level(colors: list[int], shape: HShape, k: int) -> tuple[list[int], list[int], TailPlan]:
    """Explicit 4-color level for ``C_2k`` copies when the current order is ``12p + 9|6|3``.

    Returns the extended colors, the vertex order used and the tail plan.
    """
    N = len(colors)
    sizes = sizes_of(colors, 4)
    if max(sizes) - min(sizes) > 1:
        raise ValueError("input 4-coloring is not equitable")
    plan = tail_plan(N, k)
    order, names = interleaved_order(colors, 4)
    to_orig = {i + 1: names[i] for i in range(4)}
    up, dn = (k + 1) // 2, k // 2
    per_owner: dict[int, Items] = {}
    for i, v in enumerate(order[: 4 * plan.x]):
        c = i % 4 + 1
        per_owner[v] = [(c % 4 + 1, k), ((c + 1) % 4 + 1, up), ((c + 2) % 4 + 1, dn)]
    for (owner_c, counts), v in zip(plan.tail, order[4 * plan.x:]):
        if to_orig[owner_c] != colors[v]:
            raise AssertionError("tail owner colors do not follow the interleaved order")
        per_owner[v] = list(counts)
    items = [[(to_orig[c], cnt) for c, cnt in per_owner[v]] for v in range(N)]
    return items_level(colors, shape, items), order, plan


def _solve_tail(start: list[int], owners: list[int], options: dict[int, list], K: int,
                target: tuple[int, int], budget: int) -> Optional[list[int]]:
    """Choose one option per owner so the final sizes all land in ``{lo, lo+1}``.

    Exact depth-first search over per-copy choices with memoized dead states.
    """
    lo, _ = target
    hi = lo + 1
    t = len(owners)
    maxadd = [[0] * K for _ in range(t + 1)]
    for i in range(t - 1, -1, -1):
        best = [max(opt[0][d] for opt in options[owners[i]]) for d in range(K)]
        maxadd[i] = [maxadd[i + 1][d] + best[d] for d in range(K)]
    dead: set = set()
    picks = [0] * t
    nodes = [0]

    def rec(i: int, sizes: tuple) -> bool:
        if i == t:
            return True
        key = (i, sizes)
        if key in dead:
            return False
        nodes[0] += 1
        if nodes[0] > budget:
            raise BalanceError("tail search budget exhausted")
        for oi, (add, _) in enumerate(options[owners[i]]):
            new = tuple(s + a for s, a in zip(sizes, add))
            if any(s > hi for s in new):
                continue
            nxt = maxadd[i + 1]
            if any(new[d] + nxt[d] < lo for d in range(K)):
                continue
            picks[i] = oi
            if rec(i + 1, new):
                return True
        dead.add(key)
        return False

    limit = sys.getrecursionlimit()
    if t + 100 > limit:
        sys.setrecursionlimit(t + 200)
    try:
        ok = rec(0, tuple(start))
    finally:
        sys.setrecursionlimit(limit)
    return picks if ok else None


def balanced_level(colors: list[int], K: int, shape: HShape,
                   vectors: Optional[Sequence[tuple[int, ...]]] = None,
                   head: Optional[tuple[int, ...]] = None,
                   use_head: bool = True,
                   budget: int = 200_000) -> tuple[list[int], dict]:
    """Equitable ``K``-coloring of one more level by pattern balancing.

    Owners are taken in interleaved color order. The first ``K*x`` copies use a
    rotating ``head`` vector, which adds the same amount to every color; the
    remaining copies choose among ``vectors`` by exact search so that the final
    class sizes differ by at most one. ``x`` is decreased until the tail search
    succeeds.
    """
    N = len(colors)
    m = shape.m
    vectors = list(vectors) if vectors is not None else shape.count_vectors(K - 1)
    if not vectors:
        raise BalanceError(f"{shape} has no realizable count vectors with {K - 1} colors")
    if use_head and head is None:
        head = shape.head_vector(K - 1)
    sizes = sizes_of(colors, K)
    order, names = interleaved_order(colors, K)
    pos = {c: i for i, c in enumerate(names)}
    target = divmod(N * (m + 1), K)

    def others(a: int) -> list[int]:
        return [c for c in range(1, K + 1) if c != a]

    options: dict[int, list] = {}
    for a in range(1, K + 1):
        opts = []
        oc = others(a)
        for vec in vectors:
            add = [0] * K
            for c, cnt in zip(oc, vec):
                add[c - 1] += cnt
            opts.append((tuple(add), [(c, cnt) for c, cnt in zip(oc, vec)]))
        options[a] = opts

    xmax = min(sizes) if use_head and head is not None else 0
    for x in range(xmax, -1, -1):
        nhead = K * x
        tail_owners = order[nhead:]
        if len(tail_owners) > 4000:
            break
        start = [s + x * m for s in sizes]
        try:
            picks = _solve_tail(start, [colors[v] for v in tail_owners], options, K, target, budget)
        except BalanceError:
            continue
        if picks is None:
            continue
        per_owner: dict[int, Items] = {}
        for v in order[:nhead]:
            i = pos[colors[v]]
            per_owner[v] = [(names[(i + 1 + d) % K], head[d]) for d in range(K - 1)]
        for v, oi in zip(tail_owners, picks):
            per_owner[v] = options[colors[v]][oi][1]
        items = [per_owner[v] for v in range(N)]
        return items_level(colors, shape, items), {"head_blocks": x, "tail": len(tail_owners)}
    raise BalanceError(f"no equitable {K}-coloring found for the next level of {shape}")
