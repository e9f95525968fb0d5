"""Simple undirected graphs, standard families and coloring analysis.

Vertices are dense integers ``0..n-1``. Colors are ``1..k``.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency lists are sorted
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def is_cycle(self) -> bool:
        return self.n >= 3 and all(len(a) == 2 for a in self.adj) and self.is_connected()

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.num_edges}>"


def build_graph(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), name)


def path_graph(m: int) -> Graph:
    if m < 1:
        raise GraphError("path needs m >= 1")
    return build_graph(m, [(i, i + 1) for i in range(m - 1)], f"P{m}")


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError("cycle needs m >= 3")
    return build_graph(m, [(i, (i + 1) % m) for i in range(m)], f"C{m}")


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise GraphError("complete graph needs m >= 1")
    return build_graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)], f"K{m}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be >= 1")
    start = [0]
    for s in sizes:
        start.append(start[-1] + s)
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(start[a], start[a + 1]):
                for v in range(start[b], start[b + 1]):
                    edges.append((u, v))
    return build_graph(start[-1], edges, "K" + ",".join(map(str, sizes)))


def wheel_graph(m: int) -> Graph:
    """Hub 0 joined to the cycle ``1..m``."""
    rim = cycle_graph(m)
    return build_graph(m + 1, [(0, v + 1) for v in range(m)] + [(u + 1, v + 1) for u, v in rim.edges()],
                       f"W{m}")


def fan_graph(m: int) -> Graph:
    """Hub 0 joined to the path ``1..m``."""
    rim = path_graph(m)
    return build_graph(m + 1, [(0, v + 1) for v in range(m)] + [(u + 1, v + 1) for u, v in rim.edges()],
                       f"F{m}")


def graph_family(kind: str, *params) -> Graph:
    """Construct ``path``, ``cycle``, ``complete``, ``wheel``, ``fan`` or ``complete_multipartite``."""
    if kind == "wheel":
        return wheel_graph(*params)
    if kind == "fan":
        return fan_graph(*params)
    if kind == "path":
        return path_graph(*params)
    if kind == "cycle":
        return cycle_graph(*params)
    if kind == "complete":
        return complete_graph(*params)
    if kind in ("complete_multipartite", "multipartite"):
        sizes = params[0] if len(params) == 1 and not isinstance(params[0], int) else params
        return complete_multipartite(tuple(sizes))
    raise GraphError(f"unknown graph family {kind!r}")


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors ``1..k`` to vertices; classes may be empty."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ColoringError("k must be >= 1")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ColoringError(f"color {bad[0]} outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Iterable[int], k: int | None = None) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        if k is None:
            k = max(colors, default=1)
        return cls(k, colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def sizes(self) -> tuple[int, ...]:
        cnt = Counter(self.colors)
        return tuple(cnt.get(c, 0) for c in range(1, self.k + 1))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def relabel(self, mapping: dict[int, int], k: int | None = None) -> "Coloring":
        return Coloring(self.k if k is None else k, tuple(mapping[c] for c in self.colors))


@dataclass(frozen=True)
class ColoringReport:
    proper: bool
    sizes: tuple[int, ...]
    discrepancy: int
    equitable: bool
    strongly_equitable: bool
    bad_edges: tuple[tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.proper and self.equitable


def analyze_coloring(g: Graph, c: Coloring) -> ColoringReport:
    if c.n != g.n:
        raise ColoringError(f"coloring covers {c.n} vertices, graph has {g.n}")
    col = c.colors
    bad = tuple((u, v) for u in range(g.n) for v in g.adj[u] if u < v and col[u] == col[v])
    sizes = c.sizes()
    disc = max(sizes) - min(sizes)
    return ColoringReport(
        proper=not bad,
        sizes=sizes,
        discrepancy=disc,
        equitable=disc <= 1,
        strongly_equitable=disc == 0,
        bad_edges=bad,
    )


def is_equitable(g: Graph, c: Coloring) -> bool:
    return analyze_coloring(g, c).ok
