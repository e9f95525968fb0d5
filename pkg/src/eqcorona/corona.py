"""Corona products ``G o H`` and corona multiproducts ``G o^l H``.

Numbering is level-order: the vertices of ``G`` keep indices ``0..n-1``;
applying one more corona step to a product with ``N`` vertices appends the
copy owned by vertex ``j`` at indices ``N + j*m .. N + j*m + m-1`` (``m = |V(H)|``),
in increasing ``j``. Older vertices never move, so a coloring of ``G o^(l-1) H``
is an index-stable prefix of a coloring of ``G o^l H``.

A vertex created at step ``s`` (``s = 0`` for ``G``) is labelled by a path of
length ``s + 1``: ``path[0]`` is the root vertex of ``G`` and ``path[i]`` is the
index inside the copy added at step ``i`` or ``None`` when the lineage does not
enter a copy at that step.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError

DEFAULT_MAX_ORDER = 2_000_000

Label = tuple[Optional[int], ...]


class CoronaTooLarge(GraphError):
    pass


@dataclass(frozen=True)
class CoronaSpec:
    G: Graph
    H: Graph
    l: int = 1

    def __post_init__(self):
        if self.l < 1:
            raise GraphError("corona exponent l must be >= 1")

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def m(self) -> int:
        return self.H.n

    def level_size(self, s: int) -> int:
        """Order of ``G o^s H`` (``s = 0`` gives ``|V(G)|``)."""
        return self.G.n * (self.H.n + 1) ** s

    @property
    def order(self) -> int:
        return self.level_size(self.l)


def corona_order(n: int, m: int, l: int) -> int:
    return n * (m + 1) ** l


def corona(G: Graph, H: Graph) -> Graph:
    return corona_power(CoronaSpec(G, H, 1))


def corona_power(spec: CoronaSpec, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    """Build ``G o^l H`` under the level-order numbering."""
    G, H, l = spec.G, spec.H, spec.l
    if max_order is not None and spec.order > max_order:
        raise CoronaTooLarge(f"order {spec.order} exceeds cap {max_order}")
    m = H.n
    h_edges = H.edges()
    adj: list[list[int]] = [list(a) for a in G.adj]
    size = G.n
    for _ in range(l):
        adj.extend([] for _ in range(size * m))
        for j in range(size):
            base = size + j * m
            owner = adj[j]
            for t in range(m):
                owner.append(base + t)
                adj[base + t].append(j)
            for a, b in h_edges:
                adj[base + a].append(base + b)
                adj[base + b].append(base + a)
        size += size * m
    name = f"{G.name or 'G'}o{'' if l == 1 else '^' + str(l)}{H.name or 'H'}"
    return Graph(size, tuple(tuple(sorted(a)) for a in adj), name)


def level_of(v: int, spec: CoronaSpec) -> int:
    if not 0 <= v < spec.order:
        raise GraphError(f"vertex {v} out of range")
    s = 0
    while v >= spec.level_size(s):
        s += 1
    return s


def owner_of(v: int, spec: CoronaSpec) -> int:
    """The vertex whose copy of ``H`` contains ``v``."""
    s = level_of(v, spec)
    if s == 0:
        raise GraphError(f"vertex {v} belongs to G and has no owner")
    if spec.m == 0:
        raise GraphError("H is empty")
    prev = spec.level_size(s - 1)
    return (v - prev) // spec.m


def copy_range(owner: int, step: int, spec: CoronaSpec) -> range:
    """Indices of the copy of ``H`` attached to ``owner`` at corona step ``step``."""
    prev = spec.level_size(step - 1)
    if not 0 <= owner < prev:
        raise GraphError(f"vertex {owner} does not exist before step {step}")
    base = prev + owner * spec.m
    return range(base, base + spec.m)


def label_of(v: int, spec: CoronaSpec) -> Label:
    s = level_of(v, spec)
    if s == 0:
        return (v,)
    prev = spec.level_size(s - 1)
    j, t = divmod(v - prev, spec.m)
    head = label_of(j, spec)
    return head + (None,) * (s - len(head)) + (t,)


def index_of(label: Sequence[Optional[int]], spec: CoronaSpec) -> int:
    path = tuple(label)
    if not path or path[0] is None or not 0 <= path[0] < spec.n:
        raise GraphError(f"malformed label {label!r}")
    s = len(path) - 1
    if s > spec.l:
        raise GraphError(f"label {label!r} deeper than l={spec.l}")
    if s == 0:
        return path[0]
    t = path[-1]
    if t is None or not 0 <= t < spec.m:
        raise GraphError(f"malformed label {label!r}")
    for x in path[1:-1]:
        if x is not None and not 0 <= x < spec.m:
            raise GraphError(f"malformed label {label!r}")
    head = list(path[:-1])
    while len(head) > 1 and head[-1] is None:
        head.pop()
    j = index_of(head, spec)
    return spec.level_size(s - 1) + j * spec.m + t


def labels(spec: CoronaSpec) -> list[Label]:
    return [label_of(v, spec) for v in range(spec.order)]
