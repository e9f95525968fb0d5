"""Structured descriptions of the corona factor ``H``.

Each shape knows its canonical graph, a partition into independent sets, and
(for cycles, paths and complete graphs) which color-count vectors one copy can
realize and how to realize them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Optional, Sequence

from ..graph import (Graph, complete_graph, complete_multipartite, cycle_graph,
                     path_graph)
from .fill import (cycle_count_vectors, cycle_fill, distinct_count_vectors,
                   path_count_vectors, path_fill)


class ShapeError(ValueError):
    pass


class HShape:
    kind = "general"

    @property
    def m(self) -> int:
        return self.graph().n

    def graph(self) -> Graph:
        raise NotImplementedError

    def parts(self) -> list[list[int]]:
        raise NotImplementedError

    def count_vectors(self, ncolors: int) -> Optional[list[tuple[int, ...]]]:
        return None

    def realize(self, items: Sequence[tuple[Hashable, int]]) -> list[Hashable]:
        raise ShapeError(f"{self} cannot realize count vectors")

    def head_vector(self, ncolors: int) -> Optional[tuple[int, ...]]:
        vecs = self.count_vectors(ncolors)
        if not vecs:
            return None
        # the most even vector spreads every block of copies uniformly
        return min(vecs, key=lambda v: (max(v) - min(v), [-x for x in v]))


@dataclass(frozen=True)
class Complete(HShape):
    size: int
    kind = "complete"

    def graph(self):
        return complete_graph(self.size)

    def parts(self):
        return [[v] for v in range(self.size)]

    def count_vectors(self, ncolors):
        return distinct_count_vectors(self.size, ncolors)

    def realize(self, items):
        seq = [col for col, c in items for _ in range(c)]
        if len(seq) != self.size or any(c > 1 for _, c in items):
            raise ShapeError(f"K_{self.size} needs {self.size} distinct colors, got {items}")
        return seq


@dataclass(frozen=True)
class _Cycle(HShape):
    length: int

    def __post_init__(self):
        self._validate()

    def _validate(self):
        if self.length < 3:
            raise ShapeError(f"cycle needs length >= 3, got {self.length}")

    def graph(self):
        return cycle_graph(self.length)

    def count_vectors(self, ncolors):
        return cycle_count_vectors(self.length, ncolors)

    def realize(self, items):
        return cycle_fill(self.length, items)


class EvenCycle(_Cycle):
    kind = "even_cycle"

    def _validate(self):
        if self.length < 4 or self.length % 2:
            raise ShapeError(f"even cycle needs even length >= 4, got {self.length}")

    @property
    def k(self) -> int:
        return self.length // 2

    def parts(self):
        return [list(range(0, self.length, 2)), list(range(1, self.length, 2))]

    def head_vector(self, ncolors):
        k = self.k
        if ncolors == 2:
            return (k, k)
        if ncolors == 3:
            return (k, (k + 1) // 2, k // 2)
        return super().head_vector(ncolors)


class OddCycle(_Cycle):
    kind = "odd_cycle"

    def _validate(self):
        if self.length < 3 or self.length % 2 == 0:
            raise ShapeError(f"odd cycle needs odd length >= 3, got {self.length}")

    @property
    def k(self) -> int:
        return (self.length - 1) // 2

    def parts(self):
        last = self.length - 1
        return [list(range(0, last, 2)), list(range(1, last, 2)), [last]]

    def head_vector(self, ncolors):
        if ncolors == 3:
            return (self.k, self.k, 1)
        return super().head_vector(ncolors)


@dataclass(frozen=True)
class Path(HShape):
    size: int
    kind = "path"

    def __post_init__(self):
        if self.size < 1:
            raise ShapeError("path needs at least one vertex")

    def graph(self):
        return path_graph(self.size)

    def parts(self):
        if self.size == 1:
            return [[0]]
        return [list(range(0, self.size, 2)), list(range(1, self.size, 2))]

    def count_vectors(self, ncolors):
        return path_count_vectors(self.size, ncolors)

    def realize(self, items):
        return path_fill(self.size, items)


@dataclass(frozen=True)
class Multipartite(HShape):
    sizes: tuple[int, ...]
    kind = "multipartite"

    def __post_init__(self):
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise ShapeError("part sizes must be positive")

    def graph(self):
        return complete_multipartite(self.sizes)

    def parts(self):
        out, start = [], 0
        for s in self.sizes:
            out.append(list(range(start, start + s)))
            start += s
        return out


@dataclass(frozen=True)
class General(HShape):
    """Any graph together with a partition of its vertices into independent sets."""

    H: Graph
    independent_parts: tuple[tuple[int, ...], ...]
    kind = "general"

    def __post_init__(self):
        seen = sorted(v for p in self.independent_parts for v in p)
        if seen != list(range(self.H.n)):
            raise ShapeError("parts must cover every vertex of H exactly once")
        for p in self.independent_parts:
            ps = set(p)
            if any(u in ps for v in p for u in self.H.adj[v]):
                raise ShapeError(f"part {p} is not independent")

    def graph(self):
        return self.H

    def parts(self):
        return [list(p) for p in self.independent_parts]


def shape_from_kind(kind: str, size) -> HShape:
    """Map CLI-style ``(kind, size)`` to a shape."""
    if kind == "complete":
        return Complete(int(size))
    if kind == "cycle":
        size = int(size)
        return EvenCycle(size) if size % 2 == 0 else OddCycle(size)
    if kind == "path":
        return Path(int(size))
    if kind == "multipartite":
        if isinstance(size, str):
            size = [int(x) for x in size.split(",") if x]
        elif isinstance(size, int):
            size = [size]
        return Multipartite(tuple(int(x) for x in size))
    raise ShapeError(f"unknown H kind {kind!r}")


def shape_from_graph(H: Graph, parts: Sequence[Sequence[int]] | None = None) -> HShape:
    """Recognize canonically numbered families; anything else becomes ``General``."""
    m = H.n
    if m >= 1 and H == complete_graph(m):
        return Complete(m)
    if m >= 3 and H == cycle_graph(m):
        return EvenCycle(m) if m % 2 == 0 else OddCycle(m)
    if m >= 1 and H == path_graph(m):
        return Path(m)
    if parts is None:
        parts = _greedy_parts(H)
    return General(H, tuple(tuple(p) for p in parts))


def _greedy_parts(H: Graph) -> list[list[int]]:
    color = [0] * H.n
    for v in sorted(range(H.n), key=lambda v: (-H.degree(v), v)):
        taken = {color[u] for u in H.adj[v]}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    k = max(color, default=0)
    return [[v for v in range(H.n) if color[v] == c] for c in range(1, k + 1)]


def describe(shape: HShape) -> dict:
    if isinstance(shape, (Complete, Path)):
        return {"kind": shape.kind, "size": shape.size}
    if isinstance(shape, _Cycle):
        return {"kind": shape.kind, "size": shape.length}
    if isinstance(shape, Multipartite):
        return {"kind": shape.kind, "size": list(shape.sizes)}
    return {"kind": "general", "parts": [list(p) for p in shape.parts()]}
