"""Exact decision procedures for small graphs.

All searches share one backtracking kernel (see ``_kernel``). Instances larger
than the vertex limit are refused rather than attempted.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from . import _kernel
from .corona import CoronaSpec, corona_power
from .graph import Coloring, ColoringError, Graph, analyze_coloring, max_degree

DEFAULT_TIMEOUT = 30.0


def default_limit() -> int:
    return int(os.environ.get("COLORER_LIMIT", "64"))


class OracleError(RuntimeError):
    pass


class SearchLimitExceeded(OracleError):
    pass


class SearchTimeout(OracleError):
    pass


@dataclass(frozen=True)
class EquitableResult:
    colorable: bool
    witness: Optional[Coloring] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.colorable


def _check_size(g: Graph, limit: int | None) -> None:
    limit = default_limit() if limit is None else limit
    if g.n > limit:
        raise SearchLimitExceeded(f"{g.n} vertices exceeds search limit {limit}")


def _run(g: Graph, k: int, equitable: bool, timeout: float | None):
    status, colors, nodes = _kernel.search(g.adj, k, equitable, timeout)
    if status == _kernel.TIMED_OUT:
        raise SearchTimeout(f"no decision for k={k} on {g!r} after {nodes} nodes")
    if status == _kernel.FOUND:
        return Coloring(k, tuple(c + 1 for c in colors)), nodes
    return None, nodes


def find_proper_coloring(g: Graph, k: int, *, limit: int | None = None,
                         timeout: float | None = DEFAULT_TIMEOUT) -> Optional[Coloring]:
    _check_size(g, limit)
    return _run(g, k, False, timeout)[0]


def chromatic_number(g: Graph, cap: int | None = None, *, limit: int | None = None,
                     timeout: float | None = DEFAULT_TIMEOUT) -> Optional[int]:
    """Smallest ``k <= cap`` with a proper ``k``-coloring, or ``None`` if it exceeds ``cap``."""
    _check_size(g, limit)
    if g.n == 0:
        return 0
    cap = g.n if cap is None else cap
    start = 1 if g.num_edges == 0 else 2
    for k in range(start, cap + 1):
        if _run(g, k, False, timeout)[0] is not None:
            return k
    return None


def is_equitably_k_colorable(g: Graph, k: int, *, limit: int | None = None,
                             timeout: float | None = DEFAULT_TIMEOUT) -> EquitableResult:
    _check_size(g, limit)
    witness, nodes = _run(g, k, True, timeout)
    return EquitableResult(witness is not None, witness, nodes)


def equitable_coloring_min(g: Graph, *, limit: int | None = None,
                           timeout: float | None = DEFAULT_TIMEOUT) -> tuple[int, Coloring]:
    """Equitable chromatic number together with a witness coloring.

    Every ``k`` from ``chi(G)`` upward is tested; equitable colorability is not
    monotone in ``k``.
    """
    _check_size(g, limit)
    if g.n == 0:
        raise OracleError("empty graph")
    chi = chromatic_number(g, limit=limit, timeout=timeout)
    for k in range(chi, max_degree(g) + 2):
        res = is_equitably_k_colorable(g, k, limit=limit, timeout=timeout)
        if res:
            return k, res.witness
    # unreachable by the Hajnal-Szemeredi theorem
    raise OracleError(f"no equitable coloring with <= {max_degree(g) + 1} colors")


def equitable_chromatic_number(g: Graph, *, limit: int | None = None,
                               timeout: float | None = DEFAULT_TIMEOUT) -> int:
    return equitable_coloring_min(g, limit=limit, timeout=timeout)[0]


def cycle_order(h: Graph) -> list[int]:
    """Vertices of a cycle graph in traversal order starting at 0."""
    if not h.is_cycle():
        raise ValueError(f"{h!r} is not a cycle")
    order = [0]
    prev, cur = -1, 0
    while True:
        a, b = h.adj[cur]
        nxt = a if a != prev else b
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def forced_three_coloring_sizes(product: Graph, base3: Coloring, spec: CoronaSpec) -> tuple[int, ...]:
    """Class sizes of the 3-coloring of ``G o^l C_2k`` forced by a 3-coloring of ``G``.

    Each copy of the even cycle sees its owner's color and must alternate the
    other two; the propagation is done vertex by vertex on ``product`` and every
    step is checked against the already colored neighbors.
    """
    H = spec.H
    if not (H.is_cycle() and H.n % 2 == 0):
        raise ValueError("H must be an even cycle")
    if base3.k != 3 or base3.n != spec.G.n:
        raise ColoringError("base coloring must be a 3-coloring of G")
    if not analyze_coloring(spec.G, base3).proper:
        raise ColoringError("base coloring is not proper")
    if product.n != spec.order:
        raise ValueError(f"product has {product.n} vertices, expected {spec.order}")
    order = cycle_order(H)
    m = H.n
    col = list(base3.colors) + [0] * (product.n - spec.G.n)
    for s in range(1, spec.l + 1):
        prev = spec.level_size(s - 1)
        for j in range(prev):
            base = prev + j * m
            for t in order:
                v = base + t
                taken = {col[u] for u in product.adj[v]}
                free = [c for c in (1, 2, 3) if c not in taken]
                if not free:
                    raise ColoringError(f"propagation stuck at vertex {v}")
                col[v] = free[0]
    result = Coloring(3, tuple(col))
    if not analyze_coloring(product, result).proper:
        raise ColoringError("propagated coloring is not proper")
    return result.sizes()


def forced_three_coloring_sizes_for(spec: CoronaSpec, base3: Coloring) -> tuple[int, ...]:
    return forced_three_coloring_sizes(corona_power(spec), base3, spec)
