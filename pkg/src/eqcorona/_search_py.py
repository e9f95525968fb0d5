"""Pure-Python backtracking kernel (fallback for the compiled ``_search`` module).

Both kernels explore the same tree in the same order, so they return the same
witness for the same input.
"""
from __future__ import annotations

import time

FOUND, EXHAUSTED, TIMED_OUT = 1, 0, -1
_CHECK_EVERY = 4096


class _Timeout(Exception):
    pass


def search(adj, k, equitable, timeout=None):
    """Look for a proper (optionally equitable) ``k``-coloring.

    ``adj`` is a sequence of neighbor lists. Returns ``(status, colors, nodes)``
    with 0-based colors, ``colors`` being ``None`` unless ``status == FOUND``.
    """
    n = len(adj)
    if n == 0:
        return FOUND, [], 0
    if k <= 0:
        return EXHAUSTED, None, 0
    deadline = None if timeout is None else time.monotonic() + timeout
    deg = [len(a) for a in adj]
    lo, rem = divmod(n, k)
    color = [-1] * n
    forb = [[0] * k for _ in range(n)]
    dom = [k] * n
    size = [0] * k
    avail = [n] * k
    st = {"used": 0, "nceil": 0, "nodes": 0}

    def pick():
        best = -1
        bd = k + 1
        bdeg = -1
        for v in range(n):
            if color[v] < 0:
                d = dom[v]
                if d < bd or (d == bd and deg[v] > bdeg):
                    best, bd, bdeg = v, d, deg[v]
        return best

    def dfs(depth):
        if depth == n:
            return True
        st["nodes"] += 1
        if deadline is not None and st["nodes"] % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Timeout
        v = pick()
        fv = forb[v]
        top = min(st["used"] + 1, k)
        for c in range(top):
            if fv[c]:
                continue
            if equitable:
                s = size[c]
                if s > lo or (s == lo and (rem == 0 or st["nceil"] >= rem)):
                    continue
            # assign
            color[v] = c
            size[c] += 1
            ceil_hit = equitable and size[c] == lo + 1
            if ceil_hit:
                st["nceil"] += 1
            prev_used = st["used"]
            if c == prev_used:
                st["used"] = prev_used + 1
            for d in range(k):
                if fv[d] == 0:
                    avail[d] -= 1
            ok = True
            for u in adj[v]:
                if color[u] < 0:
                    fu = forb[u]
                    fu[c] += 1
                    if fu[c] == 1:
                        dom[u] -= 1
                        avail[c] -= 1
                        if dom[u] == 0:
                            ok = False
            if ok and equitable:
                for d in range(k):
                    if size[d] + avail[d] < lo:
                        ok = False
                        break
            if ok and dfs(depth + 1):
                return True
            # undo
            for u in adj[v]:
                if color[u] < 0:
                    fu = forb[u]
                    fu[c] -= 1
                    if fu[c] == 0:
                        dom[u] += 1
                        avail[c] += 1
            for d in range(k):
                if fv[d] == 0:
                    avail[d] += 1
            st["used"] = prev_used
            if ceil_hit:
                st["nceil"] -= 1
            size[c] -= 1
            color[v] = -1
        return False

    try:
        found = dfs(0)
    except _Timeout:
        return TIMED_OUT, None, st["nodes"]
    return (FOUND, list(color), st["nodes"]) if found else (EXHAUSTED, None, st["nodes"])
