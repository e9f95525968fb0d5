# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; mirrors ``_search_py.search`` step for step."""
from libc.stdlib cimport malloc, calloc, free
import time

FOUND, EXHAUSTED, TIMED_OUT = 1, 0, -1
DEF CHECK_EVERY = 16384


cdef class _Kernel:
    cdef int n, k, lo, rem, used, nceil, equitable, timed_out
    cdef long long nodes
    cdef double deadline
    cdef int *off
    cdef int *nbr
    cdef int *deg
    cdef int *color
    cdef int *forb
    cdef int *dom
    cdef int *size
    cdef int *avail

    def __cinit__(self, adj, int k, bint equitable, timeout):
        cdef int n = len(adj)
        cdef int i, j, total = 0
        self.n = n
        self.k = k
        self.equitable = equitable
        self.lo = n // k
        self.rem = n % k
        self.used = 0
        self.nceil = 0
        self.nodes = 0
        self.timed_out = 0
        self.deadline = -1.0 if timeout is None else time.monotonic() + timeout
        for a in adj:
            total += len(a)
        self.off = <int *> malloc((n + 1) * sizeof(int))
        self.nbr = <int *> malloc((total + 1) * sizeof(int))
        self.deg = <int *> malloc((n + 1) * sizeof(int))
        self.color = <int *> malloc((n + 1) * sizeof(int))
        self.forb = <int *> calloc(n * k + 1, sizeof(int))
        self.dom = <int *> malloc((n + 1) * sizeof(int))
        self.size = <int *> calloc(k + 1, sizeof(int))
        self.avail = <int *> malloc((k + 1) * sizeof(int))
        if (self.off == NULL or self.nbr == NULL or self.deg == NULL or self.color == NULL
                or self.forb == NULL or self.dom == NULL or self.size == NULL or self.avail == NULL):
            raise MemoryError()
        j = 0
        for i in range(n):
            self.off[i] = j
            a = adj[i]
            self.deg[i] = len(a)
            for u in a:
                self.nbr[j] = u
                j += 1
            self.color[i] = -1
            self.dom[i] = k
        self.off[n] = j
        for i in range(k):
            self.avail[i] = n

    def __dealloc__(self):
        free(self.off)
        free(self.nbr)
        free(self.deg)
        free(self.color)
        free(self.forb)
        free(self.dom)
        free(self.size)
        free(self.avail)

    cdef int pick(self):
        cdef int v, d, best = -1, bd = self.k + 1, bdeg = -1
        for v in range(self.n):
            if self.color[v] < 0:
                d = self.dom[v]
                if d < bd or (d == bd and self.deg[v] > bdeg):
                    best = v
                    bd = d
                    bdeg = self.deg[v]
        return best

    cdef int dfs(self, int depth) except -2:
        cdef int v, c, d, u, e, s, top, prev_used, ok, ceil_hit, k = self.k, lo = self.lo
        cdef int *fv
        if depth == self.n:
            return 1
        self.nodes += 1
        if self.deadline >= 0 and self.nodes % CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                self.timed_out = 1
                return 0
        v = self.pick()
        fv = self.forb + v * k
        top = self.used + 1
        if top > k:
            top = k
        for c in range(top):
            if fv[c]:
                continue
            if self.equitable:
                s = self.size[c]
                if s > lo or (s == lo and (self.rem == 0 or self.nceil >= self.rem)):
                    continue
            self.color[v] = c
            self.size[c] += 1
            ceil_hit = self.equitable and self.size[c] == lo + 1
            if ceil_hit:
                self.nceil += 1
            prev_used = self.used
            if c == prev_used:
                self.used = prev_used + 1
            for d in range(k):
                if fv[d] == 0:
                    self.avail[d] -= 1
            ok = 1
            for e in range(self.off[v], self.off[v + 1]):
                u = self.nbr[e]
                if self.color[u] < 0:
                    self.forb[u * k + c] += 1
                    if self.forb[u * k + c] == 1:
                        self.dom[u] -= 1
                        self.avail[c] -= 1
                        if self.dom[u] == 0:
                            ok = 0
            if ok and self.equitable:
                for d in range(k):
                    if self.size[d] + self.avail[d] < lo:
                        ok = 0
                        break
            if ok and self.dfs(depth + 1):
                return 1
            if self.timed_out:
                return 0
            for e in range(self.off[v], self.off[v + 1]):
                u = self.nbr[e]
                if self.color[u] < 0:
                    self.forb[u * k + c] -= 1
                    if self.forb[u * k + c] == 0:
                        self.dom[u] += 1
                        self.avail[c] += 1
            for d in range(k):
                if fv[d] == 0:
                    self.avail[d] += 1
            self.used = prev_used
            if ceil_hit:
                self.nceil -= 1
            self.size[c] -= 1
            self.color[v] = -1
        return 0

    def run(self):
        cdef int found = self.dfs(0)
        if self.timed_out:
            return TIMED_OUT, None, self.nodes
        if found:
            return FOUND, [self.color[i] for i in range(self.n)], self.nodes
        return EXHAUSTED, None, self.nodes


def search(adj, k, equitable, timeout=None):
    """Look for a proper (optionally equitable) ``k``-coloring; see ``_search_py.search``."""
    if len(adj) == 0:
        return FOUND, [], 0
    if k <= 0:
        return EXHAUSTED, None, 0
    return _Kernel(adj, k, equitable, timeout).run()
