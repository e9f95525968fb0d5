"""Compare the compiled and pure-Python search kernels on fixed instances.

Both kernels must return identical results; the script exits 1 otherwise.
"""
import argparse
import json
import random
import sys
import time

from eqcorona import _search_py
from eqcorona.colorers.shapes import shape_from_kind
from eqcorona.corona import CoronaSpec, corona_power
from eqcorona.graph import complete_multipartite, cycle_graph, path_graph

try:
    from eqcorona import _search as _search_c
except ImportError:
    _search_c = None


def mycielski(i):
    """Adjacency lists of the Mycielski graph M_i (M_2 = K_2)."""
    adj = [[1], [0]]
    for _ in range(i - 2):
        n = len(adj)
        new = [list(a) for a in adj] + [[] for _ in range(n + 1)]
        for v in range(n):
            for u in adj[v]:
                new[n + v].append(u)
                new[u].append(n + v)
            new[n + v].append(2 * n)
            new[2 * n].append(n + v)
        adj = new
    return [sorted(a) for a in adj]


def random_graph(n, p, seed):
    rng = random.Random(seed)
    adj = [[] for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u].append(v)
                adj[v].append(u)
    return adj


def corona_adj(G, kind, size, l):
    g = corona_power(CoronaSpec(G, shape_from_kind(kind, size).graph(), l))
    return [list(a) for a in g.adj]


def instances(quick):
    out = [
        ("mycielski-5 proper k=4", mycielski(5), 4, False),
        ("K_{3,3,3,3} equitable k=3", [list(a) for a in complete_multipartite((3, 3, 3, 3)).adj], 3, True),
        ("C5 o^2 C4 equitable k=2", corona_adj(cycle_graph(5), "cycle", "4", 2), 2, True),
        ("P3 o^2 P5 equitable k=3", corona_adj(path_graph(3), "path", "5", 2), 3, True),
        ("G(40, 0.3) equitable k=5", random_graph(40, 0.3, 1), 5, True),
    ]
    if not quick:
        out.append(("mycielski-6 proper k=5", mycielski(6), 5, False))
    return out


def timed(fn, adj, k, eq, repeat, timeout):
    best, res = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        res = fn(adj, k, eq, timeout)
        best = min(best, time.perf_counter() - t)
    return best, res


def _key(res):
    status, colors, nodes = res
    return status, None if colors is None else list(colors), nodes


STATUS = {1: "found", 0: "exhausted", -1: "timeout"}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--timeout", type=float, default=120.0)
    ap.add_argument("--quick", action="store_true", help="skip the slowest instance")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rows, mismatch = [], False
    for name, adj, k, eq in instances(args.quick):
        tp, rp = timed(_search_py.search, adj, k, eq, args.repeat, args.timeout)
        row = {"instance": name, "n": len(adj), "k": k, "status": STATUS[rp[0]],
               "nodes": rp[2], "python_s": round(tp, 4), "cython_s": None, "speedup": None}
        if _search_c is not None:
            tc, rc = timed(_search_c.search, adj, k, eq, args.repeat, args.timeout)
            row.update(cython_s=round(tc, 4), speedup=round(tp / tc, 1) if tc > 0 else None)
            if -1 not in (rp[0], rc[0]) and _key(rp) != _key(rc):
                mismatch = True
        rows.append(row)

    if args.json:
        json.dump(rows, sys.stdout, indent=1)
        print()
    else:
        print(f"{'instance':32} {'n':>4} {'k':>2} {'status':>9} {'nodes':>9} "
              f"{'python s':>9} {'cython s':>9} {'speedup':>8}")
        for r in rows:
            cs = "-" if r["cython_s"] is None else f"{r['cython_s']:.4f}"
            sp = "-" if r["speedup"] is None else f"{r['speedup']}x"
            print(f"{r['instance']:32} {r['n']:>4} {r['k']:>2} {r['status']:>9} {r['nodes']:>9} "
                  f"{r['python_s']:>9.4f} {cs:>9} {sp:>8}")
        if _search_c is None:
            print("compiled kernel not available; python timings only")
    if mismatch:
        print("kernels disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
