"""DIMACS edge files and JSON coloring files (both 1-based on disk)."""
from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable

from .graph import Coloring, Graph, GraphError, build_graph


def parse_dimacs(lines: Iterable[str], name: str = "") -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) < 4 or tok[1].lower() not in ("edge", "col"):
                raise GraphError(f"line {lineno}: bad problem line {line!r}")
            n, declared_m = int(tok[2]), int(tok[3])
        elif tok[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before problem line")
            edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
        else:
            raise GraphError(f"line {lineno}: unknown line {line!r}")
    if n is None:
        raise GraphError("missing 'p edge' line")
    g = build_graph(n, edges, name)
    if declared_m is not None and declared_m not in (len(edges), g.num_edges):
        raise GraphError(f"header declares {declared_m} edges, found {len(edges)}")
    return g


def read_dimacs(path: str | Path) -> Graph:
    path = Path(path)
    with path.open() as fh:
        return parse_dimacs(fh, name=path.stem)


def format_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    if g.name:
        out.append(f"c name {g.name}")
    out.append(f"p edge {g.n} {g.num_edges}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph, dest: str | Path | IO[str], comments: Iterable[str] = ()) -> None:
    text = format_dimacs(g, comments)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)


def coloring_to_json(c: Coloring) -> dict:
    return {"k": c.k, "colors": list(c.colors)}


def coloring_from_json(obj: dict) -> Coloring:
    try:
        return Coloring(int(obj["k"]), tuple(int(x) for x in obj["colors"]))
    except KeyError as exc:
        raise ValueError(f"coloring JSON missing field {exc}") from None


def read_coloring(path: str | Path) -> Coloring:
    return coloring_from_json(json.loads(Path(path).read_text()))


def write_coloring(c: Coloring, path: str | Path) -> None:
    Path(path).write_text(json.dumps(coloring_to_json(c)) + "\n")
