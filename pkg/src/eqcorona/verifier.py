"""Certificate validation, ECC checks and the value-table survey."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from . import oracle
from .colorers.certificate import EQUALITY, Certificate
from .colorers.dispatch import NoRoute, dispatch
from .colorers.shapes import (Complete, EvenCycle, HShape, Multipartite, OddCycle,
                              Path, describe)
from .corona import CoronaSpec
from .graph import Coloring, ColoringError, Graph, GraphError, analyze_coloring, cycle_graph, max_degree, path_graph

CONFIRMED = "confirmed"
REFUTED = "refuted"
SKIPPED_SIZE = "not verified (size)"
SKIPPED_TIME = "not verified (timeout)"
NOT_NEEDED = "n/a"


@dataclass
class VerifyReport:
    proper: bool
    equitable: bool
    k_matches: bool
    sizes: tuple[int, ...]
    bad_edges: list[tuple[int, int]]
    claim: str
    claimed_k: int
    lower_bound: str = NOT_NEEDED
    smaller_witness: Optional[int] = None
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.proper and self.equitable and self.k_matches and self.lower_bound != REFUTED

    def to_json(self) -> dict:
        d = asdict(self)
        d["bad_edges"] = [[u + 1, v + 1] for u, v in self.bad_edges[:20]]
        d["passed"] = self.passed
        return d


def verify_certificate(product: Graph, cert: Certificate, *, limit: int | None = None,
                       timeout: float | None = oracle.DEFAULT_TIMEOUT) -> VerifyReport:
    """Check a certificate against ``product``; failures are recorded, never raised."""
    c = cert.coloring
    if c.n != product.n:
        return VerifyReport(False, False, False, c.sizes(), [], cert.claim, cert.claimed_k,
                            messages=[f"coloring covers {c.n} vertices, product has {product.n}"])
    rep = analyze_coloring(product, c)
    out = VerifyReport(rep.proper, rep.equitable, c.k == cert.claimed_k, rep.sizes,
                       list(rep.bad_edges), cert.claim, cert.claimed_k)
    if not rep.proper:
        out.messages.append(f"{len(rep.bad_edges)} improper edges")
    if not rep.equitable:
        out.messages.append(f"class sizes {rep.sizes} differ by {rep.discrepancy}")
    if not out.k_matches:
        out.messages.append(f"coloring declares {c.k} colors, claim is {cert.claimed_k}")
    if cert.claim != EQUALITY or not out.passed:
        return out
    limit = oracle.default_limit() if limit is None else limit
    if product.n > limit:
        out.lower_bound = SKIPPED_SIZE
        return out
    try:
        chi = oracle.chromatic_number(product, cap=cert.claimed_k, limit=limit, timeout=timeout)
        for j in range(chi or cert.claimed_k, cert.claimed_k):
            if oracle.is_equitably_k_colorable(product, j, limit=limit, timeout=timeout):
                out.lower_bound = REFUTED
                out.smaller_witness = j
                out.messages.append(f"product is equitably {j}-colorable")
                return out
    except oracle.SearchTimeout:
        out.lower_bound = SKIPPED_TIME
        return out
    out.lower_bound = CONFIRMED
    return out


def check_ecc(product: Graph, k_used: int) -> bool:
    """``k_used <= Delta``, with complete graphs and odd cycles exempt."""
    if not product.is_connected():
        raise GraphError("ECC applies to connected graphs only")
    if product.is_complete() or (product.is_cycle() and product.n % 2 == 1):
        return True
    return k_used <= max_degree(product)


# value table ----------------------------------------------------------------

COLUMNS = ("bipartite", "even_k2", "even_k3+", "odd_cycle", "path_2_5", "path_6+")

# (row, 3 | n) -> column -> cell; "=v" is an exact value, "<=v" a bound, None blank
VALUE_TABLE = {
    ("eq3", True): {"bipartite": "=3", "even_k2": "=3", "even_k3+": "=3", "odd_cycle": "=4",
                    "path_2_5": "=3", "path_6+": "=3"},
    ("eq3", False): {"bipartite": None, "even_k2": "=3", "even_k3+": "=4", "odd_cycle": "=4",
                     "path_2_5": "=3", "path_6+": "=4"},
    ("eq4", True): {"bipartite": "<=4", "even_k2": "<=4", "even_k3+": "<=4", "odd_cycle": "=4",
                    "path_2_5": "<=4", "path_6+": "<=4"},
    ("eq4", False): {"bipartite": None, "even_k2": "<=4", "even_k3+": "=4", "odd_cycle": "=4",
                     "path_2_5": "<=4", "path_6+": "<=4"},
}


def value_table_column(shape: HShape) -> Optional[str]:
    if isinstance(shape, Complete):
        return {2: "bipartite", 3: "odd_cycle"}.get(shape.size)
    if isinstance(shape, EvenCycle):
        return "even_k2" if shape.length == 4 else "even_k3+"
    if isinstance(shape, OddCycle):
        return "odd_cycle"
    if isinstance(shape, Path):
        if shape.size >= 6:
            return "path_6+"
        return "path_2_5" if shape.size >= 2 else None
    if isinstance(shape, Multipartite) and len(shape.sizes) == 2:
        return "bipartite"
    return None


def value_table_cell(row: str, divisible: bool, column: Optional[str]) -> Optional[str]:
    if column is None:
        return None
    return VALUE_TABLE[(row, divisible)][column]


def cell_matches(cell: Optional[str], claim: str, k: int) -> bool:
    if cell is None:
        return True
    if cell.startswith("<="):
        return k <= int(cell[2:])
    return claim == EQUALITY and k == int(cell[1:])


@dataclass(frozen=True)
class SurveyItem:
    name: str
    G: Graph
    colorings: tuple[Coloring, ...]
    row: str
    shape: HShape
    l: int


def bundled_suite() -> list[SurveyItem]:
    Gs = [
        ("P3", path_graph(3), Coloring(3, (1, 2, 3)), "eq3"),
        ("C5", cycle_graph(5), Coloring(3, (1, 2, 1, 2, 3)), "eq3"),
        ("P4", path_graph(4), Coloring(4, (1, 2, 3, 4)), "eq4"),
        ("C6", cycle_graph(6), Coloring(3, (1, 2, 3, 1, 2, 3)), "eq3"),
    ]
    Hs = [Path(s) for s in range(2, 7)] + [EvenCycle(4), EvenCycle(6), OddCycle(5),
                                           Complete(2), Complete(3)]
    return [SurveyItem(name, G, (c,), row, shape, l)
            for name, G, c, row in Gs for shape in Hs for l in (1, 2)]


def _h_name(shape: HShape) -> str:
    d = describe(shape)
    letter = {"complete": "K", "even_cycle": "C", "odd_cycle": "C", "path": "P"}.get(d["kind"], d["kind"])
    return f"{letter}{d.get('size', '')}"


def survey_row(item: SurveyItem, *, limit: int | None = None,
               timeout: float | None = oracle.DEFAULT_TIMEOUT) -> dict:
    """One survey row; timeouts and missing routes become row statuses."""
    n = item.G.n
    column = value_table_column(item.shape)
    cell = value_table_cell(item.row, n % 3 == 0, column)
    row = {"G": item.name, "H": _h_name(item.shape), "l": item.l, "n": n,
           "order": CoronaSpec(item.G, item.shape.graph(), item.l).order,
           "row": item.row, "column": column, "cell": cell, "theorem": None, "claim": None,
           "k": None, "oracle": None, "lower_bound": None, "verified": None,
           "ecc": None, "match": False, "status": "ok"}
    try:
        cert = dispatch(item.G, item.colorings, item.shape, item.l, limit=limit, timeout=timeout)
        product = cert.product()
        rep = verify_certificate(product, cert, limit=limit, timeout=timeout)
        row.update(theorem=cert.theorem, claim=cert.claim, k=cert.claimed_k,
                   lower_bound=rep.lower_bound, verified=rep.passed)
        if rep.lower_bound == CONFIRMED:
            row["oracle"] = cert.claimed_k
        elif product.n <= (oracle.default_limit() if limit is None else limit):
            row["oracle"] = oracle.equitable_chromatic_number(product, limit=limit, timeout=timeout)
        ok_oracle = row["oracle"] is None or (
            row["oracle"] == cert.claimed_k if cert.claim == EQUALITY else row["oracle"] <= cert.claimed_k)
        row["ecc"] = check_ecc(product, cert.claimed_k) if product.is_connected() else None
        row["match"] = bool(rep.passed and ok_oracle and cell_matches(cell, cert.claim, cert.claimed_k)
                            and row["ecc"] is not False)
    except oracle.SearchTimeout as exc:
        row["status"] = f"timeout: {exc}"
    except (NoRoute, ColoringError, GraphError, oracle.OracleError) as exc:
        row["status"] = f"error: {exc}"
    return row


def _row_star(args):
    item, limit, timeout = args
    return survey_row(item, limit=limit, timeout=timeout)


def survey_table(config: Iterable[SurveyItem], *, jobs: int = 1, limit: int | None = None,
                 timeout: float | None = oracle.DEFAULT_TIMEOUT) -> list[dict]:
    """Rows in input order; ``jobs > 1`` runs rows in worker processes."""
    items = [(it, limit, timeout) for it in config]
    if jobs <= 1:
        return [_row_star(a) for a in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_star, items))


CSV_FIELDS = ("G", "H", "l", "n", "order", "row", "column", "cell", "theorem", "claim", "k",
              "oracle", "lower_bound", "verified", "ecc", "match", "status")


def rows_to_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r.get(k) is None else r.get(k)) for k in CSV_FIELDS})
    return buf.getvalue()
