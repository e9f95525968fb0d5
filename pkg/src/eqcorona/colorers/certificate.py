from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..corona import CoronaSpec, corona_power
from ..graph import Coloring, Graph, analyze_coloring, build_graph

THEOREM_TAGS = ("P1", "T2", "C3", "T4", "T5", "T6", "T7", "T8", "E1", "C9",
                "T10", "C11", "T13", "FAN", "fallback")
EQUALITY = "equality"
UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class TailPlan:
    """Explicit tail of the 4-color even-cycle level construction when ``3 | n``.

    ``n = 12p + r`` with ``r`` in (9, 6, 3); the first ``4x`` copies follow the
    rotating pattern and the remaining copies use ``tail`` (owner color,
    ``{color: count}``) in sorted color names.
    """

    n: int
    k: int
    p: int
    x: int
    tail: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]


@dataclass
class Certificate:
    spec: CoronaSpec
    coloring: Coloring
    theorem: str
    claim: str
    claimed_k: int
    permutation: Optional[list[int]] = None
    levels: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.theorem not in THEOREM_TAGS:
            raise ValueError(f"unknown theorem tag {self.theorem!r}")
        if self.claim not in (EQUALITY, UPPER_BOUND):
            raise ValueError(f"unknown claim {self.claim!r}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return self.coloring.sizes()

    def product(self) -> Graph:
        return corona_power(self.spec)

    def check(self, product: Graph | None = None) -> None:
        """Raise ``AssertionError`` unless the coloring is proper, equitable, with ``claimed_k`` colors."""
        g = self.product() if product is None else product
        rep = analyze_coloring(g, self.coloring)
        assert rep.proper, f"{self.theorem}: improper edges {rep.bad_edges[:5]}"
        assert rep.equitable, f"{self.theorem}: class sizes {rep.sizes} not equitable"
        assert self.coloring.k == self.claimed_k, "declared colors differ from claimed k"

    def to_json(self) -> dict:
        G, H = self.spec.G, self.spec.H
        return {
            "theorem": self.theorem,
            "claim": self.claim,
            "k": self.claimed_k,
            "l": self.spec.l,
            "G": {"n": G.n, "edges": [[u + 1, v + 1] for u, v in G.edges()]},
            "H": {"n": H.n, "edges": [[u + 1, v + 1] for u, v in H.edges()]},
            "sizes": list(self.sizes),
            "colors": list(self.coloring.colors),
            "permutation": None if self.permutation is None else [v + 1 for v in self.permutation],
            "levels": list(self.levels),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        G = build_graph(obj["G"]["n"], [(u - 1, v - 1) for u, v in obj["G"]["edges"]])
        H = build_graph(obj["H"]["n"], [(u - 1, v - 1) for u, v in obj["H"]["edges"]])
        perm = obj.get("permutation")
        return cls(
            spec=CoronaSpec(G, H, int(obj["l"])),
            coloring=Coloring(int(obj["k"]), tuple(obj["colors"])),
            theorem=obj["theorem"],
            claim=obj["claim"],
            claimed_k=int(obj["k"]),
            permutation=None if perm is None else [v - 1 for v in perm],
            levels=list(obj.get("levels", [])),
            notes=list(obj.get("notes", [])),
        )
