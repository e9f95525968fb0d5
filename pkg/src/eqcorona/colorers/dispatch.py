"""Pick the strongest applicable construction for ``G o^l H``.

Preference: equality with 3 colors, equality with 4, bounds with 4, then the
generic ``m + 1`` bound. Ties keep the listing order below.
"""
from __future__ import annotations

from typing import Callable, Iterable, Optional

from ..graph import Coloring, ColoringError, Graph, analyze_coloring
from .. import oracle
from .certificate import EQUALITY, UPPER_BOUND, Certificate
from .shapes import Complete, EvenCycle, HShape, OddCycle, Path
from .theorems import (color_complete_corona, color_even_cycle_corona_3,
                       color_even_cycle_corona_4, color_k1_cone, color_k1_cycle_corona,
                       color_k1_path_corona, color_multipartite_corona,
                       color_odd_cycle_corona, color_path_corona_3,
                       color_path_corona_4, complete_pattern_bound,
                       four_color_cycle_levels, four_color_path_levels,
                       window_pattern_bound)


class NoRoute(RuntimeError):
    pass


class Colorings:
    """Known colorings of ``G``; missing equitable ones may be filled in by the oracle."""

    def __init__(self, G: Graph, colorings: Iterable[Coloring] = (), *, use_oracle: bool = True,
                 limit: int | None = None, timeout: float | None = oracle.DEFAULT_TIMEOUT):
        self.G = G
        self.proper: list[Coloring] = []
        self.equitable: dict[int, Coloring] = {}
        self.notes: list[str] = []
        self._oracle_ok = use_oracle and G.n <= (oracle.default_limit() if limit is None else limit)
        self._limit, self._timeout = limit, timeout
        self._asked: set[int] = set()
        for c in colorings:
            rep = analyze_coloring(G, c)
            if not rep.proper:
                raise ColoringError("supplied coloring of G is improper")
            self.proper.append(c)
            if rep.equitable:
                self.equitable.setdefault(c.k, c)
        if not self.proper:
            if G.n == 1:
                self.proper.append(Coloring(1, (1,)))
            elif self._oracle_ok:
                self._fill_from_oracle()

    def _fill_from_oracle(self) -> None:
        chi = oracle.chromatic_number(self.G, limit=self._limit, timeout=self._timeout)
        for k in sorted({chi, 3, 4}):
            if k >= chi:
                self._ask(k)
        if not self.equitable:
            k, wit = oracle.equitable_coloring_min(self.G, limit=self._limit, timeout=self._timeout)
            self.equitable[k] = wit
        self.proper.extend(self.equitable.values())
        if not self.proper:
            c = oracle.find_proper_coloring(self.G, chi, limit=self._limit, timeout=self._timeout)
            self.proper.append(c)
        self.notes.append("colorings of G computed by the oracle")

    def _ask(self, k: int) -> Optional[Coloring]:
        if k in self._asked or not self._oracle_ok:
            return self.equitable.get(k)
        self._asked.add(k)
        res = oracle.is_equitably_k_colorable(self.G, k, limit=self._limit, timeout=self._timeout)
        if res:
            self.equitable[k] = res.witness
        return self.equitable.get(k)

    def eq(self, k: int) -> Optional[Coloring]:
        return self.equitable.get(k)

    def eq_or_oracle(self, k: int) -> Optional[Coloring]:
        """Equitable ``k``-coloring, asking the oracle only if some coloring was supplied but not this one."""
        c = self.equitable.get(k)
        if c is None and self._oracle_ok and k not in self._asked:
            c = self._ask(k)
            if c is not None:
                self.notes.append(f"equitable {k}-coloring of G computed by the oracle")
        return c

    def at_most(self, k: int) -> Optional[Coloring]:
        """A proper coloring using colors from ``1..k`` only, with the fewest colors."""
        best = None
        for c in self.proper:
            used = max(c.colors, default=1)
            if used <= k and (best is None or used < max(best.colors, default=1)):
                best = c
        return best


Builder = Callable[[], Certificate]


def _candidates(G: Graph, av: Colorings, shape: HShape, l: int):
    """Yield ``(claim, k, tag, builder)`` in listing order."""
    n, m = G.n, shape.m

    def p1(mm: int):
        c = av.at_most(mm + 1)
        if c is not None:
            yield EQUALITY, mm + 1, "P1", lambda: color_complete_corona(G, c, mm, l)

    def rotations():
        for k, c in sorted(av.equitable.items()):
            parts = [p for p in shape.parts() if p]
            if k >= 2 and n % k == 0 and len(parts) <= k - 1:
                yield UPPER_BOUND, k, "C3", lambda c=c: color_multipartite_corona(G, c, shape, l)

    if n == 1:
        if isinstance(shape, Complete):
            yield from p1(shape.size)
        elif isinstance(shape, (EvenCycle, OddCycle)):
            L = shape.length
            claim_k = 3 if L == 4 and l >= 2 else (4 if l >= 2 or L == 3 else -(-L // 2) + 1)
            yield EQUALITY, claim_k, "T8", lambda: color_k1_cycle_corona(L, l)
        elif isinstance(shape, Path) and shape.size >= 2:
            mm = shape.size
            if l == 1:
                kk = 3 if mm == 2 else -(-mm // 2) + 1
                yield EQUALITY, kk, "FAN", lambda: color_k1_path_corona(mm, l)
            elif mm <= 5:
                yield EQUALITY, 3, "T13", lambda: color_k1_path_corona(mm, l)
            else:
                claim = EQUALITY if mm % 2 == 0 else UPPER_BOUND
                yield claim, 4, "T13", lambda: color_k1_path_corona(mm, l)
        elif isinstance(shape, Path):
            yield from p1(1)
        elif l == 1:
            cone = color_k1_cone(shape)
            yield cone.claim, cone.claimed_k, "fallback", lambda: cone
    elif isinstance(shape, Complete):
        yield from p1(shape.size)
        yield from rotations()
    elif isinstance(shape, EvenCycle):
        k = shape.k
        c3 = av.eq(3)
        if c3 is not None and (k == 2 or n % 3 == 0):
            yield EQUALITY, 3, "T4", lambda k=k: color_even_cycle_corona_3(G, c3, k, l)
        if k >= 3:
            c4 = av.eq(4) or (av.eq_or_oracle(4) if n % 3 else None)
            if c4 is not None:
                claim = EQUALITY if n % 3 else UPPER_BOUND
                yield claim, 4, "T6" if n % 3 else "T5", lambda k=k, c4=c4: color_even_cycle_corona_4(G, c4, k, l)
        yield from rotations()
        c4 = av.eq(4)
        if c4 is not None and k == 2:
            yield UPPER_BOUND, 4, "fallback", lambda: four_color_cycle_levels(G, c4, 4, l)
    elif isinstance(shape, OddCycle):
        if shape.k == 1:
            yield from p1(3)
        else:
            c4 = av.eq(4) or av.eq_or_oracle(4)
            if c4 is not None:
                yield EQUALITY, 4, "T7", lambda: color_odd_cycle_corona(G, c4, shape.k, l)
    elif isinstance(shape, Path):
        mm = shape.size
        c3 = av.eq(3)
        if mm == 1:
            yield from p1(1)
        if c3 is not None and mm in (2, 3, 5):
            yield EQUALITY, 3, "T10", lambda: color_path_corona_3(G, c3, mm, l)
        if c3 is not None and mm >= 2 and (mm == 4 or n % 3 == 0):
            yield EQUALITY, 3, "C9", lambda: color_path_corona_3(G, c3, mm, l)
        if mm >= 6:
            forced = mm % 2 == 0 and n % 3 != 0
            c4 = av.eq(4) or (av.eq_or_oracle(4) if c3 is not None else None)
            if c4 is not None:
                yield (EQUALITY if forced else UPPER_BOUND), 4, "C11", \
                    lambda c4=c4: _path4(G, c4, mm, l, forced)
        yield from rotations()
        c4 = av.eq(4)
        if c4 is not None and 2 <= mm <= 5:
            yield UPPER_BOUND, 4, "fallback", lambda: four_color_path_levels(G, c4, mm, l)
    else:
        yield from rotations()
    c = av.at_most(m + 1)
    if c is not None:
        yield UPPER_BOUND, m + 1, "fallback", lambda: complete_pattern_bound(G, c, shape, l)
    for kw, ce in sorted(av.equitable.items()):
        if kw > m + 1:
            yield UPPER_BOUND, kw, "fallback", lambda ce=ce: window_pattern_bound(G, ce, shape, l)


def _path4(G: Graph, c4: Coloring, m: int, l: int, forced: bool) -> Certificate:
    cert = color_path_corona_4(G, c4, m, l)
    if forced:
        cert.claim = EQUALITY
        cert.notes.append("lower bound: an even path with two colors must alternate, as for even cycles")
    return cert


def _rank(claim: str, k: int, tag: str) -> tuple:
    return (tag == "fallback" and claim == UPPER_BOUND and k > 4, claim != EQUALITY, k)


def dispatch(G: Graph, colorings: Iterable[Coloring], shape: HShape, l: int, *,
             use_oracle: bool = True, limit: int | None = None,
             timeout: float | None = oracle.DEFAULT_TIMEOUT) -> Certificate:
    """Certificate from the strongest construction that applies to the given colorings of ``G``."""
    av = colorings if isinstance(colorings, Colorings) else Colorings(
        G, colorings, use_oracle=use_oracle, limit=limit, timeout=timeout)
    cands = list(_candidates(G, av, shape, l))
    order = sorted(range(len(cands)), key=lambda i: (_rank(*cands[i][:3]), i))
    errors = []
    for i in order:
        claim, k, tag, build = cands[i]
        try:
            cert = build()
        except (ColoringError, ValueError) as exc:
            errors.append(f"{tag}: {exc}")
            continue
        cert.notes.extend(av.notes)
        cert.notes.append(f"dispatch: {len(cands)} candidate routes, chose {cert.theorem}")
        return cert
    raise NoRoute("no applicable route" + (": " + "; ".join(errors) if errors else ""))
