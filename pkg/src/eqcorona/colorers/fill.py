"""Turn per-color counts into explicit proper colorings of a cycle or a path."""
from __future__ import annotations

from itertools import product as _cartesian
from typing import Hashable, Iterable, Mapping, Sequence, Union

Counts = Union[Mapping[Hashable, int], Iterable[tuple[Hashable, int]]]


class InfeasibleCounts(ValueError):
    pass


def _items(counts: Counts) -> list[tuple[Hashable, int]]:
    items = list(counts.items()) if isinstance(counts, Mapping) else list(counts)
    if any(c < 0 for _, c in items):
        raise InfeasibleCounts(f"negative count in {items}")
    return [(col, c) for col, c in items if c > 0]


def cycle_feasible(L: int, counts: Sequence[int]) -> bool:
    nz = [c for c in counts if c > 0]
    if sum(nz) != L or L < 3:
        return False
    if len(nz) == 2:
        return L % 2 == 0 and nz[0] == nz[1] == L // 2
    return max(nz) <= L // 2


def path_feasible(L: int, counts: Sequence[int]) -> bool:
    return sum(counts) == L and L >= 1 and max(counts) <= (L + 1) // 2


def _interleave(L: int, items: list[tuple[Hashable, int]]) -> list[Hashable]:
    # heaviest color first on even slots, then the rest continue on odd slots
    items = sorted(items, key=lambda it: -it[1])
    seq: list[Hashable] = [None] * L
    slots = list(range(0, L, 2)) + list(range(1, L, 2))
    i = 0
    for col, c in items:
        for _ in range(c):
            seq[slots[i]] = col
            i += 1
    return seq


def cycle_fill(L: int, counts: Counts) -> list[Hashable]:
    """Proper cyclic sequence of length ``L`` using each color exactly as often as requested."""
    items = _items(counts)
    if not cycle_feasible(L, [c for _, c in items]):
        raise InfeasibleCounts(f"no proper {L}-cycle with counts {items}")
    seq = _interleave(L, items)
    assert all(seq[i] != seq[(i + 1) % L] for i in range(L))
    return seq


def path_fill(L: int, counts: Counts) -> list[Hashable]:
    items = _items(counts)
    if not path_feasible(L, [c for _, c in items]):
        raise InfeasibleCounts(f"no proper {L}-path with counts {items}")
    seq = _interleave(L, items)
    assert all(seq[i] != seq[i + 1] for i in range(L - 1))
    return seq


def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total, -1, -1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def cycle_count_vectors(L: int, parts: int) -> list[tuple[int, ...]]:
    return [v for v in compositions(L, parts) if cycle_feasible(L, v)]


def path_count_vectors(L: int, parts: int) -> list[tuple[int, ...]]:
    return [v for v in compositions(L, parts) if path_feasible(L, v)]


def distinct_count_vectors(m: int, parts: int) -> list[tuple[int, ...]]:
    """Vectors for ``K_m``: every color at most once."""
    return [v for v in _cartesian((1, 0), repeat=parts) if sum(v) == m]
