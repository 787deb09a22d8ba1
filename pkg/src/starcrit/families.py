"""Named graph families.

Vertices written ``v_1..v_n`` in the usual definitions map to ``0..n-1``. The horn and double-horn
generators transcribe the set-builder edge definitions literally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, from_edge_list


class Family(enum.Enum):
    HORN = "horn"
    DOUBLE_HORN = "double-horn"
    CONE_C5 = "cone-c5"
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    INDEPENDENT = "independent"


_MIN_ORDER = {
    Family.HORN: 5,
    Family.DOUBLE_HORN: 5,
    Family.CONE_C5: 5,
    Family.COMPLETE: 1,
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.STAR: 1,
    Family.INDEPENDENT: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if self.n < _MIN_ORDER[self.family]:
            raise GraphError(f"{self.family.value} needs n >= {_MIN_ORDER[self.family]}, got {self.n}")

    def build(self) -> Graph:
        return _BUILDERS[self.family](self.n)


def _edges_1based(n: int, pairs) -> Graph:
    return from_edge_list(n, [(i - 1, j - 1) for i, j in pairs])


def horn(n: int) -> Graph:
    """H_n: v_i v_j for 1 <= i <= n-3, i < j <= n-1, plus v_{n-1} v_n."""
    if n < 5:
        raise GraphError(f"horn graph needs n >= 5, got {n}")
    pairs = [(i, j) for i in range(1, n - 2) for j in range(i + 1, n)]
    pairs.append((n - 1, n))
    return _edges_1based(n, pairs)


def double_horn(n: int) -> Graph:
    """D_n: clique on v_1..v_{n-4}; v_{n-3} ~ v_1..v_{n-5}; v_{n-2} ~ v_2..v_{n-4};
    plus v_{n-2}v_{n-3}, v_{n-1}v_{n-3}, v_n v_{n-2}."""
    if n < 5:
        raise GraphError(f"double-horn graph needs n >= 5, got {n}")
    pairs = [(i, j) for i in range(1, n - 3) for j in range(i + 1, n - 3)]
    pairs += [(n - 3, i) for i in range(1, n - 4)]
    pairs += [(n - 2, i) for i in range(2, n - 3)]
    pairs += [(n - 2, n - 3), (n - 1, n - 3), (n, n - 2)]
    return _edges_1based(n, pairs)


def cone_c5(n: int) -> Graph:
    """G_5 = C_5; G_i adds a vertex adjacent to everything in G_{i-1}."""
    if n < 5:
        raise GraphError(f"cone over C5 needs n >= 5, got {n}")
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(u, v) for v in range(5, n) for u in range(v)]
    return from_edge_list(n, pairs)


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    return from_edge_list(n, [(0, v) for v in range(1, n)])


def independent(n: int) -> Graph:
    return from_edge_list(n, [])


_BUILDERS = {
    Family.HORN: horn,
    Family.DOUBLE_HORN: double_horn,
    Family.CONE_C5: cone_c5,
    Family.COMPLETE: complete,
    Family.PATH: path,
    Family.CYCLE: cycle,
    Family.STAR: star,
    Family.INDEPENDENT: independent,
}


def standard(family: Family | str, n: int) -> Graph:
    family = Family(family)
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    return FamilySpec(family, n).build()


def build(family: Family | str, n: int) -> Graph:
    return FamilySpec(Family(family), n).build()
