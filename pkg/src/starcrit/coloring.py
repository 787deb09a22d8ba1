"""Proper and star colorings: checkers plus exact chromatic-number solvers.

Colorings are lists of positive ints indexed by vertex. Results returned by
the solvers are normalized: colors are renamed ``1..k`` in order of first use.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, components
from .patterns import is_star_graph

ORACLE_MAX_ORDER = 9


class ColoringError(ValueError):
    pass


def normalize(colors: Sequence[int]) -> list[int]:
    """Rename colors to 1..k in order of first use."""
    rename: dict[int, int] = {}
    return [rename.setdefault(c, len(rename) + 1) for c in colors]


def num_colors(colors: Sequence[int]) -> int:
    return len(set(colors))


@dataclass(frozen=True)
class BicoloredP4:
    path: tuple[int, int, int, int]
    colors: tuple[int, int]


def _check_length(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.n:
        raise ColoringError(f"coloring has {len(colors)} entries for {g.n} vertices")


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    _check_length(g, colors)
    return all(colors[u] != colors[v] for u, v in g.edges())


def find_bicolored_p4(g: Graph, colors: Sequence[int]) -> BicoloredP4 | None:
    """Smallest 2-colored 4-vertex path ``(a, b, c, d)`` with ``a < d``, if any.

    The path is a subgraph path; its vertices need not induce a P4.
    """
    if not is_proper(g, colors):
        raise ColoringError("coloring is not proper")
    best = None
    for b, c in g.edges():
        for b, c in ((b, c), (c, b)):
            for a in g.neighbors(b):
                if a == c or colors[a] != colors[c]:
                    continue
                for d in g.neighbors(c):
                    if d == b or colors[d] != colors[b]:
                        continue
                    path = (a, b, c, d) if a < d else (d, c, b, a)
                    if best is None or path < best:
                        best = path
    if best is None:
        return None
    return BicoloredP4(best, (colors[best[0]], colors[best[1]]))


def is_star_coloring(g: Graph, colors: Sequence[int]) -> bool:
    _check_length(g, colors)
    return is_proper(g, colors) and find_bicolored_p4(g, colors) is None


def two_class_union_is_star_forest(g: Graph, colors: Sequence[int], i: int, j: int) -> bool:
    """Every component of the subgraph induced by color classes ``i`` and ``j`` is a star."""
    if not is_proper(g, colors):
        raise ColoringError("coloring is not proper")
    if i == j:
        return True
    h = g.induced([v for v in range(g.n) if colors[v] in (i, j)])
    return all(is_star_graph(h.induced(comp)) for comp in components(h))


def is_star_coloring_by_classes(g: Graph, colors: Sequence[int]) -> bool:
    """Star-coloring test through the two-class star-forest characterization."""
    if not is_proper(g, colors):
        return False
    return all(two_class_union_is_star_forest(g, colors, i, j)
               for i, j in combinations(sorted(set(colors)), 2))


# exact search


def greedy_clique_size(g: Graph) -> int:
    """Size of a clique found greedily from each start vertex (a lower bound on chi)."""
    if g.n == 0:
        return 0
    best = 1
    for start in range(g.n):
        clique = 1 << start
        cand = g.rows[start]
        size = 1
        while cand:
            v = max(_iter_bits(cand), key=lambda u: ((g.rows[u] & cand).bit_count(), -u))
            clique |= 1 << v
            cand &= g.rows[v]
            size += 1
        best = max(best, size)
    return best


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def closes_bicolored_p4(nbrs: Sequence[Sequence[int]], colors: Sequence[int], v: int) -> bool:
    """Does coloring ``v`` create a 2-colored 4-path through ``v``? Uncolored = 0.

    Scans paths with ``v`` as an end (v-w-x-y) and as an inner vertex (u-v-w-x).
    """
    cv = colors[v]
    for w in nbrs[v]:
        cw = colors[w]
        if not cw:
            continue
        # v as an end: v-w-x-y colored cv, cw, cv, cw
        for x in nbrs[w]:
            if x == v or colors[x] != cv:
                continue
            for y in nbrs[x]:
                if y != w and colors[y] == cw:
                    return True
        # v inner: u-v-w-x colored cw, cv, cw, cv
        for x in nbrs[w]:
            if x == v or colors[x] != cv:
                continue
            for u in nbrs[v]:
                if u != w and colors[u] == cw:
                    return True
    return False


def _feasible(g: Graph, k: int, star: bool) -> list[int] | None:
    order = search_order(g)
    nbrs = [g.neighbors(v) for v in range(g.n)]
    colors = [0] * g.n

    def extend(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in nbrs[v]}
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            colors[v] = c
            if star and closes_bicolored_p4(nbrs, colors, v):
                continue
            if extend(pos + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if extend(0, 0) else None


def _solve_connected(g: Graph, star: bool) -> tuple[int, list[int]]:
    k = max(1, greedy_clique_size(g))
    while True:
        colors = _feasible(g, k, star)
        if colors is not None:
            return k, colors
        k += 1


def _solve(g: Graph, star: bool) -> tuple[int, list[int]]:
    if g.n < 1:
        raise ColoringError("graph has no vertices")
    best = 0
    colors = [0] * g.n
    for comp in components(g):
        k, sub = _solve_connected(g.induced(comp), star)
        best = max(best, k)
        for v, c in zip(comp, sub):
            colors[v] = c
    return best, normalize(colors)


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    return _solve(g, star=False)


def star_chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """Exact star chromatic number with a certificate coloring.

    Disconnected graphs are solved per component; the answer is the maximum.
    """
    return _solve(g, star=True)


def star_colorable(g: Graph, k: int) -> list[int] | None:
    """A star coloring with at most ``k`` colors, or None."""
    if g.n < 1:
        raise ColoringError("graph has no vertices")
    colors = [0] * g.n
    for comp in components(g):
        sub = _feasible(g.induced(comp), k, star=True)
        if sub is None:
            return None
        for v, c in zip(comp, sub):
            colors[v] = c
    return normalize(colors)


def _restricted_growth(g: Graph, k: int):
    """Proper colorings with at most ``k`` colors as restricted-growth strings."""
    colors = [0] * g.n

    def rec(v: int, used: int):
        if v == g.n:
            yield colors
            return
        for c in range(1, min(used + 1, k) + 1):
            if any(colors[u] == c for u in g.neighbors(v) if u < v):
                continue
            colors[v] = c
            yield from rec(v + 1, max(used, c))
        colors[v] = 0

    return rec(0, 0)


def star_chromatic_number_oracle(g: Graph) -> int:
    """Reference value by exhaustive enumeration of set partitions (n <= 9)."""
    if not 1 <= g.n <= ORACLE_MAX_ORDER:
        raise ColoringError(f"oracle supports 1 <= n <= {ORACLE_MAX_ORDER}")
    for k in range(1, g.n + 1):
        if any(find_bicolored_p4(g, c) is None for c in _restricted_growth(g, k)):
            return k
    raise AssertionError("unreachable: n distinct colors always star-color")
