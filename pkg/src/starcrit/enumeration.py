"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical form of a graph is the minimum, over all vertex permutations,
of its upper-triangle adjacency bit string read column by column (the
graph6 bit order). It is found by a prefix search: vertices are placed one
position at a time, and only prefixes whose columns so far are minimal
survive. Twin vertices (same neighbourhood apart from each other) are
interchangeable by an automorphism, so only one per twin class is tried.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, encode_graph6, is_connected

CANONICAL_MAX_ORDER = 8


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    @property
    def length(self) -> int:
        return self.n * (self.n - 1) // 2

    def bit_string(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def graph(self) -> Graph:
        rows = [0] * self.n
        k = self.length
        for j in range(1, self.n):
            for i in range(j):
                k -= 1
                if self.bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(self.n, tuple(rows))


def _twin_representatives(g: Graph, candidates: list[int]) -> list[int]:
    reps: list[int] = []
    for v in candidates:
        rv = g.rows[v]
        if not any(rv & ~(1 << w) == g.rows[w] & ~(1 << v) for w in reps):
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form plus a permutation ``perm`` with ``g.relabel(perm)`` canonical."""
    if g.n > CANONICAL_MAX_ORDER:
        raise EnumerationError(f"canonical form supports n <= {CANONICAL_MAX_ORDER}")
    n = g.n
    # Each prefix: (placed vertices, column signature of every vertex w.r.t. them).
    prefixes: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), (0,) * n)]
    bits = 0
    for j in range(n):
        best = None
        survivors = []
        for placed, sig in prefixes:
            remaining = [v for v in range(n) if v not in placed]
            low = min(sig[v] for v in remaining)
            if best is not None and low > best:
                continue
            if best is None or low < best:
                best = low
                survivors = []
            for v in _twin_representatives(g, [v for v in remaining if sig[v] == low]):
                row = g.rows[v]
                survivors.append((placed + (v,), tuple(s << 1 | (row >> u & 1) for u, s in enumerate(sig))))
        bits = bits << j | best
        prefixes = survivors
    return CanonicalForm(n, bits), prefixes[0][0]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def canonical_form_brute(g: Graph) -> CanonicalForm:
    """Reference: minimum over every permutation (small n only)."""
    from itertools import permutations

    best = None
    for perm in permutations(range(g.n)):
        h = g.relabel(perm)
        bits = 0
        for j in range(1, g.n):
            for i in range(j):
                bits = bits << 1 | (h.rows[i] >> j & 1)
        best = bits if best is None else min(best, bits)
    return CanonicalForm(g.n, best or 0)


@lru_cache(maxsize=None)
def _all_forms(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (CanonicalForm(1, 0),)
    seen = set()
    for form in _all_forms(n - 1):
        h = form.graph()
        for nbhd in range(1 << (n - 1)):
            rows = [row | (nbhd >> v & 1) << (n - 1) for v, row in enumerate(h.rows)]
            rows.append(nbhd)
            seen.add(canonical_labeling(Graph(n, tuple(rows)))[0])
    return tuple(sorted(seen))


def _check_order(n: int) -> None:
    if not 1 <= n <= CANONICAL_MAX_ORDER:
        raise EnumerationError(f"enumeration supports 1 <= n <= {CANONICAL_MAX_ORDER}, got {n}")


def enumerate_all(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-form order."""
    _check_order(n)
    for form in _all_forms(n):
        yield form.graph()


def enumerate_connected(n: int) -> Iterator[Graph]:
    _check_order(n)
    for g in enumerate_all(n):
        if is_connected(g):
            yield g


def enumerate_connected_upto(n: int) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from enumerate_connected(k)


def enumerate_brute(n: int, connected: bool = False) -> list[Graph]:
    """Reference enumeration: every labelled graph, deduplicated by canonical form."""
    _check_order(n)
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if not connected or is_connected(g):
            forms.add(canonical_form(g))
    return [f.graph() for f in sorted(forms)]


def graph6_key(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")
