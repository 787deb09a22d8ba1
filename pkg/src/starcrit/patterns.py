"""Detectors for the small forbidden induced subgraphs and for P4 subgraphs.

Witness role conventions (all tuples of distinct vertices):

* ``I3`` / ``I4``: ascending independent set.
* ``TWO_K2``: ``(a, b, c, d)`` with edges ``ab`` and ``cd``, ``a < b``, ``c < d``, ``a < c``.
* ``TWO_K2_PLUS_K1``: as ``TWO_K2`` followed by the isolated vertex.
* ``P3_PLUS_P2``: ``(x, y, z, a, b)`` with path ``x-y-z`` and edge ``ab``, ``x < z``, ``a < b``.

``find_induced`` returns the lexicographically smallest witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import Graph, components, complement, is_connected


class PatternKind(enum.Enum):
    I3 = "i3"
    TWO_K2 = "2k2"
    I4 = "i4"
    TWO_K2_PLUS_K1 = "2k2+k1"
    P3_PLUS_P2 = "p3+p2"

    @property
    def order(self) -> int:
        return _ORDER[self]

    @property
    def role_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges of the pattern, as positions into the witness tuple."""
        return _ROLE_EDGES[self]


_ORDER = {
    PatternKind.I3: 3,
    PatternKind.TWO_K2: 4,
    PatternKind.I4: 4,
    PatternKind.TWO_K2_PLUS_K1: 5,
    PatternKind.P3_PLUS_P2: 5,
}

_ROLE_EDGES = {
    PatternKind.I3: (),
    PatternKind.TWO_K2: ((0, 1), (2, 3)),
    PatternKind.I4: (),
    PatternKind.TWO_K2_PLUS_K1: ((0, 1), (2, 3)),
    PatternKind.P3_PLUS_P2: ((0, 1), (1, 2), (3, 4)),
}

N1_PATTERNS = frozenset({PatternKind.I3, PatternKind.TWO_K2})
N2_PATTERNS = frozenset({PatternKind.I4, PatternKind.TWO_K2_PLUS_K1, PatternKind.P3_PLUS_P2})


def _role_normalized(kind: PatternKind, t: tuple[int, ...]) -> bool:
    if kind in (PatternKind.I3, PatternKind.I4):
        return all(t[i] < t[i + 1] for i in range(len(t) - 1))
    if kind in (PatternKind.TWO_K2, PatternKind.TWO_K2_PLUS_K1):
        return t[0] < t[1] and t[2] < t[3] and t[0] < t[2]
    return t[0] < t[2] and t[3] < t[4]


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    vertices: tuple[int, ...]

    def is_valid(self, g: Graph) -> bool:
        """Re-check the witness against ``g``: roles normalized, exact induced edge set."""
        t = self.vertices
        if len(t) != self.kind.order or len(set(t)) != len(t):
            return False
        if not all(0 <= v < g.n for v in t) or not _role_normalized(self.kind, t):
            return False
        wanted = {frozenset(p) for p in self.kind.role_edges}
        for i, j in combinations(range(len(t)), 2):
            if g.adjacent(t[i], t[j]) != (frozenset((i, j)) in wanted):
                return False
        return True

    def format(self, one_based: bool = False) -> str:
        t = [v + 1 if one_based else v for v in self.vertices]
        groups = {
            PatternKind.I3: [t],
            PatternKind.I4: [t],
            PatternKind.TWO_K2: [t[:2], t[2:]],
            PatternKind.TWO_K2_PLUS_K1: [t[:2], t[2:4], t[4:]],
            PatternKind.P3_PLUS_P2: [t[:3], t[3:]],
        }[self.kind]
        return ",".join("(" + ",".join(map(str, grp)) + ")" for grp in groups)


def _independent_sets(g: Graph, size: int, allowed: int, start: int = 0):
    """Ascending independent ``size``-tuples drawn from the ``allowed`` bitmask."""
    if size == 0:
        yield ()
        return
    for v in range(start, g.n):
        if allowed >> v & 1:
            for rest in _independent_sets(g, size - 1, allowed & ~g.rows[v], v + 1):
                yield (v,) + rest


def _find_independent(g: Graph, size: int) -> tuple[int, ...] | None:
    return next(_independent_sets(g, size, (1 << g.n) - 1), None)


def _find_two_k2(g: Graph, with_isolated: bool) -> tuple[int, ...] | None:
    full = (1 << g.n) - 1
    edges = g.edges()
    for a, b in edges:
        away = full & ~(g.rows[a] | g.rows[b]) & ~(1 << a) & ~(1 << b)
        for c, d in edges:
            if c <= a or not (away >> c & 1 and away >> d & 1):
                continue
            if not with_isolated:
                return (a, b, c, d)
            lonely = away & ~(g.rows[c] | g.rows[d]) & ~(1 << c) & ~(1 << d)
            if lonely:
                return (a, b, c, d, (lonely & -lonely).bit_length() - 1)
    return None


def _find_p3_plus_p2(g: Graph) -> tuple[int, ...] | None:
    full = (1 << g.n) - 1
    edges = g.edges()
    for x in range(g.n):
        for y in g.neighbors(x):
            for z in g.neighbors(y):
                if z <= x or g.adjacent(x, z):
                    continue
                near = g.rows[x] | g.rows[y] | g.rows[z] | (1 << x) | (1 << y) | (1 << z)
                away = full & ~near
                for a, b in edges:
                    if away >> a & 1 and away >> b & 1:
                        return (x, y, z, a, b)
    return None


def find_induced(g: Graph, kind: PatternKind) -> PatternWitness | None:
    if kind is PatternKind.I3:
        t = _find_independent(g, 3)
    elif kind is PatternKind.I4:
        t = _find_independent(g, 4)
    elif kind is PatternKind.TWO_K2:
        t = _find_two_k2(g, with_isolated=False)
    elif kind is PatternKind.TWO_K2_PLUS_K1:
        t = _find_two_k2(g, with_isolated=True)
    else:
        t = _find_p3_plus_p2(g)
    return None if t is None else PatternWitness(kind, t)


def find_induced_naive(g: Graph, kind: PatternKind) -> PatternWitness | None:
    """Reference scan over every ordered vertex tuple of the pattern's order."""
    for t in permutations(range(g.n), kind.order):
        w = PatternWitness(kind, t)
        if w.is_valid(g):
            return w
    return None


def is_free(g: Graph, kinds) -> bool:
    return all(find_induced(g, kind) is None for kind in kinds)


def first_witness(g: Graph, kinds) -> PatternWitness | None:
    """First witness found, trying ``kinds`` in the order given."""
    for kind in kinds:
        w = find_induced(g, kind)
        if w is not None:
            return w
    return None


def find_p4_subgraph(g: Graph) -> tuple[int, int, int, int] | None:
    """Smallest 4-vertex path ``a-b-c-d`` (not necessarily induced) with ``a < d``."""
    for t in permutations(range(g.n), 4):
        a, b, c, d = t
        if a < d and g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d):
            return t
    return None


def contains_p4_subgraph(g: Graph) -> bool:
    return find_p4_subgraph(g) is not None


def contains_p4_by_degree(g: Graph) -> bool:
    """P4 test via the degree argument: a connected component on >= 4 vertices
    has no P4 exactly when it is a star. Smaller components never hold a P4."""
    for comp in components(g):
        if len(comp) < 4:
            continue
        h = g.induced(comp)
        if h.m != h.n - 1 or sum(1 for d in h.degrees() if d >= 2) > 1:
            return True
    return False


def is_star_graph(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    return g.m == g.n - 1 and sum(1 for d in g.degrees() if d >= 2) <= 1


def _has_triangle(g: Graph) -> bool:
    return any(g.rows[u] & g.rows[v] for u, v in g.edges())


def _has_c4_subgraph(g: Graph) -> bool:
    # Two vertices with two common neighbours span a 4-cycle.
    return any((g.rows[u] & g.rows[v]).bit_count() >= 2 for u, v in combinations(range(g.n), 2))


def complement_is_c3c4_free_direct(g: Graph) -> bool:
    h = complement(g)
    return not _has_triangle(h) and not _has_c4_subgraph(h)


def complement_is_c3c4_free(g: Graph) -> bool:
    """The complement has no C3 and no C4 subgraph, i.e. ``g`` is (I3, 2K2)-free.

    Evaluated both through the pattern detectors and directly on the
    complement; a mismatch is a bug.
    """
    via_patterns = is_free(g, (PatternKind.I3, PatternKind.TWO_K2))
    direct = complement_is_c3c4_free_direct(g)
    if via_patterns != direct:
        raise AssertionError(f"complement C3/C4 routes disagree on {g!r}")
    return via_patterns


def complement_is_k4_free(g: Graph) -> bool:
    return find_induced(g, PatternKind.I4) is None
