"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

Vertices are ``0..n-1``. A ``Graph`` is immutable; every edit returns a new
value, so graphs can be shared freely between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction or edit."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """``rows[v]`` is the bitmask of neighbours of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.rows[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``perm[i]`` becomes vertex ``i``."""
        return self.induced(perm)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph; duplicate edges collapse, self-loops and bad endpoints raise."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _normalize_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise GraphError(f"({u}, {v}) is not a vertex pair of this graph")
    return (u, v) if u < v else (v, u)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = _normalize_edge(g, e)
    if not g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = _normalize_edge(g, e)
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return g.induced([u for u in range(g.n) if u != v])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        result.append(list(_bits(comp)))
    return result


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(components(g)) == 1


# graph6: size byte n+63, then the upper triangle column by column
# ((0,1),(0,2),(1,2),(0,3),...), big-endian 6-bit groups, each +63.


def encode_graph6(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 encoding supports n <= {GRAPH6_MAX_ORDER}")
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(value + 63)
    return bytes(out)


def decode_graph6(s: bytes | str) -> Graph:
    if isinstance(s, str):
        try:
            s = s.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    if s.startswith(b">>graph6<<"):
        s = s[len(b">>graph6<<"):]
        base = len(b">>graph6<<")
    else:
        base = 0
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, byte in enumerate(s):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside 63..126", base + i)
    n = s[0] - 63
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error("multi-byte size fields are not supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated: expected {need} data bytes, got {len(body)}", base + len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + 1 + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", base + need)
    return Graph(n, tuple(rows))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    tokens = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens or len(tokens[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(tokens[0][0]), int(tokens[0][1])
        pairs = [(int(a), int(b)) for a, b in tokens[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)
