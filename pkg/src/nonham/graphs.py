"""Immutable bitmask graphs and the graph6 wire format.

A graph lives on vertices ``0..n-1`` with ``n <= 64``; each adjacency row is a
single int bitmask, so neighbor-set intersections are one machine word wide.
Vertex subsets are plain int bitmasks as well; every public operation also
accepts an iterable of vertex indices where a subset is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class Graph6Error(ValueError):
    """Malformed graph6 record."""


def mask_of(vertices: Iterable[int] | int) -> int:
    """Return the bitmask for ``vertices`` (an int mask passes through)."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: order ``n`` and per-vertex neighbor bitmasks.

    Instances are immutable values; "mutating" operations return new graphs.
    Symmetry and loop-freeness are checked on every construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits beyond order {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(row):
                out.append((v, u))
        return out

    def nonedges(self) -> list[tuple[int, int]]:
        """All unordered non-adjacent pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out


def twin_masks(g: Graph) -> list[int]:
    """twin_masks(g)[v] = vertices sharing v's open or closed neighborhood.

    Twins are interchangeable under relabeling, which search kernels exploit
    to collapse branching inside cliques and independent sets.
    """
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        open_groups[row] = open_groups.get(row, 0) | 1 << v
        closed = row | 1 << v
        closed_groups[closed] = closed_groups.get(closed, 0) | 1 << v
    return [
        (open_groups[row] | closed_groups[row | 1 << v]) & ~(1 << v)
        for v, row in enumerate(g.adj)
    ]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")


def build_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Duplicate edges collapse; loops are rejected.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"graph order {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint ({u},{v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"graph order {n} outside 1..{MAX_ORDER}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph induced on ``vertices``, reindexed by ascending original index."""
    mask = mask_of(vertices)
    if mask == 0:
        raise ValueError("induced subgraph of the empty vertex set")
    if mask & ~((1 << g.n) - 1):
        raise ValueError("vertex set not contained in the graph")
    kept = list(bits(mask))
    index = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for v in kept:
        for u in bits(g.adj[v] & mask):
            rows[index[v]] |= 1 << index[u]
    return Graph(len(kept), tuple(rows))


def is_independent(g: Graph, vertices: Iterable[int] | int) -> bool:
    mask = mask_of(vertices)
    if mask & ~((1 << g.n) - 1):
        raise ValueError("vertex set not contained in the graph")
    for v in bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` plus edge uv (identity if the edge already exists)."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    if g.has_edge(u, v):
        return g
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel vertices: old vertex ``v`` becomes ``perm[v]``."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("relabeling is not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[p[v]] |= 1 << p[u]
    return Graph(g.n, tuple(rows))


# graph6: header byte n+63 for n <= 62; for n in 63..64 we emit the two-byte
# form 126, n+63 and also accept nauty's three-byte 126,a,b,c header on
# decode.  The payload packs the strict upper triangle column by column,
# MSB-first into 6-bit groups offset by 63, zero-padded to a full group.


def _triangle_bits(g: Graph) -> list[int]:
    out = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            out.append(col >> i & 1)
    return out


def graph6_encode(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = chr(126) + chr(g.n + 63)
    tri = _triangle_bits(g)
    while len(tri) % 6:
        tri.append(0)
    chars = []
    for k in range(0, len(tri), 6):
        group = 0
        for b in tri[k : k + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return head + "".join(chars)


def _payload_chars(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def graph6_decode(record: str | bytes) -> Graph:
    if isinstance(record, bytes):
        try:
            record = record.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("graph6 record is not ASCII") from exc
    record = record.rstrip("\r\n")
    if record.startswith(">>graph6<<"):
        record = record[len(">>graph6<<") :]
    if not record:
        raise Graph6Error("empty graph6 record")
    vals = []
    for ch in record:
        code = ord(ch) - 63
        if not 0 <= code <= 64:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
        vals.append(code)
    if vals[0] <= 62:
        n, body = vals[0], vals[1:]
        if n == 0:
            raise Graph6Error("graph6 order 0 not representable")
    elif vals[0] == 64:
        raise Graph6Error("malformed graph6 header byte")
    elif len(vals) >= 2 and vals[1] in (63, 64) and len(vals) - 2 == _payload_chars(vals[1]):
        n, body = vals[1], vals[2:]
    elif len(vals) >= 4 and all(v <= 63 for v in vals[1:4]):
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        raise Graph6Error("malformed extended graph6 header")
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} exceeds supported maximum {MAX_ORDER}")
    if any(v > 63 for v in body):
        raise Graph6Error("malformed graph6 payload byte")
    need = _payload_chars(n)
    if len(body) != need:
        raise Graph6Error(f"graph6 payload length {len(body)}, expected {need}")
    tri = []
    for v in body:
        for shift in range(5, -1, -1):
            tri.append(v >> shift & 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if tri[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if any(tri[k:]):
        raise Graph6Error("nonzero padding bits in graph6 payload")
    return Graph(n, tuple(rows))
