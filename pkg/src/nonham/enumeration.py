"""Isomorph-free graph streams for exhaustive sweeps.

The internal generator covers 1 <= n <= 7: a labeled graph is kept exactly
when its adjacency bit-string (upper triangle in graph6 stream order, first
bit most significant) is lexicographically minimal over all vertex
relabelings.  The minimum is evaluated for all 2^C(n,2) labeled graphs at
once: a vectorized fixpoint propagates orbit minima along two generating
permutations (a transposition and the full cycle).  Larger orders come from
external graph6 files, typically produced with ``scripts/make_graphs8.py``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from nonham.graphs import Graph, Graph6Error, graph6_decode, min_degree, relabel, twin_masks

INTERNAL_MAX_ORDER = 7


def _stream_pos(i: int, j: int) -> int:
    """Position of pair (i < j) in the graph6 payload bit stream."""
    return j * (j - 1) // 2 + i


def _code_of(g: Graph) -> int:
    """Adjacency bit-string as an int, first stream bit most significant."""
    code = 0
    for j in range(1, g.n):
        for i in range(j):
            code = code << 1 | (g.adj[j] >> i & 1)
    return code


def _graph_from_code(n: int, code: int) -> Graph:
    m = n * (n - 1) // 2
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if code >> (m - 1 - _stream_pos(i, j)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _perm_bit_pairs(n: int, perm: list[int]) -> list[tuple[int, int]]:
    m = n * (n - 1) // 2
    pairs = []
    for j in range(1, n):
        for i in range(j):
            a, b = sorted((perm[i], perm[j]))
            src = m - 1 - _stream_pos(i, j)
            dst = m - 1 - _stream_pos(a, b)
            pairs.append((src, dst))
    return pairs


@lru_cache(maxsize=None)
def _canonical_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    m = n * (n - 1) // 2
    codes = np.arange(1 << m, dtype=np.int64)
    transposition = [1, 0] + list(range(2, n))
    cycle = [(v + 1) % n for v in range(n)]
    tables = []
    for perm in (transposition, cycle):
        table = np.zeros(1 << m, dtype=np.int64)
        for src, dst in _perm_bit_pairs(n, perm):
            table |= (codes >> src & 1) << dst
        tables.append(table)
    orbit_min = codes.copy()
    for _ in range(100_000):
        before = orbit_min
        for table in tables:
            orbit_min = np.minimum(orbit_min, orbit_min[table])
        if np.array_equal(orbit_min, before):
            break
    else:
        raise RuntimeError("orbit minimum propagation did not converge")
    return tuple(int(c) for c in np.nonzero(orbit_min == codes)[0])


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, 1 <= n <= 7.

    Larger orders must come from an external graph6 stream.
    """
    if not 1 <= n <= INTERNAL_MAX_ORDER:
        raise ValueError(
            f"internal enumeration supports 1 <= n <= {INTERNAL_MAX_ORDER}; "
            "supply an external graph6 stream for larger orders"
        )
    for code in _canonical_codes(n):
        yield _graph_from_code(n, code)


def _min_code_perm(g: Graph) -> tuple[int, list[int]]:
    """Minimal code over relabelings and a relabeling achieving it.

    Branch and bound over placement orders: a partial placement determines a
    prefix of the bit stream, so any branch whose prefix exceeds the best
    known code is cut.  Interchangeable unplaced vertices (equal open or
    closed neighborhoods) are tried once per level.
    """
    n, adj = g.n, g.adj
    if n == 1:
        return 0, [0]
    m = n * (n - 1) // 2
    twin = twin_masks(g)
    best = _code_of(g)
    best_order = list(range(n))
    placed: list[int] = []

    def dfs(used: int, prefix: int, filled: int) -> None:
        nonlocal best, best_order
        k = len(placed)
        if k == n:
            if prefix < best:
                best = prefix
                best_order = placed.copy()
            return
        cands = []
        for w in range(n):
            if used >> w & 1:
                continue
            if twin[w] & ~used & ((1 << w) - 1):
                continue
            col = 0
            for p in placed:
                col = col << 1 | (adj[p] >> w & 1)
            cands.append((col, w))
        cands.sort()
        for col, w in cands:
            new_prefix = prefix << k | col
            new_filled = filled + k
            if new_prefix > best >> (m - new_filled):
                break
            placed.append(w)
            dfs(used | 1 << w, new_prefix, new_filled)
            placed.pop()

    dfs(0, 0, 0)
    perm = [0] * n
    for position, vertex in enumerate(best_order):
        perm[vertex] = position
    return best, perm


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class.

    Agrees with the internal generator: a graph is yielded by
    ``enumerate_nonisomorphic`` iff it equals its own canonical form.
    """
    _, perm = _min_code_perm(g)
    return relabel(g, perm)


def stream_graph6(path: str) -> Iterator[Graph]:
    """Lazily decode a newline-delimited graph6 file.

    A malformed line aborts the stream with its line number.
    """
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield graph6_decode(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc


def apply_filters(
    stream: Iterable[Graph],
    min_degree_bound: int | None = None,
    require_nonhamiltonian: bool = False,
    require_connected: bool = False,
) -> Iterator[Graph]:
    """Compose stream filters, cheap degree test before hamiltonicity."""
    from nonham.hamilton import _connected, is_hamiltonian

    for g in stream:
        if min_degree_bound is not None and min_degree(g) < min_degree_bound:
            continue
        if require_connected and not _connected(g):
            continue
        if require_nonhamiltonian and is_hamiltonian(g):
            continue
        yield g
