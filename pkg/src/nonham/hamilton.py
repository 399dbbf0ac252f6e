"""Hamiltonicity search, saturation closure, and degree-based certificates.

The cycle/path engine is exact backtracking on bitmask adjacency rows.  Search
is anchored at vertex 0 with a fixed orientation (second vertex below last) to
halve the tree, and prunes on:

* disconnection, a vertex of degree < 2, or forced edges at degree-2 vertices
  closing a cycle shorter than n (preprocessing);
* any unvisited vertex with fewer than two usable cycle anchors (unvisited
  vertices, the current path end, or the closing anchor);
* interchangeable vertices: candidates with an unvisited lower-indexed twin
  (identical open or closed neighborhood) are skipped, which collapses the
  search inside large cliques and independent sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from nonham.graphs import Graph, add_edge, bits, twin_masks


@dataclass(frozen=True)
class PosaCertificate:
    """A witness that ``r`` vertices have degree at most ``r``."""

    r: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("certificate needs r >= 1")
        if len(self.vertices) < self.r:
            raise ValueError("certificate needs at least r vertices")


@dataclass(frozen=True)
class PathPartition:
    """Vertex-disjoint paths jointly covering a host graph."""

    paths: tuple[tuple[int, ...], ...]

    def validate(self, h: Graph) -> None:
        seen: set[int] = set()
        for path in self.paths:
            if not path:
                raise ValueError("empty path in partition")
            for a, b in zip(path, path[1:]):
                if not h.has_edge(a, b):
                    raise ValueError(f"non-adjacent consecutive pair ({a},{b})")
            if seen & set(path):
                raise ValueError("paths are not vertex-disjoint")
            seen |= set(path)
        if seen != set(range(h.n)):
            raise ValueError("paths do not cover the vertex set")


def _connected(g: Graph) -> bool:
    reach = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << g.n) - 1


def _capacity_classes(g: Graph) -> list[tuple[int, int, bool]]:
    """Twin classes of size >= 2 as (members, external neighborhood, is_true).

    Used for a capacity prune: unvisited members of a class need two cycle
    edges each (two total for a true-twin clique), and those edges can only
    land in the class's shared external neighborhood, the current path end,
    or the closing anchor.
    """
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        open_groups[row] = open_groups.get(row, 0) | 1 << v
        closed = row | 1 << v
        closed_groups[closed] = closed_groups.get(closed, 0) | 1 << v
    out = []
    for row, members in open_groups.items():
        if members.bit_count() >= 2:
            out.append((members, row, False))
    for crow, members in closed_groups.items():
        if members.bit_count() >= 2:
            out.append((members, crow & ~members, True))
    return out


def _forced_edge_scan(g: Graph) -> tuple[int, ...] | None | bool:
    """Resolve degree-2 forced edges.

    Returns a full cycle (tuple) if the forced edges already form one, False
    if they make a hamiltonian cycle impossible, and True otherwise.
    """
    n = g.n
    forced = [0] * n
    for v, row in enumerate(g.adj):
        if row.bit_count() == 2:
            for u in bits(row):
                forced[v] |= 1 << u
                forced[u] |= 1 << v
    if all(f == 0 for f in forced):
        return True
    if any(f.bit_count() > 2 for f in forced):
        return False
    seen = 0
    for start in range(n):
        if forced[start] == 0 or seen >> start & 1:
            continue
        comp = []
        frontier = 1 << start
        compmask = frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                comp.append(v)
                nxt |= forced[v]
            frontier = nxt & ~compmask
            compmask |= frontier
        seen |= compmask
        edge_ends = sum(forced[v].bit_count() for v in comp)
        if edge_ends == 2 * len(comp):
            if len(comp) < n:
                return False
            return _walk_cycle(forced)
    return True


def _walk_cycle(forced: list[int]) -> tuple[int, ...]:
    # forced is 2-regular and spanning here, so the walk closes at vertex 0
    cycle = [0]
    prev, cur = -1, 0
    while True:
        nxt = next(u for u in bits(forced[cur]) if u != prev)
        if nxt == 0:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if cycle[1] > cycle[-1]:
        cycle = [0] + cycle[:0:-1]
    return tuple(cycle)


def _search_cycle(g: Graph) -> tuple[int, ...] | None:
    n = g.n
    if n < 3:
        return None
    adj = g.adj
    if any(row.bit_count() < 2 for row in adj):
        return None
    if not _connected(g):
        return None
    pre = _forced_edge_scan(g)
    if pre is False:
        return None
    if pre is not True:
        return pre
    twin = twin_masks(g)
    classes = _capacity_classes(g)
    full = (1 << n) - 1
    path = [0]
    try_order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))

    def extend(v: int, used: int) -> bool:
        if used == full:
            return bool(adj[v] & 1) and path[1] < path[-1]
        rem = full & ~used
        for members, outside, is_true in classes:
            unvisited = members & rem
            if not unvisited:
                continue
            reach = outside | members if is_true else outside
            need = 2 if is_true else 2 * unvisited.bit_count()
            supply = 2 * (outside & rem).bit_count()
            if reach >> v & 1:
                supply += 1
            if reach & 1:
                supply += 1
            if need > supply:
                return False
        avail = rem | 1 << v | 1
        m = rem
        while m:
            low = m & -m
            m ^= low
            if (adj[low.bit_length() - 1] & avail).bit_count() < 2:
                return False
        cand = adj[v] & rem
        for u in try_order:
            if not cand >> u & 1:
                continue
            if twin[u] & rem & ((1 << u) - 1):
                continue
            path.append(u)
            if extend(u, used | 1 << u):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return tuple(path)
    return None


@lru_cache(maxsize=None)
def _cycle_cached(g: Graph) -> tuple[int, ...] | None:
    return _search_cycle(g)


def is_hamiltonian(g: Graph) -> bool:
    """Exact hamiltonicity decision (False for n < 3)."""
    return _cycle_cached(g) is not None


def find_hamiltonian_cycle(g: Graph) -> list[int] | None:
    """A hamiltonian cycle as a vertex sequence (wrap-around implied), or None."""
    cyc = _cycle_cached(g)
    return None if cyc is None else list(cyc)


def hamiltonian_path_between(g: Graph, u: int, v: int) -> list[int] | None:
    """A hamiltonian path from u to v, or None."""
    if u == v:
        raise ValueError("path endpoints must differ")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ValueError(f"vertex {w} out of range")
    n, adj = g.n, g.adj
    if n == 2:
        return [u, v] if g.has_edge(u, v) else None
    if not _connected(g):
        return None
    twin = twin_masks(g)
    classes = _capacity_classes(g)
    full = (1 << n) - 1
    vbit = 1 << v
    path = [u]
    try_order = sorted(range(n), key=lambda w: (adj[w].bit_count(), w))

    def extend(cur: int, used: int) -> bool:
        if used == full:
            return cur == v
        rem = full & ~used
        avail = rem | 1 << cur
        if rem & vbit and not adj[v] & ((rem ^ vbit) | 1 << cur):
            return False
        for members, outside, is_true in classes:
            unvisited = members & rem & ~vbit
            if not unvisited:
                continue
            reach = outside | members if is_true else outside
            need = 2 if is_true else 2 * unvisited.bit_count()
            supply = 2 * (outside & rem & ~vbit).bit_count()
            if reach >> cur & 1:
                supply += 1
            if reach & rem & vbit:
                supply += 1
            if need > supply:
                return False
        m = rem & ~vbit
        while m:
            low = m & -m
            m ^= low
            if (adj[low.bit_length() - 1] & avail).bit_count() < 2:
                return False
        cand = adj[cur] & rem
        if rem != vbit:
            cand &= ~vbit
        for w in try_order:
            if not cand >> w & 1:
                continue
            if twin[w] & rem & ((1 << w) - 1) & ~vbit:
                continue
            path.append(w)
            if extend(w, used | 1 << w):
                return True
            path.pop()
        return False

    if extend(u, 1 << u):
        return list(path)
    return None


def saturate(g: Graph) -> Graph:
    """Close a nonhamiltonian graph under edge additions that keep it
    nonhamiltonian, probing nonedges in lexicographic order."""
    if is_hamiltonian(g):
        raise ValueError("saturate requires a nonhamiltonian input")
    cur = g
    for u, v in g.nonedges():
        candidate = add_edge(cur, u, v)
        if not is_hamiltonian(candidate):
            cur = candidate
    return cur


def is_saturated(g: Graph) -> bool:
    """Nonhamiltonian, and every nonedge addition creates a hamiltonian cycle."""
    if is_hamiltonian(g):
        return False
    return all(is_hamiltonian(add_edge(g, u, v)) for u, v in g.nonedges())


def ore_check(g: Graph) -> list[tuple[int, int]]:
    """Nonedges uv with d(u) + d(v) >= n (empty on saturated graphs)."""
    degs = g.degrees()
    return [(u, v) for u, v in g.nonedges() if degs[u] + degs[v] >= g.n]


def posa_certificate(g: Graph) -> PosaCertificate | None:
    """Smallest r <= floor((n-1)/2) with at least r vertices of degree <= r.

    Always exists for nonhamiltonian graphs on n >= 3 vertices.
    """
    degs = g.degrees()
    for r in range(1, (g.n - 1) // 2 + 1):
        members = tuple(v for v in range(g.n) if degs[v] <= r)
        if len(members) >= r:
            return PosaCertificate(r, members)
    return None


def path_partition(h: Graph, t: int) -> PathPartition | None:
    """Partition V(h) into at most t paths via a universal t-clique.

    Adds a clique of t universal vertices, finds a hamiltonian cycle of the
    augmented graph, and deletes the clique.  Guaranteed to succeed whenever
    every nonedge xy of h satisfies d(x) + d(y) >= n(h) - t; returns None only
    when the augmented graph has no hamiltonian cycle.
    """
    if t < 1:
        raise ValueError("path_partition needs t >= 1")
    if h.n == 1:
        return PathPartition(((0,),))
    aug_n = h.n + t
    full_aug = (1 << aug_n) - 1
    rows = list(h.adj) + [0] * t
    for v in range(h.n):
        rows[v] |= ((1 << t) - 1) << h.n
    for v in range(h.n, aug_n):
        rows[v] = full_aug ^ (1 << v)
    cyc = find_hamiltonian_cycle(Graph(aug_n, tuple(rows)))
    if cyc is None:
        return None
    first_added = next(i for i, v in enumerate(cyc) if v >= h.n)
    rotated = cyc[first_added:] + cyc[:first_added]
    paths: list[tuple[int, ...]] = []
    run: list[int] = []
    for v in rotated:
        if v >= h.n:
            if run:
                paths.append(tuple(run))
                run = []
        else:
            run.append(v)
    if run:
        paths.append(tuple(run))
    return PathPartition(tuple(paths))
