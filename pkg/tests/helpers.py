"""Brute-force oracles and small utilities shared by the test suite.

Everything here is deliberately dumb: factorial scans, subset scans, and an
independent graph6 packer.  The oracles never call the search kernels they
are used to check.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from pathlib import Path

from nonham.graphs import Graph, build_from_edges

REPO_GRAPHS8 = str(Path(__file__).parent / "data" / "graphs_n8.g6")


def oracle_is_hamiltonian(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        seq = (0,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            return True
    return False


def oracle_ham_path(g: Graph, u: int, v: int) -> bool:
    rest = [w for w in range(g.n) if w not in (u, v)]
    for perm in permutations(rest):
        seq = (u,) + perm + (v,)
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def oracle_labeled_embeddings(g: Graph, f: Graph) -> int:
    count = 0
    fedges = f.edges()
    for image in permutations(range(g.n), f.n):
        if all(g.has_edge(image[a], image[b]) for a, b in fedges):
            count += 1
    return count


def oracle_count_cliques(g: Graph, k: int) -> int:
    count = 0
    for sub in combinations(range(g.n), k):
        if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
            count += 1
    return count


def oracle_spanning(g: Graph, template: Graph) -> bool:
    gedges = g.edges()
    for perm in permutations(range(g.n)):
        if all(template.has_edge(perm[a], perm[b]) for a, b in gedges):
            return True
    return False


def oracle_automorphisms(f: Graph) -> int:
    count = 0
    edge_set = set(f.edges())
    for perm in permutations(range(f.n)):
        image = {tuple(sorted((perm[a], perm[b]))) for a, b in edge_set}
        if image == edge_set:
            count += 1
    return count


def oracle_class_count(n: int) -> int:
    """Count isomorphism classes by labeled dedup: mark whole orbits."""
    seen: set[frozenset] = set()
    count = 0
    pairs = [(i, j) for j in range(n) for i in range(j)]
    perms = list(permutations(range(n)))
    for code in range(1 << len(pairs)):
        edges = frozenset(pairs[k] for k in range(len(pairs)) if code >> k & 1)
        if edges in seen:
            continue
        count += 1
        for perm in perms:
            seen.add(
                frozenset(tuple(sorted((perm[a], perm[b]))) for a, b in edges)
            )
    return count


def hand_graph6(g: Graph) -> str:
    """Independent graph6 packer: column-major bits, zero pad, offset 63."""
    stream = ""
    for j in range(1, g.n):
        for i in range(j):
            stream += "1" if g.has_edge(i, j) else "0"
    while len(stream) % 6:
        stream += "0"
    assert g.n <= 62
    out = chr(g.n + 63)
    for k in range(0, len(stream), 6):
        out += chr(int(stream[k : k + 6], 2) + 63)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return build_from_edges(n, edges)


def random_supergraph(rng: random.Random, g: Graph, extra: int) -> Graph:
    from nonham.graphs import add_edge

    out = g
    nonedges = g.nonedges()
    rng.shuffle(nonedges)
    for u, v in nonedges[:extra]:
        out = add_edge(out, u, v)
    return out


def all_labeled_graphs(n: int):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for code in range(1 << len(pairs)):
        yield build_from_edges(
            n, [pairs[k] for k in range(len(pairs)) if code >> k & 1]
        )


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge v into u (u keeps the union of neighborhoods), reindexed."""
    assert g.has_edge(u, v)
    keep = [w for w in range(g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges = set()
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            edges.add((index[a2], index[b2]))
    return build_from_edges(g.n - 1, list(edges))
