"""Deterministic builders for the extremal nonhamiltonian graph families.

Vertex layout is canonical for every family so that graph6 output is
byte-reproducible: the big clique occupies the lowest indices, the attachment
set is the lowest clique indices, and the special (low-degree) vertices come
last.
"""

from __future__ import annotations

from dataclasses import dataclass

from nonham.graphs import Graph, build_from_edges

FAMILY_TAGS = ("h", "kprime", "hprime", "gprime2", "f3", "gprimed")


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]


def build_H(n: int, d: int) -> Graph:
    """Clique K_{n-d} plus d independent vertices all joined to the same d
    clique vertices.  Minimum degree d, nonhamiltonian, h(n,d) edges."""
    if not 1 <= d <= (n - 1) // 2:
        raise ValueError(f"build_H(n={n}, d={d}) needs 1 <= d <= {(n - 1) // 2}")
    clique = list(range(n - d))
    edges = _clique_edges(clique)
    for v in range(n - d, n):
        edges += [(a, v) for a in range(d)]
    return build_from_edges(n, edges)


def build_Kprime(n: int, d: int) -> Graph:
    """Edge-disjoint union of K_{n-d} and K_{d+1} sharing one cut vertex."""
    if not 1 <= d <= (n - 1) // 2:
        raise ValueError(f"build_Kprime(n={n}, d={d}) needs 1 <= d <= {(n - 1) // 2}")
    big = list(range(n - d))
    small = list(range(n - d - 1, n))
    return build_from_edges(n, _clique_edges(big) + _clique_edges(small))


def build_Hprime(n: int, d: int) -> Graph:
    """Clique A of order n-d-1 plus a (d+1)-set B inducing exactly one edge,
    every B-vertex joined to the same d vertices of A.

    The unique B-edge sits between the two highest-indexed vertices.
    """
    if d < 1 or n < 2 * d + 2:
        raise ValueError(f"build_Hprime(n={n}, d={d}) needs d >= 1 and n >= 2d+2")
    clique = list(range(n - d - 1))
    edges = _clique_edges(clique)
    for v in range(n - d - 1, n):
        edges += [(a, v) for a in range(d)]
    edges.append((n - 2, n - 1))
    return build_from_edges(n, edges)


def build_Gprime2(n: int) -> Graph:
    """Clique A of order n-3 plus an independent 3-set {b_1,b_2,b_3} with
    N(b_i) = {a_i, x} for distinct a_1,a_2,a_3,x in A."""
    if n < 7:
        raise ValueError(f"build_Gprime2(n={n}) needs n >= 7")
    clique = list(range(n - 3))
    edges = _clique_edges(clique)
    for i in range(3):
        b = n - 3 + i
        edges += [(i, b), (3, b)]
    return build_from_edges(n, edges)


def build_F3(n: int) -> Graph:
    """Clique A of order n-4 plus a 4-set B inducing a perfect matching, every
    B-vertex joined to the same two vertices of A."""
    if n < 8:
        raise ValueError(f"build_F3(n={n}) needs n >= 8")
    clique = list(range(n - 4))
    edges = _clique_edges(clique)
    for v in range(n - 4, n):
        edges += [(0, v), (1, v)]
    edges += [(n - 4, n - 3), (n - 2, n - 1)]
    return build_from_edges(n, edges)


def build_GprimeD(n: int, d: int) -> Graph:
    """Clique A of order n-d-1 plus an independent (d+1)-set {v_1..v_{d+1}}
    with N(v_i) = S + z_i for a fixed (d-1)-set S and distinct z_i in A.

    A must contain S and the z_i disjointly, so n >= 3d+1.  Hamiltonian
    exactly when d >= 3.
    """
    if d < 1 or n < 3 * d + 1:
        raise ValueError(f"build_GprimeD(n={n}, d={d}) needs d >= 1 and n >= 3d+1")
    clique = list(range(n - d - 1))
    edges = _clique_edges(clique)
    for i in range(d + 1):
        v = n - d - 1 + i
        edges += [(s, v) for s in range(d - 1)]
        edges.append((d - 1 + i, v))
    return build_from_edges(n, edges)


@dataclass(frozen=True)
class Family:
    """A template family member: tag plus build parameters."""

    tag: str
    n: int
    d: int = 0

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")

    def is_valid(self) -> bool:
        """Whether the parameters are in the family's defined range."""
        n, d = self.n, self.d
        if self.tag in ("h", "kprime"):
            return 1 <= d <= (n - 1) // 2
        if self.tag == "hprime":
            return d >= 1 and n >= 2 * d + 2
        if self.tag == "gprime2":
            return n >= 7
        if self.tag == "f3":
            return n >= 8
        return d >= 1 and n >= 3 * d + 1

    def build(self) -> Graph:
        if self.tag == "h":
            return build_H(self.n, self.d)
        if self.tag == "kprime":
            return build_Kprime(self.n, self.d)
        if self.tag == "hprime":
            return build_Hprime(self.n, self.d)
        if self.tag == "gprime2":
            return build_Gprime2(self.n)
        if self.tag == "f3":
            return build_F3(self.n)
        return build_GprimeD(self.n, self.d)

    def label(self) -> str:
        if self.tag in ("gprime2", "f3"):
            return f"{self.tag}({self.n})"
        return f"{self.tag}({self.n},{self.d})"
