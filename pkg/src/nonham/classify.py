"""Spanning-subgraph containment of a graph in the template families.

``spanning_subgraph_of`` searches for a bijection between equal-order vertex
sets carrying every edge of the graph into the template.  Templates here are
nearly complete, so degree-compatibility pruning (a vertex may only map to a
template vertex of at least its degree) collapses the search; candidates are
tried in ascending template degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from nonham.families import Family
from nonham.graphs import Graph, bits, is_independent, mask_of


def spanning_subgraph_of(g: Graph, template: Graph) -> list[int] | None:
    """A bijection mapping edges of g into edges of template, or None.

    The returned list sends g-vertex v to template vertex result[v].
    """
    if g.n != template.n:
        raise ValueError("spanning containment needs equal orders")
    n = g.n
    if g.edge_count() > template.edge_count():
        return None
    gdeg = g.degrees()
    tdeg = template.degrees()
    for a, b in zip(sorted(gdeg), sorted(tdeg)):
        if a > b:
            return None
    order = sorted(range(n), key=lambda v: (-gdeg[v], v))
    tsorted = sorted(range(n), key=lambda w: (tdeg[w], w))
    cand_mask = [
        sum(1 << w for w in range(n) if tdeg[w] >= gdeg[v]) for v in range(n)
    ]
    back: list[list[int]] = []
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        back.append([pos[u] for u in bits(g.adj[v]) if pos[u] < i])
    images = [0] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        cand = cand_mask[v] & ~used
        for j in back[i]:
            cand &= template.adj[images[j]]
        for w in tsorted:
            if cand >> w & 1:
                images[i] = w
                if place(i + 1, used | 1 << w):
                    return True
        return False

    if not place(0, 0):
        return None
    result = [0] * n
    for i, v in enumerate(order):
        result[v] = images[i]
    return result


def is_isomorphic(g: Graph, other: Graph) -> bool:
    """Equal order and edge count plus a spanning containment witness."""
    return (
        g.n == other.n
        and g.edge_count() == other.edge_count()
        and spanning_subgraph_of(g, other) is not None
    )


def _match_h_fast(g: Graph, d: int) -> list[int] | None:
    """Containment in the clique-plus-independent-set template, directly.

    g fits iff some independent d-set B has all its outside neighbors inside a
    set of at most d vertices; B maps to the low-degree side, its neighborhood
    to the attachment vertices, everything else to the clique.
    """
    n = g.n
    gdeg = g.degrees()
    low = [v for v in range(n) if gdeg[v] <= d]
    for B in combinations(low, d):
        bmask = mask_of(B)
        if not is_independent(g, bmask):
            continue
        nb = 0
        for v in B:
            nb |= g.adj[v]
        nb &= ~bmask
        if nb.bit_count() > d:
            continue
        result = [0] * n
        attach = list(bits(nb))
        for i, v in enumerate(B):
            result[v] = n - d + i
        for i, v in enumerate(attach):
            result[v] = i
        rest = [v for v in range(n) if not bmask >> v & 1 and not nb >> v & 1]
        slots = [w for w in range(len(attach), n - d)]
        for v, w in zip(rest, slots):
            result[v] = w
        return result
    return None


@dataclass(frozen=True)
class ClassificationResult:
    """Families containing the graph as a spanning subgraph."""

    matched: tuple[Family, ...]
    witnesses: dict[Family, list[int]]
    skipped: tuple[Family, ...]

    def tags(self) -> list[str]:
        return [fam.label() for fam in self.matched]


def _template_set(n: int, d: int) -> list[Family]:
    members = [
        Family("h", n, d),
        Family("h", n, d + 1),
        Family("kprime", n, d),
        Family("kprime", n, d + 1),
        Family("hprime", n, d),
    ]
    if d == 2:
        members.append(Family("gprime2", n, 2))
    if d == 3:
        members.append(Family("f3", n, 3))
    return members


def classify(g: Graph, d: int) -> ClassificationResult:
    """Test g against every defined template for this degree bound.

    Templates whose parameters fall outside their family's defined range are
    skipped and recorded rather than guessed at.
    """
    n = g.n
    if not 1 <= d <= (n - 1) // 2:
        raise ValueError(f"classify needs 1 <= d <= {(n - 1) // 2}")
    matched: list[Family] = []
    witnesses: dict[Family, list[int]] = {}
    skipped: list[Family] = []
    for fam in _template_set(n, d):
        if not fam.is_valid():
            skipped.append(fam)
            continue
        template = fam.build()
        if fam.tag == "h" and n > 16:
            found = _match_h_fast(g, fam.d)
        else:
            found = spanning_subgraph_of(g, template)
        if found is not None:
            _check_witness(g, template, found)
            matched.append(fam)
            witnesses[fam] = found
    return ClassificationResult(tuple(matched), witnesses, tuple(skipped))


def _check_witness(g: Graph, template: Graph, mapping: list[int]) -> None:
    if sorted(mapping) != list(range(g.n)):
        raise AssertionError("witness is not a bijection")
    for u, v in g.edges():
        if not template.has_edge(mapping[u], mapping[v]):
            raise AssertionError("witness does not preserve an edge")
