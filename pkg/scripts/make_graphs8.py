#!/usr/bin/env python3
"""Regenerate the order-8 isomorph-free graph corpus (tests/data/graphs_n8.g6).

Extends every canonical 7-vertex graph by an eighth vertex over all 2^7
attachment patterns, canonicalizes each extension, and deduplicates.  The
result is written one graph6 record per line, sorted by payload; the known
class count on 8 vertices is 12346.

Usage: python scripts/make_graphs8.py [OUT]
"""

import sys
import time
from pathlib import Path

from nonham.enumeration import canonical_form, enumerate_nonisomorphic
from nonham.graphs import Graph, graph6_encode


def extend_by_vertex(g: Graph, neighborhood: int) -> Graph:
    rows = list(g.adj) + [neighborhood]
    for v in range(g.n):
        if neighborhood >> v & 1:
            rows[v] |= 1 << g.n
    return Graph(g.n + 1, tuple(rows))


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs_n8.g6"
    )
    seen: set[str] = set()
    t0 = time.time()
    base = list(enumerate_nonisomorphic(7))
    for i, g in enumerate(base):
        for neighborhood in range(1 << 7):
            rep = canonical_form(extend_by_vertex(g, neighborhood))
            seen.add(graph6_encode(rep))
        if (i + 1) % 100 == 0:
            print(
                f"{i + 1}/{len(base)} base graphs, {len(seen)} classes, "
                f"{time.time() - t0:.0f}s",
                file=sys.stderr,
            )
    records = sorted(seen)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(records) + "\n", encoding="ascii")
    print(f"{len(records)} graphs -> {out}", file=sys.stderr)
    return 0 if len(records) == 12346 else 1


if __name__ == "__main__":
    sys.exit(main())
