"""Exhaustive theorem sweeps over graph streams, with JSON reports.

Each sweep filters a stream down to the graphs satisfying the statement's
hypotheses, tests the stated conclusion on every survivor, and reports
violations (there should be none), extremal witnesses, and per-family tallies
where applicable.  Hypothesis gating is literal: strict thresholds stay
strict, non-strict bounds stay non-strict.

Reports are deterministic: violations and witnesses are canonically sorted by
graph6 string, and sharded runs merge into byte-identical reports (modulo the
elapsed-time field) regardless of worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from nonham.classify import _template_set, classify, is_isomorphic, spanning_subgraph_of
from nonham.counting import count_cliques
from nonham.families import Family, build_H, build_Kprime
from nonham.formulas import e_bound, h_k, star_count_formula
from nonham.graphs import Graph, graph6_decode, graph6_encode, min_degree
from nonham.hamilton import is_hamiltonian, is_saturated


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    graphs_checked: int
    violations: list[dict]
    witnesses: list[str]
    elapsed_ms: int
    extra: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "graphs_checked": str(self.graphs_checked),
            "violations": self.violations,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
            "extra": self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _half(n: int) -> int:
    return (n - 1) // 2


# Examiners return None when a hypothesis fails, else
# (ok, observed, bound, is_witness, tallies).


def _examine_edge_bound(g: Graph, p: dict):
    if min_degree(g) < p["d"] or is_hamiltonian(g):
        return None
    observed = g.edge_count()
    bound = e_bound(p["n"], p["d"])
    return observed <= bound, observed, bound, observed == bound, {}


def _examine_clique_bound(g: Graph, p: dict):
    if min_degree(g) < p["d"] or is_hamiltonian(g):
        return None
    n, d, k = p["n"], p["d"], p["k"]
    observed = count_cliques(g, k)
    bound = max(h_k(n, d, k), h_k(n, _half(n), k))
    return observed <= bound, observed, bound, observed == bound, {}


def _examine_stability(g: Graph, p: dict):
    n, d, k = p["n"], p["d"], p["k"]
    if min_degree(g) < d or is_hamiltonian(g):
        return None
    threshold = max(h_k(n, d + 2, k), h_k(n, _half(n), k))
    observed = count_cliques(g, k)
    if observed <= threshold:
        return None
    result = classify(g, d)
    tallies = {fam.label(): 1 for fam in result.matched}
    ok = bool(result.matched)
    return ok, observed, threshold, ok, tallies


def _examine_prior_stability(g: Graph, p: dict):
    n, d, k = p["n"], p["d"], p["k"]
    if min_degree(g) < d or is_hamiltonian(g):
        return None
    threshold = max(h_k(n, d + 1, k), h_k(n, _half(n), k))
    observed = count_cliques(g, k)
    if observed <= threshold:
        return None
    tallies = {}
    for fam in (Family("h", n, d), Family("kprime", n, d)):
        if spanning_subgraph_of(g, fam.build()) is not None:
            tallies[fam.label()] = 1
    ok = bool(tallies)
    return ok, observed, threshold, ok, tallies


def _examine_star(g: Graph, p: dict):
    n, d, t = p["n"], p["d"], p["t"]
    if min_degree(g) < d or is_hamiltonian(g):
        return None
    observed = star_count_formula(g.degrees(), t)
    low, high = build_H(n, d), build_H(n, _half(n))
    bound = max(
        star_count_formula(low.degrees(), t),
        star_count_formula(high.degrees(), t),
    )
    if observed > bound:
        return False, observed, bound, False, {}
    if observed < bound:
        return True, observed, bound, False, {}
    ok = is_isomorphic(g, low) or is_isomorphic(g, high)
    return ok, observed, bound, ok, {"equality": 1}


def _complete_complement_radii(g: Graph) -> list[int]:
    """All r with an r-set of degree-<=r vertices whose removal leaves a clique."""
    degs = g.degrees()
    nonedges = g.nonedges()
    out = []
    for r in range(1, _half(g.n) + 1):
        low = [v for v in range(g.n) if degs[v] <= r]
        if len(low) >= r and _cover_within(nonedges, low, r):
            out.append(r)
    return out


def _cover_within(nonedges: list[tuple[int, int]], allowed: list[int], size: int) -> bool:
    """Is some size-subset of allowed a vertex cover of the nonedges?"""
    allowed_set = set(allowed)
    if any(u not in allowed_set and v not in allowed_set for u, v in nonedges):
        return False
    for d_set in combinations(allowed, size):
        chosen = set(d_set)
        if all(u in chosen or v in chosen for u, v in nonedges):
            return True
    return False


def _examine_saturation(g: Graph, p: dict):
    n = p["n"]
    if not is_saturated(g):
        return None
    if not any(count_cliques(g, k) > h_k(n, _half(n), k) for k in (2, 3, 4)):
        return None
    radii = _complete_complement_radii(g)
    if not radii:
        return False, "no complete-complement set", "some r <= (n-1)/2", False, {}
    delta = min_degree(g)
    tallies = {f"r={radii[0]}": 1}
    if radii[0] == delta:
        ok = is_isomorphic(g, build_H(n, delta)) or is_isomorphic(
            g, build_Kprime(n, delta)
        )
        if not ok:
            return False, f"minimal r equals delta={delta}", "extremal template", False, tallies
        tallies["extremal"] = 1
    return True, f"r={radii[0]}", "", True, tallies


_EXAMINERS = {
    "edge-bound": _examine_edge_bound,
    "clique-bound": _examine_clique_bound,
    "stability": _examine_stability,
    "prior-stability": _examine_prior_stability,
    "star": _examine_star,
    "saturation": _examine_saturation,
}


def _run_stripe(op: str, params: dict, records: list[str]) -> dict:
    examine = _EXAMINERS[op]
    checked = 0
    total = 0
    violations: set[tuple[str, str, str]] = set()
    witnesses: set[str] = set()
    tallies: dict[str, int] = {}
    for record in records:
        g = graph6_decode(record)
        if g.n != params["n"]:
            raise ValueError(
                f"stream graph of order {g.n} in a sweep over order {params['n']}"
            )
        total += 1
        outcome = examine(g, params)
        if outcome is None:
            continue
        checked += 1
        ok, observed, bound, is_witness, tally = outcome
        for key, val in tally.items():
            tallies[key] = tallies.get(key, 0) + val
        if not ok:
            violations.add((record, str(observed), str(bound)))
        elif is_witness:
            witnesses.add(record)
    return {
        "checked": checked,
        "total": total,
        "violations": violations,
        "witnesses": witnesses,
        "tallies": tallies,
    }


def _merge(parts: list[dict]) -> dict:
    merged = {
        "checked": 0,
        "total": 0,
        "violations": set(),
        "witnesses": set(),
        "tallies": {},
    }
    for part in parts:
        merged["checked"] += part["checked"]
        merged["total"] += part["total"]
        merged["violations"] |= part["violations"]
        merged["witnesses"] |= part["witnesses"]
        for key, val in part["tallies"].items():
            merged["tallies"][key] = merged["tallies"].get(key, 0) + val
    return merged


def _run_op(
    op: str, params: dict, stream: Iterable[Graph], workers: int, extra: dict | None = None
) -> VerificationReport:
    t0 = time.monotonic()
    records = [graph6_encode(g) for g in stream]
    if workers <= 1 or len(records) < 2 * workers:
        merged = _run_stripe(op, params, records)
    else:
        stripes = [records[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(_run_stripe, [op] * workers, [params] * workers, stripes)
            )
        merged = _merge(parts)
    violations = [
        {"graph6": code, "observed": observed, "bound": bound}
        for code, observed, bound in sorted(merged["violations"])
    ]
    report_extra = {
        "stream_total": merged["total"],
        "tallies": dict(sorted(merged["tallies"].items())),
    }
    if extra:
        report_extra.update(extra)
    return VerificationReport(
        theorem=op,
        params=params,
        graphs_checked=merged["checked"],
        violations=violations,
        witnesses=sorted(merged["witnesses"]),
        elapsed_ms=int((time.monotonic() - t0) * 1000),
        extra=report_extra,
    )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def verify_edge_bound(
    n: int, d: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """e(G) <= e(n,d) for every nonhamiltonian G with min degree >= d."""
    _require(1 <= d <= _half(n), f"need 1 <= d <= {_half(n)}")
    return _run_op("edge-bound", {"n": n, "d": d}, stream, workers)


def verify_clique_bound(
    n: int, d: int, k: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """N_k(G) <= max{h_k(n,d), h_k(n, floor((n-1)/2))} on the same class."""
    _require(1 <= d <= _half(n), f"need 1 <= d <= {_half(n)}")
    _require(k >= 2, "need k >= 2")
    return _run_op("clique-bound", {"n": n, "d": d, "k": k}, stream, workers)


def verify_stability(
    n: int, d: int, k: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """Graphs beyond the h_k(n,d+2) threshold embed in a permitted template."""
    _require(n >= 3, "need n >= 3")
    _require(1 <= d <= _half(n), f"need 1 <= d <= {_half(n)}")
    _require(k >= 2, "need k >= 2")
    skipped = [fam.label() for fam in _template_set(n, d) if not fam.is_valid()]
    return _run_op(
        "stability",
        {"n": n, "d": d, "k": k},
        stream,
        workers,
        extra={"skipped_templates": skipped},
    )


def verify_prior_stability(
    n: int, d: int, k: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """Graphs beyond the h_k(n,d+1) threshold embed in the two base templates."""
    _require(n >= 3, "need n >= 3")
    _require(1 <= d <= _half(n), f"need 1 <= d <= {_half(n)}")
    _require(k >= 2, "need k >= 2")
    return _run_op("prior-stability", {"n": n, "d": d, "k": k}, stream, workers)


def verify_star_claim(
    n: int, d: int, t: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """Star counts are maximized exactly by the two extremal constructions."""
    _require(1 <= d <= _half(n), f"need 1 <= d <= {_half(n)}")
    _require(3 <= t <= n, "need 3 <= t <= n")
    return _run_op("star", {"n": n, "d": d, "t": t}, stream, workers)


def verify_saturation_lemmas(
    n: int, stream: Iterable[Graph], workers: int = 1
) -> VerificationReport:
    """Saturated graphs with many cliques split as low-degree set + clique."""
    _require(n >= 3, "need n >= 3")
    return _run_op("saturation", {"n": n}, stream, workers)
