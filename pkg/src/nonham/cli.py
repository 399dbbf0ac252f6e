"""Command-line interface: stream-oriented subcommands over graph6 lines.

Graphs enter one per line (stdin or --in FILE) and results leave one per
input line on stdout; diagnostics go to stderr.  Counts are printed as
decimal strings so downstream consumers never face 64-bit overflow.

Exit codes: 0 success / verified, 1 verification found violations,
2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Iterator

from nonham import formulas
from nonham.classify import classify
from nonham.counting import count_cliques, count_labeled_embeddings, count_unlabeled
from nonham.enumeration import apply_filters, enumerate_nonisomorphic, stream_graph6
from nonham.families import Family
from nonham.graphs import Graph, Graph6Error, graph6_decode, graph6_encode
from nonham.hamilton import (
    find_hamiltonian_cycle,
    hamiltonian_path_between,
    is_hamiltonian,
    path_partition,
    posa_certificate,
    saturate,
)
from nonham import verify as verify_mod


def _default_workers() -> int:
    env = os.environ.get("NONHAM_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _input_graphs(path: str | None) -> Iterator[Graph]:
    if path is None or path == "-":
        for lineno, line in enumerate(sys.stdin, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield graph6_decode(line)
            except Graph6Error as exc:
                raise Graph6Error(f"<stdin>:{lineno}: {exc}") from exc
    else:
        yield from stream_graph6(path)


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", metavar="FILE",
                        help="graph6 input file ('-' or absent: stdin)")


def _cmd_gen(args) -> int:
    fam = Family(args.family, args.n, args.d if args.d is not None else 0)
    g = fam.build()
    if args.format == "json":
        print(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}))
    else:
        print(graph6_encode(g))
    return 0


def _cmd_eval(args) -> int:
    if args.expr == "h":
        print(formulas.h(args.n, args.d))
    elif args.expr == "hk":
        print(formulas.h_k(args.n, args.x, args.k))
    elif args.expr == "e":
        print(formulas.e_bound(args.n, args.d))
    elif args.expr == "d0":
        print(formulas.d0(args.n))
    elif args.expr == "n0":
        print(formulas.n0_threshold(args.d, args.t))
    elif args.expr == "falling":
        print(formulas.falling_factorial(args.k, args.t))
    else:
        val = formulas.gen_binom(Fraction(args.a), args.b)
        print(val)
    return 0


def _cmd_ham(args) -> int:
    for g in _input_graphs(args.input):
        if args.action == "check":
            print("true" if is_hamiltonian(g) else "false")
        elif args.action == "cycle":
            cyc = find_hamiltonian_cycle(g)
            print(" ".join(map(str, cyc)) if cyc else "none")
        else:
            path = hamiltonian_path_between(g, args.src, args.dst)
            print(" ".join(map(str, path)) if path else "none")
    return 0


def _cmd_saturate(args) -> int:
    for g in _input_graphs(args.input):
        print(graph6_encode(saturate(g)))
    return 0


def _cmd_posa(args) -> int:
    for g in _input_graphs(args.input):
        cert = posa_certificate(g)
        if cert is None:
            print("none")
        else:
            print(json.dumps({"r": cert.r, "vertices": list(cert.vertices)}))
    return 0


def _cmd_pathcover(args) -> int:
    for g in _input_graphs(args.input):
        part = path_partition(g, args.t)
        if part is None:
            print("none")
        else:
            print(json.dumps([list(p) for p in part.paths]))
    return 0


def _cmd_count(args) -> int:
    with open(args.pattern, encoding="ascii") as fh:
        pattern = graph6_decode(fh.readline())
    for g in _input_graphs(args.input):
        if args.unlabeled:
            print(count_unlabeled(g, pattern))
        else:
            print(count_labeled_embeddings(g, pattern))
    return 0


def _cmd_cliques(args) -> int:
    for g in _input_graphs(args.input):
        print(count_cliques(g, args.k))
    return 0


def _cmd_classify(args) -> int:
    for g in _input_graphs(args.input):
        result = classify(g, args.d)
        print(json.dumps({
            "matches": result.tags(),
            "skipped": [fam.label() for fam in result.skipped],
        }))
    return 0


def _cmd_enum(args) -> int:
    stream = apply_filters(
        enumerate_nonisomorphic(args.n),
        min_degree_bound=args.min_degree,
        require_nonhamiltonian=args.nonhamiltonian,
    )
    for g in stream:
        print(graph6_encode(g))
    return 0


def _cmd_verify(args) -> int:
    if args.input is not None:
        stream = _input_graphs(args.input)
    else:
        stream = enumerate_nonisomorphic(args.n)
    workers = max(1, args.workers) if args.workers else _default_workers()
    kind = args.theorem
    needs = {"edge-bound": ("d",), "clique-bound": ("d", "k"),
             "stability": ("d", "k"), "prior-stability": ("d", "k"),
             "star": ("d", "t"), "saturation": ()}
    for name in needs[kind]:
        if getattr(args, name) is None:
            raise ValueError(f"verify {kind} requires --{name}")
    if kind == "edge-bound":
        report = verify_mod.verify_edge_bound(args.n, args.d, stream, workers)
    elif kind == "clique-bound":
        report = verify_mod.verify_clique_bound(args.n, args.d, args.k, stream, workers)
    elif kind == "stability":
        report = verify_mod.verify_stability(args.n, args.d, args.k, stream, workers)
    elif kind == "prior-stability":
        report = verify_mod.verify_prior_stability(args.n, args.d, args.k, stream, workers)
    elif kind == "star":
        report = verify_mod.verify_star_claim(args.n, args.d, args.t, stream, workers)
    else:
        report = verify_mod.verify_saturation_lemmas(args.n, stream, workers)
    text = report.to_json()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(
        f"{kind}: {report.graphs_checked} checked, "
        f"{len(report.violations)} violations, {workers} workers, "
        f"{report.elapsed_ms} ms",
        file=sys.stderr,
    )
    return 0 if report.verified else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonham",
        description="Extremal nonhamiltonian graphs: build, count, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a family member")
    p.add_argument("--family", required=True,
                   choices=["h", "kprime", "hprime", "gprime2", "f3", "gprimed"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("eval", help="evaluate a bound formula exactly")
    ev = p.add_subparsers(dest="expr", required=True)
    q = ev.add_parser("h")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q = ev.add_parser("hk")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--x", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q = ev.add_parser("e")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q = ev.add_parser("d0")
    q.add_argument("--n", type=int, required=True)
    q = ev.add_parser("n0")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q = ev.add_parser("falling")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q = ev.add_parser("binom")
    q.add_argument("--a", required=True, help="integer or rational like 5/2")
    q.add_argument("--b", type=int, required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("ham", help="hamiltonicity queries")
    hm = p.add_subparsers(dest="action", required=True)
    q = hm.add_parser("check")
    _add_input(q)
    q = hm.add_parser("cycle")
    _add_input(q)
    q = hm.add_parser("path")
    q.add_argument("--from", dest="src", type=int, required=True)
    q.add_argument("--to", dest="dst", type=int, required=True)
    _add_input(q)
    p.set_defaults(func=_cmd_ham)

    p = sub.add_parser("saturate", help="nonhamiltonian saturation closure")
    _add_input(p)
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser("posa", help="low-degree certificate")
    _add_input(p)
    p.set_defaults(func=_cmd_posa)

    p = sub.add_parser("pathcover", help="partition vertices into <= t paths")
    p.add_argument("--t", type=int, required=True)
    _add_input(p)
    p.set_defaults(func=_cmd_pathcover)

    p = sub.add_parser("count", help="labeled embeddings of a pattern")
    p.add_argument("--pattern", required=True, metavar="P.g6")
    p.add_argument("--unlabeled", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("cliques", help="k-clique counts")
    p.add_argument("--k", type=int, required=True)
    _add_input(p)
    p.set_defaults(func=_cmd_cliques)

    p = sub.add_parser("classify", help="containment in the template families")
    p.add_argument("--d", type=int, required=True)
    _add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enum", help="non-isomorphic graphs at small order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int, dest="min_degree")
    p.add_argument("--nonhamiltonian", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("verify", help="exhaustive theorem sweeps")
    p.add_argument("theorem", choices=[
        "edge-bound", "clique-bound", "stability", "prior-stability",
        "star", "saturation",
    ])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--report", metavar="OUT.json")
    _add_input(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"nonham: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
