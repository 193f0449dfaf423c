"""Command-line front end.

Exit codes: 0 success, 1 theorem failure found, 2 usage or parse error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import graph as gr
from .errors import CapacityError, Graph6ParseError, InvalidArgument
from .corpus import MAX_GENERATED, enumerate_graph6, read_graph6_file
from .graph6 import graph6_decode, to_graph6
from .profile import profile
from .search import PredicateSyntaxError, evaluate, parse_predicate
from .theorems import SCHEMA_VERSION, resolve_ids, run_suites

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

log = logging.getLogger("wellcovered")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'5' -> [5]; '1..6' -> [1..6] inclusive."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use K or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def family_graph(spec: str) -> gr.Graph:
    """Build a graph from 'family:params'.

    complete:N  cycle:N  path:N  empty:N  bipartite:M,N
    corona:P:BASE (BASE is another family spec, e.g. corona:2:cycle:3)
    join-cliques:A,B/C,D (or A,B,C,D split in half)
    """
    name, _, rest = spec.partition(":")
    if name in ("complete", "cycle", "path", "empty"):
        (n,) = _ints(rest) or [None]
        if n is None:
            raise UsageError(f"{name} needs a size, e.g. {name}:5")
        return {"complete": gr.complete, "cycle": gr.cycle, "path": gr.path, "empty": gr.Graph.empty}[name](n)
    if name == "bipartite":
        sizes = _ints(rest)
        if len(sizes) != 2:
            raise UsageError("bipartite needs two sizes, e.g. bipartite:2,3")
        return gr.complete_bipartite(*sizes)
    if name == "corona":
        p, _, base = rest.partition(":")
        if not base:
            raise UsageError("corona needs P and a base, e.g. corona:2:cycle:3")
        return gr.corona_complete(family_graph(base), _ints(p)[0])
    if name == "join-cliques":
        return join_cliques_from(rest)
    raise UsageError(f"unknown family {name!r}")


def join_cliques_from(text: str) -> gr.Graph:
    if "/" in text:
        left, right = (_ints(t) for t in text.split("/", 1))
    else:
        sizes = _ints(text)
        if len(sizes) < 2 or len(sizes) % 2:
            raise UsageError("join-cliques needs an even number of sizes or LEFT/RIGHT")
        left, right = sizes[: len(sizes) // 2], sizes[len(sizes) // 2:]
    return gr.join_cliques(left, right)


def parse_edges(text: str, order: int | None) -> gr.Graph:
    edges = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        try:
            a, b = (int(x) for x in tok.split("-"))
        except ValueError:
            raise UsageError(f"bad edge {tok!r}; use A-B") from None
        edges.append((a, b))
    n = max([max(e) for e in edges], default=-1) + 1
    if order is not None:
        if order < n:
            raise UsageError(f"--order {order} is smaller than the largest label + 1")
        n = order
    return gr.Graph.from_edges(n, edges)


def _graph_from_args(args) -> gr.Graph:
    given = [x for x in (args.g6, args.edges, args.gen) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --g6, --edges, --gen")
    if args.g6 is not None:
        text = sys.stdin.readline().strip() if args.g6 == "-" else args.g6
        return graph6_decode(text)
    if args.edges is not None:
        return parse_edges(args.edges, args.order)
    return family_graph(args.gen)


def _check_n_range(ns: list[int], allow_n8: bool) -> None:
    if ns[0] < 1 or ns[-1] > MAX_GENERATED:
        raise UsageError(f"n must lie in 1..{MAX_GENERATED}")
    if ns[-1] == 8 and not allow_n8:
        raise UsageError("n = 8 generation takes a while; pass --allow-n8")


def _corpus_codes(args) -> list[bytes]:
    if getattr(args, "input", None):
        stream = read_graph6_file("/dev/stdin" if args.input == "-" else args.input, strict=not args.lenient)
        codes = [to_graph6(G).encode() for G in stream]
        if stream.skipped:
            log.warning("skipped %d malformed lines", stream.skipped)
        return codes
    ns = parse_range(args.n)
    _check_n_range(ns, args.allow_n8)
    codes = []
    for n in ns:
        codes.extend(enumerate_graph6(n, getattr(args, "connected", False), progress=(n == 8)))
    return codes


def _print_profile(prof, as_json: bool) -> None:
    if as_json:
        print(json.dumps(prof.to_json(), sort_keys=True))
        return
    for key, value in prof.to_json().items():
        print(f"{key:22s} {value}")


# commands ------------------------------------------------------------------------


def cmd_check(args) -> int:
    G = _graph_from_args(args)
    if G.n == 0:
        raise UsageError("graph has no vertices")
    _print_profile(profile(G), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = resolve_ids(args.theorems.split(",") if args.theorems != "all" else "all")
    ps = parse_range(args.p)
    if ps[0] < 1:
        raise UsageError("p must be >= 1")
    if ps[-1] > 3 and not args.allow_large_p:
        raise UsageError("p above 3 needs --allow-large-p")
    codes = _corpus_codes(args)
    start = time.perf_counter()
    reports = run_suites(codes, ids, ps, workers=args.workers)
    total = sum(len(r.failures) for r in reports)
    if args.json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "corpus": {"input": args.input, "n": None if args.input else args.n, "p": args.p},
            "graphs": len(codes),
            "total_failures": total,
            "reports": [r.to_json() for r in reports],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.theorem_id:10s} checked={r.graphs_checked:6d} "
                  f"failures={len(r.failures):4d} {r.elapsed_ms:9.1f} ms")
            for f in r.failures[: args.show]:
                print(f"     {f.graph6} p={f.p}: {f.witness} {f.detail or ''}")
        print(f"{len(codes)} graphs, {total} failures, {time.perf_counter() - start:.1f} s")
    return EXIT_FAILURE if total else EXIT_OK


def cmd_search(args) -> int:
    try:
        atoms = parse_predicate(args.predicate)
    except PredicateSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.predicate}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    count = 0
    for code in _corpus_codes(args):
        G = graph6_decode(code)
        if not evaluate(atoms, G):
            continue
        count += 1
        if args.count_only:
            continue
        prof = profile(G)
        if args.json:
            print(json.dumps(prof.to_json(), sort_keys=True))
        else:
            print(f"{prof.graph6}\tn={prof.n} alpha={prof.alpha} wp={prof.wp_order} "
                  f"critical={int(prof.alpha_critical)} tf={int(prof.triangle_free)} "
                  f"ltf={int(prof.locally_triangle_free)}")
    if args.count_only:
        print(count)
    return EXIT_OK


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "enumerate":
        if args.n is None:
            raise UsageError("enumerate needs --n")
        ns = parse_range(args.n)
        _check_n_range(ns, args.allow_n8)
        lines = [c.decode() for n in ns for c in enumerate_graph6(n, args.connected, progress=(n == 8))]
    else:
        if fam in ("complete", "cycle", "path", "empty"):
            if args.n is None:
                raise UsageError(f"{fam} needs --n")
            G = family_graph(f"{fam}:{args.n}")
        elif fam == "bipartite":
            if args.m is None or args.n is None:
                raise UsageError("bipartite needs --m and --n")
            G = gr.complete_bipartite(args.m, int(args.n))
        elif fam == "corona":
            if args.base is None or args.p is None:
                raise UsageError("corona needs --base and --p")
            G = gr.corona_complete(family_graph(args.base), args.p)
        else:
            if args.sizes is None:
                raise UsageError("join-cliques needs --sizes")
            G = join_cliques_from(args.sizes)
        lines = [to_graph6(G)]
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wellcovered", description="Exact W_p / alpha-critical laboratory for small graphs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--g6", help="graph6 string ('-' reads one line from stdin)")
        p.add_argument("--edges", help="edge list like 0-1,1-2,2-0")
        p.add_argument("--order", type=int, help="vertex count for --edges (isolated vertices)")
        p.add_argument("--gen", help="family spec, e.g. cycle:5, corona:2:cycle:3, join-cliques:2,2/2,2")

    def corpus_input(p, default_n):
        p.add_argument("--n", default=default_n, help="vertex count or range LO..HI (max 8)")
        p.add_argument("--input", help="graph6 file instead of the generated corpus ('-' for stdin)")
        p.add_argument("--lenient", action="store_true", help="skip malformed graph6 lines")
        p.add_argument("--allow-n8", action="store_true", help="permit n = 8 generation")
        p.add_argument("--connected", action="store_true", help="connected graphs only")
        p.add_argument("--workers", type=int, default=None, help="worker processes (env WELLCOVERED_WORKERS)")
        p.add_argument("--seed", type=int, default=None, help="reserved; nothing is randomized")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="profile one graph")
    graph_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run theorem suites over a corpus")
    p.add_argument("--theorems", default="all", help="comma-separated ids or 'all'")
    p.add_argument("--p", default="1..3", help="p value or range")
    p.add_argument("--allow-large-p", action="store_true")
    p.add_argument("--show", type=int, default=5, help="failures listed per theorem in text mode")
    corpus_input(p, "1..7")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="list class representatives satisfying a predicate")
    p.add_argument("predicate")
    p.add_argument("--count-only", action="store_true")
    corpus_input(p, "1..7")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="write graph6 lines")
    p.add_argument("family", choices=["complete", "cycle", "path", "empty", "bipartite", "corona",
                                      "join-cliques", "enumerate"])
    p.add_argument("--n")
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--base")
    p.add_argument("--sizes")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--allow-n8", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, InvalidArgument, Graph6ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
