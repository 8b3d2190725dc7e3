"""Command-line front end: ``hypercomp <command> [args]``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget or
size-guard exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import constructions as cons
from .bounds import best_lower_bound
from .competition import Witness, competition_hypergraph, default_added, verify_witness
from .errors import InputError, ResourceError
from .exact import DEFAULT_EXACT_BUDGET, exact_hk
from .formats import emit_digraph, emit_hypergraph, parse_added_list, parse_digraph, parse_hypergraph, to_dot
from .hypercore import Hypergraph, connected_components, degrees, has_no_cycle, is_connected, uniformity
from .schemas import SCHEMA_VERSION

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

METHODS = (
    "auto",
    "elimination",
    "extra-edges",
    "graph",
    "complete-uniform",
    "degree-one",
    "acyclic-uniform",
    "fallback",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 too; keep the same prefix as other errors
        _diagnose(f"{self.prog}: {message}")
        raise SystemExit(EXIT_INPUT)


def _diagnose(message: str) -> None:
    color = sys.stderr.isatty() and "NO_COLOR" not in os.environ
    prefix = "\x1b[31merror:\x1b[0m" if color else "error:"
    print(f"{prefix} {message}", file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_hypergraph(path: str) -> Hypergraph:
    try:
        return parse_hypergraph(_read(path))
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _json(doc: dict) -> str:
    return json.dumps({"schemaVersion": SCHEMA_VERSION, **doc}, indent=2) + "\n"


def _witness_doc(w: Witness) -> dict:
    return {
        "vertices": list(w.digraph.vertices),
        "arcs": [list(a) for a in w.digraph.arcs],
        "added": list(w.added),
    }


def _emit_witness(args, w: Witness, header: list[str], out) -> None:
    text = to_dot(w.digraph, header) if args.dot else emit_digraph(w.digraph, header)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        for line in header:
            out.write(line + "\n")
    else:
        out.write(text)


def cmd_info(args, out) -> int:
    h = _load_hypergraph(args.hypergraph)
    r = uniformity(h)
    deg = degrees(h)
    fields = [
        f"vertices={h.n}",
        f"edges={h.t}",
        f"uniform={r if r is not None else 'none'}",
        f"components={len(connected_components(h))}",
        f"acyclic={str(has_no_cycle(h)).lower()}",
        f"isolated={len(h.isolated_vertices())}",
        f"min_degree={min(deg.values()) if deg else 0}",
        f"min_edge_size={min(len(e) for e in h.edges) if h.edges else 'none'}",
    ]
    out.write(" ".join(fields) + "\n")
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    h = _load_hypergraph(args.hypergraph)
    rep = best_lower_bound(h)
    vacuous = rep.size_bound <= 0
    if args.json:
        out.write(
            _json(
                {
                    "command": "bounds",
                    "sizeBound": rep.size_bound,
                    "degreeBound": rep.degree_bound,
                    "best": rep.best,
                    "sizeBoundVacuous": vacuous,
                }
            )
        )
    else:
        note = " (size bound is vacuous)" if vacuous else ""
        out.write(f"sizeBound={rep.size_bound} degreeBound={rep.degree_bound} best={rep.best}{note}\n")
    return EXIT_OK


def _elimination(h: Hypergraph, budget: int) -> Witness:
    r = uniformity(h)
    if r is None:
        raise InputError("elimination: hypergraph must be uniform with at least one edge")
    if not r < h.n:
        raise InputError(f"elimination: need edge size r < |V| (r={r}, |V|={h.n})")
    if not is_connected(h):
        raise InputError("elimination: hypergraph must be connected")
    if h.t != h.n - r + 1:
        raise InputError(f"elimination: need |E| = |V| - r + 1 = {h.n - r + 1}, got {h.t}")
    ordering = cons.find_elimination_ordering(h, budget)
    if ordering is None:
        raise InputError("elimination: hypergraph has no elimination ordering")
    return cons.witness_from_elimination(h, ordering)


def _extra_edges(h: Hypergraph, budget: int) -> Witness:
    r = uniformity(h)
    if r is None:
        raise InputError("extra-edges: hypergraph must be uniform with at least one edge")
    if not r < h.n:
        raise InputError(f"extra-edges: need edge size r < |V| (r={r}, |V|={h.n})")
    if not is_connected(h):
        raise InputError("extra-edges: hypergraph must be connected")
    cert = cons.find_spanning_certificate(h, budget)
    if cert is None:
        raise InputError("extra-edges: no spanning subhypergraph with an elimination ordering")
    return cons.witness_with_extra_edges(h, cert)


def cmd_construct(args, out) -> int:
    method = args.method
    budget = args.budget if args.budget is not None else cons.DEFAULT_SEARCH_BUDGET
    if method == "complete-uniform":
        if args.n is None or args.r is None:
            raise InputError("complete-uniform needs --n and --r")
        if args.hypergraph is not None:
            raise InputError("complete-uniform builds its own hypergraph; do not pass a file")
        w = cons.witness_complete_uniform(args.n, args.r)
    else:
        if args.hypergraph is None:
            raise InputError(f"method {method} needs a hypergraph file")
        h = _load_hypergraph(args.hypergraph)
        build: dict[str, Callable[[], Witness]] = {
            "auto": lambda: cons.construct_auto(h, budget),
            "elimination": lambda: _elimination(h, budget),
            "extra-edges": lambda: _extra_edges(h, budget),
            "graph": lambda: cons.witness_connected_graph(h),
            "degree-one": lambda: cons.witness_degree_one(h),
            "acyclic-uniform": lambda: cons.witness_acyclic_uniform(h),
            "fallback": lambda: cons.witness_fallback(h),
        }
        w = build[method]()
    report = verify_witness(w)
    if not report.ok:
        _diagnose(f"internal error: constructed witness failed verification: {report}")
        return EXIT_FAIL
    header = [f"k={w.k} method={method}"]
    if w.added:
        header.append("added " + " ".join(w.added))
    _emit_witness(args, w, header, out)
    return EXIT_OK


def cmd_exact(args, out) -> int:
    h = _load_hypergraph(args.hypergraph)
    budget = args.budget if args.budget is not None else DEFAULT_EXACT_BUDGET
    res = exact_hk(h, budget=budget, threads=args.threads)
    if args.json:
        out.write(
            _json(
                {
                    "command": "exact",
                    "hk": res.hk,
                    "status": res.status,
                    "nodesExplored": res.nodes_explored,
                    "lowerBound": res.lower_bound,
                    "witness": _witness_doc(res.witness),
                }
            )
        )
    else:
        header = [
            f"hk={res.hk} status={res.status} nodesExplored={res.nodes_explored} "
            f"lowerBound={res.lower_bound}"
        ]
        if res.witness.added:
            header.append("added " + " ".join(res.witness.added))
        _emit_witness(args, res.witness, header, out)
    return EXIT_OK if res.proved else EXIT_RESOURCE


def cmd_verify(args, out) -> int:
    h = _load_hypergraph(args.hypergraph)
    try:
        d = parse_digraph(_read(args.digraph))
    except InputError as exc:
        raise InputError(f"{args.digraph}: {exc}") from None
    added = parse_added_list(args.added) if args.added is not None else default_added(h, d)
    report = verify_witness(Witness(d, h, added))
    if args.json:
        failure = None
        if report.failure is not None:
            failure = {"kind": report.failure.kind, "vertices": list(report.failure.value)}
        out.write(_json({"command": "verify", "ok": report.ok, "k": len(added), "failure": failure}))
    elif report.ok:
        out.write(f"OK k={len(added)}\n")
    else:
        out.write(f"FAIL {report.failure}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_competition(args, out) -> int:
    try:
        d = parse_digraph(_read(args.digraph))
    except InputError as exc:
        raise InputError(f"{args.digraph}: {exc}") from None
    out.write(emit_hypergraph(competition_hypergraph(d)))
    return EXIT_OK


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if number < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypercomp", description="Hypercompetition numbers of hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str, handler) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        # reserved: every algorithm here is deterministic
        p.add_argument("--seed", help=argparse.SUPPRESS)
        return p

    p = add("info", "structural summary of a hypergraph", cmd_info)
    p.add_argument("hypergraph")

    p = add("bounds", "general lower bounds on hk", cmd_bounds)
    p.add_argument("hypergraph")
    p.add_argument("--json", action="store_true")

    p = add("construct", "build a witness digraph", cmd_construct)
    p.add_argument("hypergraph", nargs="?")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--budget", type=_positive, help="search node budget (default 10^6)")
    p.add_argument("--out")
    p.add_argument("--dot", action="store_true")

    p = add("exact", "compute hk exactly by branch-and-bound", cmd_exact)
    p.add_argument("hypergraph")
    p.add_argument("--budget", type=_positive, help="search node budget (default 10^7)")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--dot", action="store_true")

    p = add("verify", "check a witness digraph against a hypergraph", cmd_verify)
    p.add_argument("hypergraph")
    p.add_argument("digraph")
    p.add_argument("--added", help="comma-separated added vertices")
    p.add_argument("--json", action="store_true")

    p = add("competition", "competition hypergraph of a digraph", cmd_competition)
    p.add_argument("digraph")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed is not None:
        _diagnose("--seed is not supported: all algorithms are deterministic")
        return EXIT_INPUT
    try:
        return args.handler(args, out)
    except ResourceError as exc:
        _diagnose(str(exc))
        return EXIT_RESOURCE
    except InputError as exc:
        _diagnose(str(exc))
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
