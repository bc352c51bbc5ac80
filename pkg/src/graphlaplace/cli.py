"""Command line: ``graphlaplace {poly,universal,verify}``.

Examples::

    graphlaplace poly --kind bernardi --graph "n=2;1>2"
    graphlaplace universal --kind det --n 2 --k 1 --laplace
    graphlaplace verify --identity theorem1 --n 3 --k 2
    graphlaplace verify --all --n-max 3 --k-max 2

Exit status: 0 when every requested check is equal, 1 when one differs,
2 on bad arguments or graph strings, 3 when a size or step limit refuses
the request.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import invariants, space
from .graphs import DirectedGraph, GraphParseError, GuardError, UndirectedGraph, parse_graph
from .poly import format_poly, poly_to_json
from .verify import IDENTITIES, IdentityReport, run_identity, summarize, verify_all, verify_cor_mtt

EXIT_OK, EXIT_DIFFER, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

POLY_KINDS = {
    # kind: (function, needs directed graph)
    "bernardi": (invariants.bernardi, True),
    "chi-geq": (invariants.chi_geq, True),
    "chi-gt": (invariants.chi_gt, True),
    "chromatic": (invariants.full_chromatic, False),
    "potts": (invariants.potts, False),
    "potts-sokal": (invariants.potts_sokal, False),
}

UNIVERSAL_KINDS = (
    "bernardi", "truncated-bernardi", "potts", "truncated-potts",
    "chi-geq", "chi-gt", "det", "det-minor", "acyclic-sum",
)


def _global_options(suppress: bool = False) -> argparse.ArgumentParser:
    # the subcommand copy suppresses defaults so flags given before the
    # subcommand are not overwritten
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default=default("text"))
    p.add_argument("--jobs", type=int, default=default(os.cpu_count() or 1),
                   help="worker processes for batch computations (default: all cores)")
    p.add_argument("--max-graphs", type=int, default=default(None),
                   help="largest graph set to enumerate (default 10^7)")
    p.add_argument("--max-steps", type=int, default=default(None),
                   help="coloring-step budget per batch (default 10^9)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphlaplace", description=__doc__.split("\n")[0],
                                     parents=[_global_options()])
    common = _global_options(suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="polynomial of one graph")
    p.add_argument("--kind", choices=sorted(POLY_KINDS), required=True)
    p.add_argument("--graph", required=True, help='e.g. "n=3;1>2,2>3" or "n=2;1-2"')

    u = sub.add_parser("universal", parents=[common], help="universal vector over a graph set")
    u.add_argument("--kind", choices=UNIVERSAL_KINDS, required=True)
    u.add_argument("--n", type=int, required=True)
    u.add_argument("--k", type=int, required=True)
    u.add_argument("--I", dest="subset", default=None,
                   help="vertex set for det-minor / acyclic-sum, e.g. 1,3 (empty string for none)")
    u.add_argument("--reading", choices=space.READINGS, default="undirected")
    u.add_argument("--laplace", action="store_true", help="apply the Laplace operator")

    v = sub.add_parser("verify", parents=[common], help="check identities exhaustively")
    target = v.add_mutually_exclusive_group(required=True)
    target.add_argument("--identity", choices=IDENTITIES)
    target.add_argument("--all", action="store_true")
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--I", dest="subset", default=None, help="single vertex set for cor_mtt")
    v.add_argument("--n-max", type=int, default=3)
    v.add_argument("--k-max", type=int, default=2)
    v.add_argument("--sign", choices=("auto", "n", "k"), default="auto",
                   help="sign convention for the determinant identities "
                        "(auto: accept whichever candidate holds and report it)")
    v.add_argument("--timing", action="store_true", help="include elapsed seconds in reports")
    return parser


def _parse_subset(text):
    if text is None:
        return None
    return sorted({int(x) for x in text.split(",") if x.strip()})


def _limits(args) -> dict:
    return {"max_graphs": args.max_graphs, "max_steps": args.max_steps}


def cmd_poly(args, out) -> int:
    g = parse_graph(args.graph)
    fn, directed = POLY_KINDS[args.kind]
    if g.oriented != directed:
        if g.edges:
            want = "directed ('a>b')" if directed else "undirected ('a-b')"
            raise GraphParseError(f"kind {args.kind} needs a {want} graph", args.graph, 0)
        g = DirectedGraph(g.n) if directed else UndirectedGraph(g.n)
    p = fn(g, max_steps=args.max_steps)
    if args.format == "json":
        out.write(json.dumps({"graph": str(g), "kind": args.kind.replace("-", "_"),
                              "polynomial": poly_to_json(p)}, sort_keys=True) + "\n")
    else:
        out.write(format_poly(p) + "\n")
    return EXIT_OK


def build_universal(kind: str, n: int, k: int, subset=None, reading="undirected",
                    jobs: int = 1, max_graphs=None, max_steps=None) -> space.GraphVector:
    kw = {"jobs": jobs, "max_graphs": max_graphs, "max_steps": max_steps}
    if kind == "bernardi":
        return space.universal_bernardi(n, k, **kw)
    if kind == "truncated-bernardi":
        return space.universal_truncated_bernardi(n, k, **kw)
    if kind == "chi-geq":
        return space.universal_chi(n, k, strict=False, **kw)
    if kind == "chi-gt":
        return space.universal_chi(n, k, strict=True, **kw)
    if kind == "potts":
        return space.universal_potts(n, k, reading, **kw)
    if kind == "truncated-potts":
        return space.universal_truncated_potts(n, k, reading, **kw)
    if kind == "det":
        return space.det_element(n, k, max_graphs=max_graphs)
    if kind == "det-minor":
        if subset is None:
            raise ValueError("det-minor needs --I")
        return space.det_minor(n, k, subset, max_graphs=max_graphs)
    if kind == "acyclic-sum":
        return space.acyclic_sum(n, k, subset, max_graphs=max_graphs)
    raise ValueError(f"unknown kind {kind!r}")


def cmd_universal(args, out) -> int:
    if args.n < 1 or args.k < 0:
        raise ValueError("need --n >= 1 and --k >= 0")
    vec = build_universal(args.kind, args.n, args.k, _parse_subset(args.subset), args.reading,
                          args.jobs, args.max_graphs, args.max_steps)
    if args.laplace:
        vec = space.laplace(vec) if vec.oriented else space.laplace_undirected(vec)
    if args.format == "json":
        data = vec.to_json()
        data["kind"] = args.kind
        data["laplace"] = args.laplace
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(vec.to_text() + "\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    kw = {"jobs": args.jobs, **_limits(args)}
    convention = {"auto": None, "n": "(-1)^n", "k": "(-1)^k"}[args.sign]
    if args.all:
        reports = verify_all(args.n_max, args.k_max, **kw)
        if convention is not None:
            # an explicit sign overrides the diagnosis for the determinant identities
            reports = [r for r in reports if r.identity not in ("cor_sumall", "cor_mtt")]
            for n in range(1, args.n_max + 1):
                for k in range(args.k_max + 1):
                    for ident in ("cor_sumall", "cor_mtt"):
                        try:
                            reports += run_identity(ident, n, k, convention, **kw)
                        except GuardError as exc:
                            reports.append(IdentityReport(ident, {"n": n, "k": k}, "skipped",
                                                          details={"reason": str(exc)}))
            reports.sort(key=IdentityReport.sort_key)
    else:
        if args.n is None or args.k is None:
            raise ValueError("--identity needs --n and --k")
        subset = _parse_subset(args.subset)
        if args.identity == "cor_mtt" and subset is not None:
            reports = [verify_cor_mtt(args.n, args.k, subset, convention, **kw)]
        else:
            reports = run_identity(args.identity, args.n, args.k, convention, **kw)
    for r in reports:
        if args.format == "json":
            out.write(r.to_json(args.timing) + "\n")
        else:
            line = f"{r.status:<22} {r.identity} {json.dumps(r.params, sort_keys=True)}"
            if args.timing:
                line += f" {r.elapsed:.3f}s"
            out.write(line + "\n")
    err.write(summarize(reports) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_DIFFER


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise ValueError("--jobs must be positive")
        if args.command == "poly":
            return cmd_poly(args, out)
        if args.command == "universal":
            return cmd_universal(args, out)
        return cmd_verify(args, out, err)
    except GuardError as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_GUARD
    except (GraphParseError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
