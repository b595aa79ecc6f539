"""Command line: ``dcell {gen,neighbors,cycles,certify,paper-check}``.

Exit codes: 0 success, 1 claim or verification failure, 2 usage or
validation error, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import sys

from . import certify, claims, core, cycles, export
from .core import DCellError, Params, format_label, parse_label

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> Params:
    return Params(args.k, args.n)


def _vertex(args, params: Params) -> tuple:
    return core.check_label(parse_label(args.vertex), params)


def cmd_gen(args) -> int:
    topo = core.build_graph(_params(args), args.budget)
    _write(export.dumps(topo, args.format), args.out)
    return EXIT_OK


def cmd_neighbors(args) -> int:
    p = _params(args)
    rows = sorted(core.neighbors(_vertex(args, p), p), key=lambda r: (r[1], r[0]))
    _write("".join(f"{lev}\t{format_label(x)}\n" for x, lev in rows), args.out)
    return EXIT_OK


def cmd_cycles(args) -> int:
    p = _params(args)
    res = cycles.cycles_through(p, _vertex(args, p), args.length, collect=args.list)
    lines = [str(res.count)]
    if args.list:
        lines += [cycles.format_witness(c) for c in res.witnesses]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        verdict = certify.decide(_params(args), args.budget, exhaustive=args.exhaustive)
    except (certify.Inconclusive, core.BudgetExceeded) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    _write(verdict.dumps() + "\n", args.out)
    return EXIT_OK


def cmd_paper_check(args) -> int:
    report = claims.paper_check()
    _write(report.dumps() + "\n", args.out)
    if not report.ok:
        print("failing claims: " + " ".join(report.failing), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dcell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, kn=True, vertex=False):
        p = sub.add_parser(name)
        if kn:
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        if vertex:
            p.add_argument("--vertex", required=True, help="label such as 0,2,1")
        p.add_argument("--out", help="write output here instead of stdout")
        p.set_defaults(func=func)
        return p

    gen = add("gen", cmd_gen)
    gen.add_argument("--format", choices=export.FORMATS, default="edgelist")
    gen.add_argument("--budget", type=int, default=core.DEFAULT_BUDGET)

    add("neighbors", cmd_neighbors, vertex=True)

    cyc = add("cycles", cmd_cycles, vertex=True)
    cyc.add_argument("--length", type=int, default=6)
    cyc.add_argument("--list", action="store_true", help="also print the cycles")

    cert = add("certify", cmd_certify)
    cert.add_argument("--exhaustive", action="store_true",
                      help="also compute exact orbits by backtracking search")
    cert.add_argument("--budget", type=int, default=core.DEFAULT_BUDGET)

    add("paper-check", cmd_paper_check, kn=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DCellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
