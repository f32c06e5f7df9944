"""Command-line entry point: ``trianglepack {solve,gen,verify,oracle,bench}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bench as bench_mod
from .fileio import ParseError, format_intervals, format_packing, parse_packing, read_intervals
from .graph_core import build_overlap_graph, sweep_maximal_cliques, validate_arrangement
from .instance_gen import MODELS, GenSpec, generate
from .oracle import DEFAULT_GUARD, brute_force_max_packing, verify_packing
from .packing_dp import solve

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ARRANGEMENT = 2
EXIT_PACKING = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, msg, code=EXIT_INPUT):
        super().__init__(msg)
        self.code = code


def _load(path):
    try:
        if path == "-":
            from .fileio import parse_intervals
            return parse_intervals(sys.stdin.read(), "<stdin>")
        return read_intervals(path)
    except ParseError as e:
        raise CliError(str(e)) from None
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None


def _prepare(instance):
    if instance.n == 0:
        raise CliError("instance has no intervals")
    graph = build_overlap_graph(instance)
    arrangement = sweep_maximal_cliques(instance)
    report = validate_arrangement(graph, arrangement)
    if not report.ok:
        raise CliError(f"invalid clique arrangement:\n{report}", EXIT_ARRANGEMENT)
    return graph, arrangement


def solve_report(instance):
    """SolveReport fields as a plain dict, plus the raw packing."""
    graph, arrangement = _prepare(instance)
    res = solve(arrangement, graph, check=False)
    names = instance.names
    report = {
        "count": res.count,
        "triangles": [[names[v] for v in tri] for tri in res.packing],
        "t": arrangement.t,
        "clique_sizes": arrangement.sizes(),
        "elapsed_ms": round(res.elapsed_s * 1e3, 3),
        "diagnostic_flags": list(res.flags),
    }
    return report, res.packing


def _format_text(report):
    lines = [
        f"count: {report['count']}",
        f"t: {report['t']}",
        "clique_sizes: " + " ".join(map(str, report["clique_sizes"])),
        f"elapsed_ms: {report['elapsed_ms']}",
        "diagnostic_flags: " + " ".join(report["diagnostic_flags"]),
        "triangles:",
    ]
    lines += ["  " + " ".join(tri) for tri in report["triangles"]]
    return "\n".join(lines) + "\n"


def cmd_solve(args):
    instance = _load(args.input)
    report, packing = solve_report(instance)
    if args.packing_out:
        with open(args.packing_out, "w") as fh:
            fh.write(format_packing(packing, instance))
    fmt = "json" if args.json else args.format
    if fmt == "json":
        sys.stdout.write(json.dumps(report) + "\n")
    elif fmt == "packing":
        sys.stdout.write(format_packing(packing, instance))
    else:
        sys.stdout.write(_format_text(report))
    return EXIT_OK


def _params(args):
    return {k: getattr(args, k) for k in ("range", "length", "cliques", "shared")
            if getattr(args, k) is not None}


def cmd_gen(args):
    spec = GenSpec(args.model, args.n, args.seed, _params(args))
    try:
        instance = generate(spec)
    except ValueError as e:
        raise CliError(str(e)) from None
    text = format_intervals(instance, f"model={spec.model} n={spec.n} seed={spec.seed}")
    if args.output and args.output != "-":
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    instance = _load(args.instance)
    try:
        if args.packing == "-":
            text = sys.stdin.read()
        else:
            with open(args.packing) as fh:
                text = fh.read()
        packing = parse_packing(text, instance, args.packing)
    except ParseError as e:
        raise CliError(str(e)) from None
    except OSError as e:
        raise CliError(f"cannot read {args.packing}: {e.strerror}") from None
    report = verify_packing(build_overlap_graph(instance), packing)
    names = instance.names
    if report.ok:
        print(f"valid packing: {len(packing)} triangles")
        return EXIT_OK
    for kind, witness in report.violations:
        if kind == "shared-vertex":
            print(f"{kind}: {names[witness]}")
        elif kind == "non-adjacent":
            print(f"{kind}: {names[witness[0]]} {names[witness[1]]}")
        else:
            print(f"{kind}: {witness}")
    return EXIT_PACKING


def cmd_oracle(args):
    instance = _load(args.input)
    if instance.n > args.guard:
        raise CliError(f"oracle limited to n <= {args.guard}, instance has n = {instance.n}")
    graph, arrangement = _prepare(instance)
    oracle = brute_force_max_packing(graph, guard=args.guard)
    res = solve(arrangement, graph, check=False)
    verdict = "MATCH" if oracle.count == res.count else "MISMATCH"
    print(f"oracle: {oracle.count}")
    print(f"dp: {res.count}")
    print(f"explored: {oracle.explored}")
    print(verdict)
    return EXIT_OK if verdict == "MATCH" else EXIT_MISMATCH


def cmd_bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise CliError(f"bad size list {args.sizes!r}") from None
    if args.reps < 1:
        raise CliError(f"reps must be at least 1, got {args.reps}")
    if not sizes or min(sizes) < 1:
        raise CliError("sizes must be positive integers")
    writer = csv.writer(sys.stdout, delimiter=args.delimiter, lineterminator="\n")
    writer.writerow(bench_mod.COLUMNS)
    try:
        for row in bench_mod.run_bench(sizes, args.model, args.seed, args.reps, _params(args)):
            r = row.as_tuple()
            writer.writerow(r[:-1] + (f"{row.elapsed_ms:.3f}",))
            sys.stdout.flush()
    except ValueError as e:
        raise CliError(str(e)) from None
    return EXIT_OK


def _add_gen_params(p):
    p.add_argument("--model", choices=MODELS, default="uniform-random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, help="endpoint range (uniform-random, unit-interval, single-clique)")
    p.add_argument("--length", type=int, help="interval length (unit-interval)")
    p.add_argument("--cliques", type=int, help="block count (nested-cliques)")
    p.add_argument("--shared", type=int, help="vertices shared by neighbouring blocks (nested-cliques)")


def build_parser():
    parser = argparse.ArgumentParser(prog="trianglepack", description="Triangle packing in interval graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum triangle packing of an interval file")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json", "packing"), default="text")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.add_argument("--packing-out", metavar="PATH", help="also write the packing file here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="write a seeded random instance")
    _add_gen_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a packing file against an instance")
    p.add_argument("instance")
    p.add_argument("packing", help="packing file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare the DP against brute force")
    p.add_argument("input")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time the DP over a list of sizes")
    _add_gen_params(p)
    p.set_defaults(model="nested-cliques")
    p.add_argument("--sizes", default="50,100,200")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--delimiter", default=",")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
