"""Command-line entry point: ``perfect-forest {find,oracle,gen,selftest,bench}``."""

from __future__ import annotations

import argparse
import json
import sys

from .bench import ALGORITHMS, VerificationFailure, run_bench
from .generators import FAMILIES, GenSpec
from .graph import GraphError
from .oracle import enumerate_perfect_forests, exhaustive_selfcheck
from .serialize import parse_edge_list, write_edge_list, write_forest


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _size(text: str) -> tuple[int, int]:
    try:
        n, m = text.lower().split("x")
        return int(n), int(m)
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like NxM, got {text!r}") from None


def cmd_find(args) -> int:
    g = parse_edge_list(_read(args.file))
    forest = ALGORITHMS[args.algo](g)
    if args.verify:
        verdict = forest.verify()
        if not verdict.valid:
            print(f"error: output failed verification: {verdict.violations}", file=sys.stderr)
            return 1
    sys.stdout.write(write_forest(forest, args.format))
    return 0


def cmd_oracle(args) -> int:
    g = parse_edge_list(_read(args.file))
    report = enumerate_perfect_forests(g, cap=args.cap)
    print(json.dumps(report.to_dict()))
    return 0


def cmd_gen(args) -> int:
    g = GenSpec(args.family, args.n, args.m, args.seed, args.k).generate()
    sys.stdout.write(write_edge_list(g))
    return 0


def cmd_selftest(args) -> int:
    ok = True
    for n in (2, 4, 6):
        if n > args.max_n:
            break
        summary = exhaustive_selfcheck(n)
        print(f"n={n}: {summary.connected} graphs, {summary.checked} checked, "
              f"{len(summary.failures)} failures")
        for line in summary.failures[:10]:
            print(f"  {line}")
        ok = ok and summary.ok
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    report = run_bench(args.size or [(100, 300)], reps=args.reps, seed=args.seed)
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfect-forest",
                                     description="Find perfect forests of connected even-order graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="compute a perfect forest of an edge-list file")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="split")
    p.add_argument("--format", choices=("edges", "dot"), default="edges")
    p.add_argument("--verify", action="store_true", help="check the output before printing it")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("oracle", help="enumerate all perfect forests (m <= 24)")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=1000, help="list forests only if there are at most this many")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="print a generated graph as an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="edge count for random_connected")
    p.add_argument("--k", type=int, help="left part size for complete_bipartite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="exhaustive check on all small connected graphs")
    p.add_argument("--max-n", type=int, choices=(2, 4, 6), default=4)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time both algorithms on random connected graphs")
    p.add_argument("--size", type=_size, action="append", metavar="NxM",
                   help="graph size, repeatable (default 100x300)")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, VerificationFailure, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
