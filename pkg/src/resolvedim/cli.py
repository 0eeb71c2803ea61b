"""Command line entry point.

  resolvedim gen bipyramid --n 5 -o b5.json
  resolvedim dim b5.json
  resolvedim bound b5.json --method auto
  resolvedim verify c4.json --set 0,1
  resolvedim sweep --families cycle,path --n 4..12 --csv out.csv
  resolvedim sweep --conjecture --max-n 14 --csv conj.csv

Exit codes: 0 success / verified, 1 negative verification, 2 input or
budget error, 3 construction verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import nullcontext

from . import constructions
from .exceptions import (
    BoundExceeded,
    BudgetExceeded,
    ConstructionError,
    RepairFailed,
    ResolveDimError,
    VerificationFailed,
)
from .families import GENERATORS, FamilySpec, conjecture_corpus, generate
from .graph import dumps_graph, load_graph, save_graph
from .metric import alike_lower_bound, default_budget, find_unresolved_pair, metric_dimension_exact
from .sweep import family_specs, generate_all, write_sweep

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CONSTRUCTION = 0, 1, 2, 3

METHOD_CHOICES = constructions.BOUND_METHODS + ("auto",)


def parse_range(text: str) -> list[int]:
    """``"5..13"``, ``"5-13"``, ``"5:13"`` (inclusive) or a single integer."""
    for sep in ("..", ":", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise argparse.ArgumentTypeError(f"empty range {text!r}")
            return list(range(lo_i, hi_i + 1))
    return [int(text)]


def parse_vertex_list(text: str) -> list[int]:
    text = text.strip().strip("[]{}()")
    if not text:
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_gen(args) -> int:
    params = {"n": args.n}
    if args.seed is not None:
        params["seed"] = args.seed
    if args.keep is not None:
        params["keep"] = args.keep
    try:
        g = generate(FamilySpec(args.family, params))
    except ResolveDimError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if args.output:
        save_graph(g, args.output)
    else:
        print(dumps_graph(g))
    return EXIT_OK


def cmd_dim(args) -> int:
    g = load_graph(args.graph)
    lower = alike_lower_bound(g).value
    t0 = time.perf_counter()
    try:
        beta, witness = metric_dimension_exact(g, _budget(args))
    except BudgetExceeded as exc:
        print(f"n: {g.n}")
        print(f"lower_bound: {lower}")
        print(f"seconds: {time.perf_counter() - t0:.3f}")
        _err(f"{exc} (beta > every size searched before the budget ran out)")
        return EXIT_INPUT
    print(f"n: {g.n}")
    print(f"beta: {beta}")
    print(f"witness: {json.dumps(list(witness))}")
    print(f"lower_bound: {lower}")
    print(f"seconds: {time.perf_counter() - t0:.3f}")
    return EXIT_OK


def cmd_bound(args) -> int:
    g = load_graph(args.graph)
    try:
        report = constructions.construct(g, args.method, _budget(args))
    except (VerificationFailed, BoundExceeded, RepairFailed) as exc:
        out = {"method": args.method, "verified": False, "error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, VerificationFailed) and exc.witness is not None:
            out["witness"] = list(exc.witness)
        members = getattr(exc, "members", None) or getattr(exc, "best", None)
        if members is not None:
            out["set"] = list(members)
        print(json.dumps(out))
        return EXIT_CONSTRUCTION
    except (ConstructionError, ResolveDimError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT
    print(report.to_json())
    return EXIT_OK if report.verified else EXIT_CONSTRUCTION


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    try:
        members = parse_vertex_list(args.set)
    except ValueError:
        _err(f"malformed vertex set {args.set!r}")
        return EXIT_INPUT
    if any(not 0 <= v < g.n for v in members):
        _err(f"vertex set {members} has entries outside 0..{g.n - 1}")
        return EXIT_INPUT
    pair = find_unresolved_pair(g.distances, sorted(set(members)))
    if pair is None:
        print("true")
        return EXIT_OK
    print(f"false witness: {pair[0]} {pair[1]}")
    return EXIT_NEGATIVE


def cmd_sweep(args) -> int:
    budget = _budget(args)
    try:
        if args.conjecture:
            graphs = conjecture_corpus(args.max_n, args.seed)
        else:
            if not args.families or not args.n:
                _err("sweep needs --families and --n (or --conjecture)")
                return EXIT_INPUT
            names = [x.strip() for x in args.families.split(",") if x.strip()]
            unknown = [x for x in names if x not in GENERATORS]
            if unknown:
                _err(f"unknown families {unknown}")
                return EXIT_INPUT
            graphs = list(generate_all(family_specs(names, args.n, args.seed)))
    except ResolveDimError as exc:
        _err(str(exc))
        return EXIT_INPUT
    target = open(args.csv, "w", encoding="utf-8", newline="") if args.csv else nullcontext(sys.stdout)
    with target as fh:
        write_sweep(graphs, fh, budget, args.timing, args.conjecture)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resolvedim", description="Metric dimension of small graphs and constructive bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph family member as JSON")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int)
    g.add_argument("--keep", type=int, help="edge keep percentage (outerplanar_random)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dim", help="exact metric dimension")
    d.add_argument("graph")
    d.add_argument("--budget", type=int)
    d.set_defaults(func=cmd_dim)

    b = sub.add_parser("bound", help="run a bound construction and print its report")
    b.add_argument("graph")
    b.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    b.add_argument("--budget", type=int)
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", help="check whether a vertex set resolves the graph")
    v.add_argument("graph")
    v.add_argument("--set", required=True, help="comma separated vertex indices")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="tabulate exact dimension and bounds over families as CSV")
    s.add_argument("--families", help="comma separated family names")
    s.add_argument("--n", type=parse_range, help="inclusive range such as 5..13")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int)
    s.add_argument("--csv", help="output path (stdout if omitted)")
    s.add_argument("--conjecture", action="store_true", help="sweep the triangulation corpus")
    s.add_argument("--max-n", type=int, default=14)
    s.add_argument("--timing", action="store_true", help="fill the seconds column (breaks byte reproducibility)")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ResolveDimError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
