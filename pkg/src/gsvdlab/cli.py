"""Command-line interface.

Subcommands:
  gen      generate a random pair and save it in Matrix Market format
  run      accuracy experiment -> accuracy.csv + summary.json
  bounds   perturbation-bound verification -> bounds.csv
  table3   batch accuracy aggregates over a list of generated problems
  condest  condition-number estimate for a single matrix

Exit codes: 0 success, 2 argument errors, 3 numerical failures,
4 bound violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .condest import Method, estimate_bidiag, estimate_lanczos_inv, estimate_lsqr
from .errors import (ArgumentError, BoundViolationError, MatrixMarketError,
                     NumericalError)
from .harness import ExperimentConfig, run_accuracy, run_bound_check, run_table3
from .problems import gen_random_pair, load_matrix_market, save_matrix_market


def _add_problem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--cond-a", type=float, default=1.0)
    p.add_argument("--cond-b", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", dest="a_path", help="Matrix Market file for A")
    p.add_argument("--b", dest="b_path", help="Matrix Market file for B")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsvdlab",
                                     description="GSVD via augmented pencils: "
                                     "experiments, bounds, condition estimation")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random pair, write A.mtx/B.mtx")
    _add_problem_args(g)
    g.add_argument("--out", default=".")

    r = sub.add_parser("run", help="accuracy experiment")
    _add_problem_args(r)
    r.add_argument("--formulation", choices=["hat", "tilde", "both", "auto"],
                   default="both")
    r.add_argument("--out", default=".")
    r.add_argument("--method", choices=[m.value for m in Method],
                   default=Method.BIDIAG.value)
    r.add_argument("--k", type=int, default=20)
    r.add_argument("--verify", action="store_true",
                   help="with --formulation auto, run both anyway")

    b = sub.add_parser("bounds", help="perturbation-bound verification")
    b.add_argument("--n", type=int, default=20)
    b.add_argument("--trials", type=int, default=200)
    b.add_argument("--epsilon", type=float, default=1e-8)
    b.add_argument("--cond-a", type=float, default=10.0)
    b.add_argument("--cond-b", type=float, default=10.0)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default=".")

    t = sub.add_parser("table3", help="batch accuracy table")
    t.add_argument("--problems", required=True,
                   help="JSON file: list of generator configs")
    t.add_argument("--out", default=".")

    c = sub.add_parser("condest", help="condition-number estimate")
    c.add_argument("--a", dest="a_path", required=True)
    c.add_argument("--method", choices=[m.value for m in Method],
                   default=Method.BIDIAG.value)
    c.add_argument("--k", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_gen(args) -> int:
    if args.n < 1:
        raise ArgumentError("--n is required for gen")
    pair = gen_random_pair(args.m, args.n, args.p, args.cond_a, args.cond_b,
                           args.seed)
    os.makedirs(args.out, exist_ok=True)
    save_matrix_market(os.path.join(args.out, "A.mtx"), pair.A)
    save_matrix_market(os.path.join(args.out, "B.mtx"), pair.B)
    print(f"wrote A.mtx, B.mtx ({pair.label}) to {args.out}")
    return 0


def _cmd_run(args) -> int:
    config = ExperimentConfig(m=args.m, n=args.n, p=args.p,
                              cond_a=args.cond_a, cond_b=args.cond_b,
                              seed=args.seed, a_path=args.a_path,
                              b_path=args.b_path, formulation=args.formulation,
                              out_dir=args.out,
                              condest_method=Method(args.method),
                              condest_k=args.k, verify=args.verify)
    _, summary = run_accuracy(config)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def _cmd_bounds(args) -> int:
    result = run_bound_check(n=args.n, trials=args.trials, epsilon=args.epsilon,
                             cond_a=args.cond_a, cond_b=args.cond_b,
                             seed=args.seed, out_dir=args.out)
    print(json.dumps(result, indent=2, sort_keys=True))
    return 0


def _cmd_table3(args) -> int:
    with open(args.problems) as fh:
        specs = json.load(fh)
    if not isinstance(specs, list):
        raise ArgumentError("--problems file must hold a JSON list")
    configs = [ExperimentConfig(**spec) for spec in specs]
    table = run_table3(configs, out_dir=args.out)
    print(json.dumps(table, indent=2))
    return 0


def _cmd_condest(args) -> int:
    M = load_matrix_market(args.a_path)
    method = Method(args.method)
    if method == Method.LANCZOS_INV:
        est = estimate_lanczos_inv(M, k=args.k, seed=args.seed)
    elif method == Method.RANDOMIZED_LSQR:
        est = estimate_lsqr(M, seed=args.seed)
    else:
        est = estimate_bidiag(M, k=args.k, seed=args.seed)
    print(json.dumps({"kappa_est": est.value, "method": est.method.value,
                      "steps": est.steps, "converged": est.converged},
                     indent=2, sort_keys=True))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {"gen": _cmd_gen, "run": _cmd_run, "bounds": _cmd_bounds,
                "table3": _cmd_table3, "condest": _cmd_condest}
    try:
        return handlers[args.command](args)
    except (ArgumentError, MatrixMarketError, OSError, json.JSONDecodeError,
            TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundViolationError as exc:
        print(f"bound violation: {exc}", file=sys.stderr)
        return 4
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
