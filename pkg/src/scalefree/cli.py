"""Command-line front end: ``python -m scalefree <subcommand> ...``.

Every subcommand writes one table, as CSV or JSON, to ``--output``, or to
stdout when no output is given.  If ``SCALEFREE_OUTPUT_DIR`` is set and
``--output`` is omitted, the table goes to ``$SCALEFREE_OUTPUT_DIR/<subcommand>.<format>``.

CSV files start with one ``# config: {...}`` comment line holding the run
configuration, then a header row, then data rows.  JSON files hold a single
object ``{"config": {...}, "rows": [...]}``.

Exit codes: 0 success, 2 usage error, 3 numerical non-convergence.

Columns
-------
verify   eta, t_minus, t_plus, value_minus, value_plus, d1_left, d1_right,
         d2_left, d2_right, d2_jump, classification, ode_residual_minus,
         ode_residual_plus, residual_floor
cascade  golden:     step, eta, error
         stochastic: step, eta, side, move_kind
product  n, exponent, factor, partial_product, telescoped, rel_error
cells    generation, mean_population, mean_se, survival, survival_se,
         oracle_survival, halted
collide  time, x_A, x_B  (event summary in the config block under "outcome")
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import cascade, cellsim, collide, solutions, verify
from .errors import ConvergenceError, DomainError
from .fatnum import t_minus, t_plus
from .streams import check_seed

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 2, 3
OUTPUT_DIR_ENV = "SCALEFREE_OUTPUT_DIR"

FAMILIES = ("standard", "fluctuation", "asymmetric", "scaling", "product")


class UsageError(Exception):
    pass


def _family(args):
    name = args.family
    if name == "standard":
        return solutions.Standard()
    if name == "fluctuation":
        return solutions.Fluctuation()
    if name == "asymmetric":
        return solutions.Asymmetric(args.alpha)
    if name == "scaling":
        return solutions.AsymmetricScaling(args.beta)
    return solutions.ExactProduct(args.depth)


def cmd_verify(args):
    family = _family(args)
    h = args.h
    report = verify.classify_junction(family, 1.0, h)
    rows = []
    for eta in args.eta:
        tm, tp = t_minus(eta).value, t_plus(eta).value
        rows.append(
            {
                "eta": eta,
                "t_minus": tm,
                "t_plus": tp,
                "value_minus": solutions.eval_solution(family, t_minus(eta)).value,
                "value_plus": solutions.eval_solution(family, t_plus(eta)).value,
                "d1_left": verify.numeric_derivative(family, tm, 1, h, "left"),
                "d1_right": verify.numeric_derivative(family, tp, 1, h, "right"),
                "d2_left": verify.numeric_derivative(family, tm, 2, h, "left"),
                "d2_right": verify.numeric_derivative(family, tp, 2, h, "right"),
                "d2_jump": report.d2_jump,
                "classification": report.classification,
                "ode_residual_minus": verify.ode_residual(family, tm, h, "left"),
                "ode_residual_plus": verify.ode_residual(family, tp, h, "right"),
                "residual_floor": max(
                    verify.residual_noise_floor(family, tm, h, "left"),
                    verify.residual_noise_floor(family, tp, h, "right"),
                ),
            }
        )
    return rows, {}


def _alpha_dist(args):
    params = args.params
    try:
        if args.dist == "uniform":
            lo, hi = params if params else (0.9, 1.5)
            return cascade.Uniform(lo, hi)
        if args.dist == "gamma":
            shape, scale = params if params else (2.0, 0.5)
            return cascade.GammaLike(shape, scale)
        (value,) = params if params else (1.0,)
        return cascade.Fixed(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad --params for --dist {args.dist}: {exc}") from None


def cmd_cascade(args):
    if args.mode == "golden":
        eta0 = 1.0 if args.eta0 is None else args.eta0
        max_steps = 1000 if args.max_steps is None else args.max_steps
        state = cascade.CascadeState(eta0)
        error = None
        while abs(state.eta - cascade.GOLDEN) >= args.tol:
            if state.step_count >= max_steps:
                error = ConvergenceError(f"golden cascade did not reach tol {args.tol} in {max_steps} steps")
                break
            cascade.golden_step(state)
        rows = [
            {"step": n, "eta": eta, "error": abs(eta - cascade.GOLDEN)}
            for n, eta in enumerate(state.history)
        ]
        return rows, {"error": error}
    eta0 = 1e-6 if args.eta0 is None else args.eta0
    moves = cascade.evolve_infinitesimal(
        eta0,
        _alpha_dist(args),
        seed=args.seed,
        max_steps=200_000 if args.max_steps is None else args.max_steps,
        threshold=args.threshold,
        step_size=args.step_size,
        flip_prob=args.flip_prob,
    )
    rows = [{"step": m.step, "eta": m.eta, "side": m.side, "move_kind": m.kind} for m in moves]
    return rows, {}


def cmd_product(args):
    factors = solutions.product_factors(args.eta, args.depth)
    rows = []
    running = 1.0
    for n, factor in enumerate(factors):
        running *= factor
        telescoped = (1.0 - args.eta ** (2 ** (n + 1))) / (1.0 - args.eta)
        rows.append(
            {
                "n": n,
                "exponent": 2**n,
                "factor": factor,
                "partial_product": running,
                "telescoped": telescoped,
                "rel_error": abs(running - telescoped) / telescoped,
            }
        )
    return rows, {}


def cmd_cells(args):
    stats = cellsim.run_trials(args.p, args.generations, args.trials, args.seed, workers=args.workers)
    rows = []
    for g in stats.generations:
        rows.append(
            {
                "generation": int(g),
                "mean_population": float(stats.mean_population[g]),
                "mean_se": float(stats.mean_se[g]),
                "survival": float(stats.survival[g]),
                "survival_se": float(stats.survival_se[g]),
                "oracle_survival": 1.0 - float(stats.oracle_extinction[g]),
                "halted": int(stats.halting_counts[g]),
            }
        )
    return rows, {}


def cmd_collide(args):
    mode = args.mode.replace("-", "_")
    out = collide.simulate(mode, args.threshold, args.dt, args.t_end)
    rows = [{"time": t, "x_A": a, "x_B": b} for t, a, b in out.trajectory]
    outcome = {
        "event": out.event,
        "event_time": out.event_time,
        "event_position": out.event_position,
        "final_position_A": out.final_position_A,
        "final_position_B": out.final_position_B,
    }
    return rows, {"outcome": outcome}


def build_parser():
    parser = argparse.ArgumentParser(prog="scalefree", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed (64-bit unsigned)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", parents=[common], help="junction and residual checks of a solution family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--eta", type=float, nargs="+", default=[1e-2, 1e-3])
    p.add_argument("--h", type=float, default=verify.DEFAULT_STEP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cascade", parents=[common], help="golden-mean or stochastic evolution of eta")
    p.add_argument("--mode", choices=("golden", "stochastic"), default="golden")
    p.add_argument("--eta0", type=float, default=None, help="default 1 (golden) or 1e-6 (stochastic)")
    p.add_argument("--tol", type=float, default=5e-8)
    p.add_argument("--max-steps", type=int, default=None, help="default 1000 (golden) or 200000 (stochastic)")
    p.add_argument("--dist", choices=("uniform", "gamma", "fixed"), default="uniform")
    p.add_argument("--params", type=float, nargs="*", default=None)
    p.add_argument("--threshold", type=float, default=1e-2)
    p.add_argument("--step-size", type=float, default=1e-3)
    p.add_argument("--flip-prob", type=float, default=0.0)
    p.set_defaults(func=cmd_cascade)

    p = sub.add_parser("product", parents=[common], help="factors of the infinite-product solution")
    p.add_argument("--eta", type=float, default=0.5)
    p.add_argument("--depth", type=int, default=5)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("cells", parents=[common], help="branching cell population Monte Carlo")
    p.add_argument("--p", type=float, default=0.5, help="split probability")
    p.add_argument("--generations", type=int, default=10)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1, help="processes (does not change output)")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("collide", parents=[common], help="two-particle collision vs swap")
    p.add_argument("--mode", choices=("classical", "scale-free", "scale_free"), default="scale-free")
    p.add_argument("--threshold", type=float, default=1e-3)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--t-end", type=float, default=2.0)
    p.set_defaults(func=cmd_collide)
    return parser


def run_config(args):
    """The reproducibility-relevant arguments; execution details such as ``workers`` are left out."""
    skip = {"func", "output", "workers"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def render(config, rows, fmt):
    if fmt == "json":
        return json.dumps({"config": config, "rows": rows}, indent=1, sort_keys=False) + "\n"
    buf = io.StringIO()
    buf.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def _cell(v):
    return repr(v) if isinstance(v, float) else v


def _write(text, args):
    path = args.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        path = os.path.join(os.environ[OUTPUT_DIR_ENV], f"{args.subcommand}.{args.format}")
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        check_seed(args.seed)
        rows, extra = args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"scalefree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = run_config(args)
    error = extra.pop("error", None)
    config.update(extra)
    _write(render(config, rows, args.format), args)
    if error is not None:
        print(f"scalefree: {error}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
