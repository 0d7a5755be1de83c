"""Command-line surface: estimate, bootstrap-ci, lr-test, simulate.

Exit codes: 0 success, 2 usage error (argparse message on stderr),
1 computational failure (machine-readable JSON error on stderr).
JSON outputs use fixed field order and 17-significant-digit floats.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from ._streams import STREAM_NULL, derive_rng
from .asymptotics import empirical_inputs, lr_null_sample, lr_statistic
from .bootstrap import DEFAULT_LEVELS, BootstrapConfig, bootstrap_ci
from .distributions import label
from .estimating_equations import bandwidth, median_indicator, smoothed_median
from .fusion_estimator import EstimationError, FusionProblem, estimate
from .sim_harness import TABLE_IDS, load_scenario, reproduce_table, run_scenario


def _json(value) -> str:
    """JSON with insertion-order fields and %.17g floats."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "NaN"
        if math.isinf(v):
            return "Infinity" if v > 0 else "-Infinity"
        return format(v, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        body = ", ".join(f"{json.dumps(str(k))}: {_json(v)}" for k, v in value.items())
        return "{" + body + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _read_column(path: Path) -> np.ndarray:
    """One numeric column; a single non-numeric header line is skipped."""
    rows = [line.strip() for line in path.read_text(encoding="utf-8").splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ValueError(f"{path}: no data rows")

    def fields(line: str) -> list[str]:
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 1:
            raise ValueError(f"{path}: expected one column, got {len(parts)} fields")
        return parts

    start = 0
    try:
        float(fields(rows[0])[0])
    except ValueError as exc:
        if "expected one column" in str(exc):
            raise
        start = 1
    if start == len(rows):
        raise ValueError(f"{path}: no numeric rows after header")
    values = []
    for line in rows[start:]:
        token = fields(line)[0]
        try:
            values.append(float(token))
        except ValueError:
            raise ValueError(f"{path}: non-numeric value {token!r}") from None
    out = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(out)):
        raise ValueError(f"{path}: non-finite value in column")
    return out


def _existing(pathstr: str) -> Path:
    path = Path(pathstr)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"file not found: {pathstr}")
    return path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elfuse",
        description="Fused empirical-likelihood location estimation and its Monte Carlo tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--x", type=_existing, required=True,
                       help="primary sample CSV, one numeric column")
        p.add_argument("--y", type=_existing, required=True,
                       help="second sample CSV, one numeric column")
        p.add_argument("--equation", choices=("median", "smoothed"), default="median")
        p.add_argument("--h-exponent", type=float, default=None,
                       help="bandwidth exponent e in h = n2**e; required with --equation smoothed")

    est = sub.add_parser("estimate", help="point estimate from two sample files")
    add_data_flags(est)

    boot = sub.add_parser("bootstrap-ci", help="percentile bootstrap intervals")
    add_data_flags(boot)
    boot.add_argument("--estimator", choices=("rspele", "mle"), default="rspele")
    boot.add_argument("--replicates", type=int, default=200)
    boot.add_argument("--levels", type=float, nargs="+", default=list(DEFAULT_LEVELS))
    boot.add_argument("--seed", type=int, default=0)

    lr = sub.add_parser("lr-test", help="likelihood-ratio test of center = theta0")
    add_data_flags(lr)
    lr.add_argument("--theta0", type=float, required=True)
    lr.add_argument("--draws", type=int, default=100_000,
                    help="Monte Carlo draws from the limiting null law")
    lr.add_argument("--seed", type=int, default=0)

    sim = sub.add_parser("simulate", help="reproduce a result table or run one scenario")
    target = sim.add_mutually_exclusive_group(required=True)
    target.add_argument("--table", choices=TABLE_IDS)
    target.add_argument("--scenario", type=_existing,
                        help="key = value scenario file (see sim_harness.load_scenario)")
    sim.add_argument("--seed", type=int, default=None,
                     help="default 1 for --table; --scenario uses the file's seed")
    sim.add_argument("--reps", type=int, default=None)
    sim.add_argument("--out", default="out")
    sim.add_argument("--boot-replicates", type=int, default=None)
    sim.add_argument("--threads", type=int, default=None,
                     help="worker threads; falls back to ELFUSE_THREADS, then CPU count")
    sim.add_argument("--normal-reading", choices=("sd", "variance"), default="sd",
                     help="read normal scale labels as sds (default) or as variances")
    return parser


def _equation(args: argparse.Namespace, n2: int):
    if args.equation == "median":
        return median_indicator()
    return smoothed_median(bandwidth(n2, args.h_exponent))


def _problem(args: argparse.Namespace) -> FusionProblem:
    x = _read_column(args.x)
    y = _read_column(args.y)
    return FusionProblem(x, y, _equation(args, y.size))


def _threads(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("ELFUSE_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            parser.error(f"ELFUSE_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _run_estimate(args: argparse.Namespace) -> str:
    est = estimate(_problem(args))
    return _json({
        "theta_hat": est.theta_hat,
        "lambda_hat": est.lambda_hat,
        "objective": est.objective,
        "mle": est.mle,
        "method": est.method,
    })


def _run_bootstrap_ci(args: argparse.Namespace) -> str:
    config = BootstrapConfig(
        replicates=args.replicates, levels=tuple(args.levels), seed=args.seed
    )
    intervals = bootstrap_ci(_problem(args), args.estimator, config)
    per_level = [
        {
            "level": lv,
            "lower": intervals[lv].lower,
            "upper": intervals[lv].upper,
            "length": intervals[lv].length,
        }
        for lv in config.levels
    ]
    return _json({
        "estimator": args.estimator,
        "replicates": args.replicates,
        "intervals": per_level,
        "redraw_count": intervals.redraw_count,
    })


def _run_lr_test(args: argparse.Namespace) -> str:
    problem = _problem(args)
    statistic = lr_statistic(problem, args.theta0)
    inputs = empirical_inputs(problem, args.theta0)
    null = lr_null_sample(inputs, args.draws, derive_rng(args.seed, STREAM_NULL))
    p_value = float(np.mean(null >= statistic))
    return _json({"statistic": statistic, "p_value": p_value, "draws": args.draws})


def _run_simulate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    threads = _threads(args, parser)
    if args.table is not None:
        artifact = reproduce_table(
            args.table,
            seed=1 if args.seed is None else args.seed,
            reps=args.reps,
            out_dir=Path(args.out) / "tables",
            threads=threads,
            boot_replicates=args.boot_replicates,
            normal_reading=args.normal_reading,
        )
        files = [str(artifact.paths[k]) for k in ("csv", "md", "stderr")]
        return _json({"table": artifact.table_id, "files": files})

    spec = load_scenario(args.scenario)
    if args.seed is not None:
        spec = dataclasses.replace(spec, seed=args.seed)
    if args.reps is not None:
        spec = dataclasses.replace(spec, replications=args.reps)
    if args.boot_replicates is not None and spec.bootstrap is not None:
        spec = dataclasses.replace(
            spec,
            bootstrap=dataclasses.replace(spec.bootstrap, replicates=args.boot_replicates),
        )
    result = run_scenario(spec, threads=threads)
    payload: dict = {
        "metric": spec.metric,
        "dist2": label(spec.dist2),
        "n1": spec.n1,
        "n2": spec.n2,
        "replications": result.replications_used,
        "degenerate_count": result.degenerate_count,
    }
    if spec.metric == "mse_ratio":
        payload.update({
            "mse_rspele": result.mse_rspele,
            "mse_mle": result.mse_mle,
            "ratio": result.ratio,
            "mc_stderr": result.mc_stderr,
        })
    else:
        payload["levels"] = [
            {
                "level": lv,
                "rspele_coverage": result.rspele_levels[lv].coverage,
                "rspele_avg_length": result.rspele_levels[lv].avg_length,
                "mle_coverage": result.mle_levels[lv].coverage,
                "mle_avg_length": result.mle_levels[lv].avg_length,
            }
            for lv in spec.bootstrap.levels
        ]
    return _json(payload)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "equation", None) == "smoothed" and args.h_exponent is None:
        parser.error("--equation smoothed requires --h-exponent")
    try:
        if args.command == "estimate":
            payload = _run_estimate(args)
        elif args.command == "bootstrap-ci":
            payload = _run_bootstrap_ci(args)
        elif args.command == "lr-test":
            payload = _run_lr_test(args)
        else:
            payload = _run_simulate(args, parser)
    except (EstimationError, ValueError, RuntimeError, OverflowError) as exc:
        sys.stderr.write(_json({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    sys.stdout.write(payload + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
