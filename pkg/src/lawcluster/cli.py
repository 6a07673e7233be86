"""Command-line entry point: ``lawcluster <subcommand> ...``.

Exit status is 0 on success, 1 on a usage or configuration error and 2 on a
data error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .bounds import DEFAULT_C, DEFAULT_DELTA_GRID, ThresholdConfig, minimize_threshold
from .directions import sample_directions
from .distance import distance_matrix, ks_gof_test
from .errors import (
    HypothesisViolated,
    InvalidConfig,
    InvalidCount,
    InvalidDelta,
    InvalidK,
    InvalidM,
    InvalidParameter,
    LawClusterError,
)
from .io import FORMATS, RunManifest, describe_inputs, expand_paths, fmt, load_datasets, save_partition
from .pipeline import cluster_datasets
from .projection import project_set
from .simulate import (
    MODELS,
    STUDY_GRID_POINTS,
    STUDY_N_VALUES,
    STUDY_SIGMA_VALUES,
    ExperimentConfig,
    run_experiment,
)

EXIT_USAGE = 1
EXIT_DATA = 2
_USAGE_ERRORS = (InvalidConfig, InvalidCount, InvalidDelta, InvalidK, InvalidM, InvalidParameter, HypothesisViolated)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_M(args, N: int) -> int:
    if args.directions is not None and args.sigma is not None:
        raise UsageError("give --directions or --sigma, not both")
    if args.directions is not None:
        return args.directions
    return (10 if args.sigma is None else args.sigma) * N


def _add_projection_flags(p):
    p.add_argument("inputs", nargs="+", help="data files or directories")
    p.add_argument("--format", choices=FORMATS, default="wide-csv")
    p.add_argument("--directions", type=int, metavar="M", help="number of Brownian-bridge directions")
    p.add_argument("--sigma", type=int, help="use M = sigma * (smallest N); default 10")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None, help="threads for pairwise distances")


def cmd_cluster(args) -> int:
    datasets = load_datasets(args.inputs, args.format)
    N = min(ds.N for ds in datasets)
    M = _resolve_M(args, N)
    res = cluster_datasets(
        datasets,
        M=M,
        seed=args.seed,
        alpha=args.alpha,
        C=args.constant_c,
        delta_grid_size=args.delta_grid,
        workers=args.workers,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "distance_matrix": out / "distances.csv",
        "variance_matrix": out / "variances.csv",
        "dendrogram": out / "dendrogram.json",
        "partition": out / "partition.csv",
        "gamma_star": out / "gamma_star.txt",
    }
    res.matrix.to_csv(paths["distance_matrix"])
    res.matrix.to_csv(paths["variance_matrix"], which="var")
    res.dendrogram.to_json(paths["dendrogram"])
    save_partition(res.partition, paths["partition"])
    paths["gamma_star"].write_text(f"{fmt(res.gamma_star)}\n")
    manifest = RunManifest(
        config={
            "alpha": res.config.alpha,
            "M": M,
            "sigma": args.sigma,
            "C": res.config.C,
            "seed": args.seed,
            "quadrature": "trapezoid",
            "delta_grid_size": res.config.delta_grid_size,
            "format": args.format,
        },
        inputs=describe_inputs(expand_paths(args.inputs), datasets),
        outputs={
            "gamma_star": res.gamma_star,
            "delta": res.delta,
            "V_star": res.config.V_star,
            **{k: str(v) for k, v in paths.items() if k != "gamma_star"},
        },
        tool_version=__version__,
    )
    manifest.write(out / "manifest.json")

    print(f"{len(datasets)} data sets, N = {N}, M = {M}, alpha = {res.config.alpha:.4g}")
    print(f"gamma* = {res.gamma_star:.6f} (delta = {res.delta:.4g}, V* = {res.config.V_star:.4g})")
    print(f"{res.partition.k} cluster(s):")
    for c, members in enumerate(res.partition.clusters()):
        print(f"  {c}: {', '.join(map(str, members))}")
    print(f"outputs written to {out}")
    return 0


def cmd_distance(args) -> int:
    datasets = load_datasets(args.inputs, args.format)
    N = min(ds.N for ds in datasets)
    M = _resolve_M(args, N)
    directions = sample_directions(datasets[0].grid, M, args.seed)
    matrix = distance_matrix(datasets, directions, workers=args.workers)
    matrix.to_csv(args.out)
    if args.variances:
        matrix.to_csv(args.variances, which="var")
    print(f"distance matrix for {matrix.size} data sets (M = {M}) written to {args.out}")
    return 0


def cmd_gof_test(args) -> int:
    datasets = load_datasets([args.first, args.second], args.format)
    if len(datasets) != 2:
        raise UsageError(f"expected two data sets, found {len(datasets)}")
    directions = sample_directions(datasets[0].grid, args.directions, args.seed)
    x = project_set(datasets[0], directions).values
    y = project_set(datasets[1], directions).values
    rejected = 0
    print(f"{datasets[0].id} vs {datasets[1].id}: N = {x.shape[0]}, {y.shape[0]}")
    for m in range(directions.M):
        res = ks_gof_test(x[:, m], y[:, m])
        verdict = "reject" if res.p_value < args.alpha else "accept"
        rejected += res.p_value < args.alpha
        print(f"  direction {m}: KS = {res.statistic:.6f}, p = {res.p_value:.6g} ({verdict} H0 at {args.alpha})")
    if directions.M > 1:
        print(f"rejected in {rejected} of {directions.M} directions")
    return 0


def cmd_threshold(args) -> int:
    alpha = math.sqrt(1.0 / args.n) if args.alpha is None else args.alpha
    if args.directions is not None:
        M = args.directions
    else:
        M = (10 if args.sigma is None else args.sigma) * args.n
    config = ThresholdConfig(
        alpha=alpha, N=args.n, M=M, V_star=args.v_star, C=args.constant_c, delta_grid_size=args.delta_grid
    )
    res = minimize_threshold(config)
    print(f"gamma* = {fmt(res.gamma)}")
    print(f"delta  = {fmt(res.delta)}")
    return 0


def cmd_simulate(args) -> int:
    models = MODELS if args.model == "both" else (args.model,)
    reports = []
    for model in models:
        config = ExperimentConfig(
            model=model,
            N_values=tuple(args.n),
            sigma_values=tuple(args.sigma),
            replicates=args.replicates,
            grid_points=args.grid_points,
            seed=args.seed,
            C=args.constant_c,
            delta_grid_size=args.delta_grid,
            alpha=args.alpha,
        )
        reports.append(run_experiment(config, workers=args.workers))
    text = reports[0].to_csv()
    for rep in reports[1:]:
        text += rep.to_csv().split("\n", 1)[1]
    Path(args.out).write_text(text)
    for rep in reports:
        for c in rep.cells:
            print(
                f"{rep.model:>3}  N={c.N:<4} sigma={c.sigma:<3} correct={c.proportion_correct:.2f}"
                f"  type1={c.type1:.3f}  type2={c.type2:.3f}"
            )
    print(f"report written to {args.out}")
    if args.svg:
        from .plotting import plot_reports

        plot_reports(reports, args.svg)
        print(f"chart written to {args.svg}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lawcluster", description="Cluster sets of functional data by law.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def threshold_flags(p):
        p.add_argument("--alpha", type=float, default=None, help="level; default sqrt(1/N)")
        p.add_argument("--constant-c", type=float, default=DEFAULT_C, help="DKW constant (default e)")
        p.add_argument("--delta-grid", type=int, default=DEFAULT_DELTA_GRID)

    p = sub.add_parser("cluster", help="cluster data sets by law")
    _add_projection_flags(p)
    threshold_flags(p)
    p.add_argument("--out", default="lawcluster-out", help="output directory")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("distance", help="write the averaged KS distance matrix")
    _add_projection_flags(p)
    p.add_argument("--out", default="distances.csv")
    p.add_argument("--variances", default=None, help="also write per-pair variances here")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("gof-test", help="KS test of equal laws along random directions")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--format", choices=FORMATS, default="wide-csv")
    p.add_argument("--directions", type=int, default=1, metavar="M")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.05)
    p.set_defaults(func=cmd_gof_test)

    p = sub.add_parser("threshold", help="compute the cut threshold gamma*")
    p.add_argument("--n", type=int, required=True, help="smallest sample size")
    p.add_argument("--v-star", type=float, required=True, help="largest per-pair variance")
    p.add_argument("--directions", type=int, metavar="M")
    p.add_argument("--sigma", type=int)
    threshold_flags(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("simulate", help="run the SBB / AR Monte Carlo studies")
    p.add_argument("--model", choices=MODELS + ("both",), default="both")
    p.add_argument("--n", type=int, nargs="+", default=list(STUDY_N_VALUES))
    p.add_argument("--sigma", type=int, nargs="+", default=list(STUDY_SIGMA_VALUES))
    p.add_argument("--replicates", type=int, default=100)
    p.add_argument("--grid-points", type=int, default=STUDY_GRID_POINTS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None, help="worker processes")
    p.add_argument("--out", default="simulation_report.csv")
    p.add_argument("--svg", default=None, help="write a chart of proportion correct vs N")
    threshold_flags(p)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, *_USAGE_ERRORS) as exc:
        print(f"lawcluster {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LawClusterError, OSError) as exc:
        print(f"lawcluster {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
