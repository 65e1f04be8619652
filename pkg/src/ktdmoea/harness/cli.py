"""Command-line entry point.

Subcommands: ``run`` executes the configured experiment grid, ``aggregate``
folds persisted runs into observation matrices, ``report`` emits ranking and
significance tables, ``sample-pf`` materializes a cached true-front sample.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..problems import reference_front, resolve_cache_dir, write_front_csv
from .aggregate import METRICS, MissingRunsError, aggregate
from .config import ExperimentConfig
from .report import write_reports
from .runner import run_experiment


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=str, default=None,
                        help="JSON experiment configuration file")
    parser.add_argument("--output-dir", type=str, default=None)
    parser.add_argument("--cache-dir", type=str, default=None,
                        help="reference-front cache (or set KTDMOEA_CACHE_DIR)")


def _add_grid(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algorithms", type=_split, default=None)
    parser.add_argument("--problems", type=_split, default=None)
    parser.add_argument("--schedules", type=_split, default=None)
    parser.add_argument("--tau", type=lambda s: [int(v) for v in _split(s)], default=None)
    parser.add_argument("--runs", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None, help="base seed; run r uses seed+r")
    parser.add_argument("--population", type=int, default=None)
    parser.add_argument("--theta", type=int, default=None)
    parser.add_argument("--warmup", type=int, default=None)
    parser.add_argument("--pf-size", dest="pf_size", type=int, default=None)
    parser.add_argument("--hv-samples", dest="hv_samples", type=int, default=None)


def _load_config(args: argparse.Namespace) -> ExperimentConfig:
    cfg = (ExperimentConfig.from_file(args.config) if args.config
           else ExperimentConfig())
    overrides = {}
    mapping = {
        "output_dir": "output_dir", "cache_dir": "cache_dir",
        "algorithms": "algorithms", "problems": "problems",
        "schedules": "schedules", "tau": "tau_values", "runs": "runs",
        "seed": "base_seed", "population": "population_size", "theta": "theta",
        "warmup": "warmup", "workers": "workers",
        "pf_size": "reference_front_size", "hv_samples": "hv_mc_samples",
    }
    for arg_name, field in mapping.items():
        value = getattr(args, arg_name, None)
        if value is not None:
            overrides[field] = value
    data = cfg.to_dict()
    data.update(overrides)
    return ExperimentConfig.from_dict(data)


def _split(value: str) -> list[str]:
    return [part for part in value.replace(",", " ").split() if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktdmoea",
                                     description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute the experiment grid")
    _add_common(run)
    _add_grid(run)
    run.add_argument("--workers", type=int, default=None)
    run.add_argument("--force", action="store_true",
                     help="re-execute runs whose files already exist")

    agg = sub.add_parser("aggregate", help="fold persisted runs into matrices")
    _add_common(agg)
    _add_grid(agg)

    rep = sub.add_parser("report", help="emit ranking and significance tables")
    _add_common(rep)
    _add_grid(rep)
    rep.add_argument("--metrics", type=_split, default=list(METRICS),
                     help="subset of hv,gd,ms")
    rep.add_argument("--alpha", type=float, default=0.05)
    rep.add_argument("--plot-data", action="store_true",
                     help="also emit gnuplot-ready ranking data files")

    pf = sub.add_parser("sample-pf", help="materialize a cached true-front sample")
    pf.add_argument("--problem", required=True)
    pf.add_argument("--objectives", type=int, required=True)
    pf.add_argument("--count", type=int, default=10000)
    pf.add_argument("--cache-dir", type=str, default=None)
    pf.add_argument("--out", type=str, default=None,
                    help="also write the points to this CSV path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            cfg = _load_config(args)
            run_experiment(cfg, force=args.force)
            return 0
        if args.command == "aggregate":
            cfg = _load_config(args)
            result = aggregate(cfg)
            print(f"aggregated {len(result['matrices'])} observation matrices "
                  f"into {cfg.output_dir}/aggregates")
            return 0
        if args.command == "report":
            cfg = _load_config(args)
            metrics = tuple(m.lower() for m in args.metrics)
            if not metrics:
                print("error: empty metric selection", file=sys.stderr)
                return 2
            result = aggregate(cfg)
            paths = write_reports(cfg, result["matrices"], result["run_means"],
                                  result["mean_std"], metrics=metrics,
                                  alpha=args.alpha, plot_data=args.plot_data)
            print(f"wrote {len(paths)} report files under {cfg.output_dir}/reports")
            return 0
        if args.command == "sample-pf":
            front = reference_front(args.problem.upper(), args.objectives,
                                    args.count, resolve_cache_dir(args.cache_dir))
            print(f"{args.problem.upper()} m={args.objectives}: {len(front)} points "
                  f"cached under {resolve_cache_dir(args.cache_dir)}")
            if args.out:
                write_front_csv(Path(args.out), front.points)
                print(f"copied to {args.out}")
            return 0
    except MissingRunsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
