"""Report generation: ranking tables, pairwise significance grids, mean/std
tables and a plain-text summary, with optional plotting data files."""

from __future__ import annotations

import csv
from itertools import combinations
from pathlib import Path

from ..stats import (
    LARGER_BETTER,
    SMALLER_BETTER,
    FriedmanResult,
    friedman_test,
    nemenyi_cd,
    wilcoxon_rank_sum,
)
from .aggregate import METRICS, PHASES

METRIC_DIRECTIONS = {"hv": LARGER_BETTER, "gd": SMALLER_BETTER, "ms": LARGER_BETTER}


def _friedman_rows(result: FriedmanResult, cd: float) -> list[dict]:
    k = len(result.algorithms)
    best_rank = min(result.mean_ranks)
    rows = []
    for alg, rank in zip(result.algorithms, result.mean_ranks):
        rows.append({
            "algorithm": alg,
            "mean_rank": rank,
            # displayed so that larger is better, matching the reporting convention
            "ranking_score": k + 1 - rank,
            "diff_vs_best": rank - best_rank,
            "worse_than_best": rank - best_rank > cd,
        })
    return rows


def write_reports(cfg, matrices, run_means, mean_std, metrics=METRICS,
                  alpha: float = 0.05, plot_data: bool = False) -> list[Path]:
    """One ranking table per metric per phase, Wilcoxon grids from per-run
    samples, mean/std tables, and a text summary."""
    if not metrics:
        raise ValueError("no metrics selected")
    unknown = [m for m in metrics if m not in METRICS]
    if unknown:
        raise ValueError(f"unknown metrics: {unknown}")
    out_dir = Path(cfg.output_dir) / "reports"
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    summary: list[str] = []

    for metric in metrics:
        for phase in PHASES:
            key = (metric, phase)
            if key not in matrices:
                continue
            matrix = matrices[key]
            direction = METRIC_DIRECTIONS[metric]
            result = friedman_test(matrix, direction)
            cd = nemenyi_cd(len(matrix.algorithms), matrix.values.shape[0], alpha)
            rows = _friedman_rows(result, cd)

            path = out_dir / f"friedman_{metric}_{phase}.csv"
            with open(path, "w", newline="") as fh:
                fh.write(f"# chi2={result.statistic:.6g} p={result.p_value:.6g} "
                         f"cd={cd:.6g} n={matrix.values.shape[0]} alpha={alpha}\n")
                writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
                writer.writeheader()
                writer.writerows(rows)
            paths.append(path)

            ranking = sorted(rows, key=lambda r: r["mean_rank"])
            summary.append(f"{metric.upper()} / {phase}: chi2={result.statistic:.4g} "
                           f"p={result.p_value:.3g} CD={cd:.3g}")
            for r in ranking:
                marker = " " if not r["worse_than_best"] else "*"
                summary.append(f"  {marker} {r['algorithm']:<12s} mean rank "
                               f"{r['mean_rank']:.3f}")
            summary.append("")

            if plot_data:
                dat = out_dir / f"ranking_{metric}_{phase}.dat"
                with open(dat, "w") as fh:
                    fh.write(f"# mean ranks; cd={cd:.6g}\n")
                    for i, r in enumerate(ranking):
                        fh.write(f"{i} {r['mean_rank']:.6f} {r['algorithm']}\n")
                paths.append(dat)

    for metric in metrics:
        for phase in PHASES:
            grid_rows = []
            for key in sorted(run_means):
                k_metric, k_phase, schedule, tau, problem = key
                if k_metric != metric or k_phase != phase:
                    continue
                samples = run_means[key]
                for a, b in combinations(sorted(samples), 2):
                    p, significant = wilcoxon_rank_sum(samples[a], samples[b], alpha)
                    mean_a = sum(samples[a]) / len(samples[a])
                    mean_b = sum(samples[b]) / len(samples[b])
                    larger_wins = METRIC_DIRECTIONS[metric] == LARGER_BETTER
                    better = a if (mean_a > mean_b) == larger_wins else b
                    if mean_a == mean_b:
                        better = "tie"
                    grid_rows.append({"schedule": schedule, "tau": tau,
                                      "problem": problem, "alg_a": a, "alg_b": b,
                                      "p_value": format(p, ".6g"),
                                      "significant": significant,
                                      "better": better if significant else ""})
            if grid_rows:
                path = out_dir / f"wilcoxon_{metric}_{phase}.csv"
                with open(path, "w", newline="") as fh:
                    writer = csv.DictWriter(fh, fieldnames=list(grid_rows[0]))
                    writer.writeheader()
                    writer.writerows(grid_rows)
                paths.append(path)

    for metric in metrics:
        for phase in PHASES:
            rows = [r for r in mean_std if r["metric"] == metric and r["phase"] == phase]
            if not rows:
                continue
            path = out_dir / f"means_{metric}_{phase}.csv"
            with open(path, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=["schedule", "tau", "problem",
                                                        "algorithm", "mean", "std"])
                writer.writeheader()
                for r in rows:
                    writer.writerow({k: (format(r[k], ".10g") if k in ("mean", "std")
                                         else r[k])
                                     for k in writer.fieldnames})
            paths.append(path)

    summary_path = out_dir / "summary.txt"
    summary_path.write_text("\n".join(summary) + "\n")
    paths.append(summary_path)
    return paths
