"""Aggregation of persisted runs into observation matrices.

An observation is the mean metric value over a grid cell's independent runs
for one (problem, frequency, environment) triple; matrices have one column
per algorithm and feed the comparison tests. Incomplete grids are reported
explicitly, never imputed.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from pathlib import Path

import numpy as np

from ..metrics import PHASE_FIRST, PHASE_LAST
from ..stats import ObservationMatrix
from .config import ExperimentConfig, RunSpec
from .runner import read_run_csv

METRICS = ("hv", "gd", "ms")
PHASES = (PHASE_FIRST, PHASE_LAST)


class MissingRunsError(RuntimeError):
    def __init__(self, missing: list[RunSpec]):
        self.missing = missing
        preview = ", ".join(
            f"{s.algorithm}/{s.problem}/{s.schedule}/tau{s.tau}/seed{s.seed}"
            for s in missing[:5])
        more = "" if len(missing) <= 5 else f" (+{len(missing) - 5} more)"
        super().__init__(f"{len(missing)} runs missing from the grid: {preview}{more}")


def load_runs(cfg: ExperimentConfig) -> dict[RunSpec, list[dict]]:
    """All persisted snapshot rows keyed by run spec; raises on missing cells."""
    out_dir = Path(cfg.output_dir)
    records: dict[RunSpec, list[dict]] = {}
    missing: list[RunSpec] = []
    for spec in cfg.run_specs():
        path = out_dir / spec.relpath()
        if not path.exists():
            missing.append(spec)
            continue
        _, rows = read_run_csv(path)
        records[spec] = rows
    if missing:
        raise MissingRunsError(missing)
    return records


def _cell_key(spec: RunSpec) -> tuple:
    return (spec.schedule, spec.tau, spec.problem, spec.algorithm)


def observation_matrices(cfg: ExperimentConfig,
                         records: dict[RunSpec, list[dict]]
                         ) -> dict[tuple[str, str], ObservationMatrix]:
    """Per (metric, phase): rows = (schedule, tau, problem, environment),
    cells = mean over runs."""
    cells: dict = defaultdict(lambda: defaultdict(list))
    for spec, rows in records.items():
        for row in rows:
            key = (spec.schedule, spec.tau, spec.problem, row["t"], row["phase"])
            cells[key][spec.algorithm].append((spec.seed, row))
    matrices: dict[tuple[str, str], ObservationMatrix] = {}
    algorithms = cfg.algorithms
    for metric in METRICS:
        for phase in PHASES:
            labels, data = [], []
            for key in sorted(k for k in cells if k[4] == phase):
                per_alg = cells[key]
                if any(a not in per_alg for a in algorithms):
                    continue
                row = [float(np.mean([r[metric] for _, r in
                                      sorted(per_alg[a], key=lambda p: p[0])]))
                       for a in algorithms]
                labels.append(f"{key[0]}|tau{key[1]}|{key[2]}|t{key[3]}")
                data.append(row)
            if data:
                matrices[(metric, phase)] = ObservationMatrix(
                    values=np.asarray(data), algorithms=algorithms,
                    row_labels=tuple(labels))
    return matrices


def per_run_means(records: dict[RunSpec, list[dict]]
                  ) -> dict[tuple, dict[str, list[float]]]:
    """Per (metric, phase, schedule, tau, problem): algorithm -> one value per
    run, the mean over post-change environments."""
    out: dict[tuple, dict[str, list[float]]] = defaultdict(lambda: defaultdict(list))
    for spec, rows in sorted(records.items(), key=lambda kv: (kv[0].algorithm, kv[0].seed)):
        for metric in METRICS:
            for phase in PHASES:
                values = [r[metric] for r in rows if r["phase"] == phase and r["t"] >= 1]
                if values:
                    key = (metric, phase, spec.schedule, spec.tau, spec.problem)
                    out[key][spec.algorithm].append(float(np.mean(values)))
    return out


def mean_std_table(run_means: dict[tuple, dict[str, list[float]]]
                   ) -> list[dict]:
    rows = []
    for key in sorted(run_means):
        metric, phase, schedule, tau, problem = key
        for algorithm, values in sorted(run_means[key].items()):
            arr = np.asarray(values)
            rows.append({"metric": metric, "phase": phase, "schedule": schedule,
                         "tau": tau, "problem": problem, "algorithm": algorithm,
                         "mean": float(arr.mean()), "std": float(arr.std(ddof=0))})
    return rows


def write_observation_csvs(out_dir: Path,
                           matrices: dict[tuple[str, str], ObservationMatrix],
                           config_hash: str) -> list[Path]:
    agg_dir = out_dir / "aggregates"
    agg_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for (metric, phase), matrix in sorted(matrices.items()):
        path = agg_dir / f"observations_{metric}_{phase}.csv"
        with open(path, "w", newline="") as fh:
            fh.write(f"# schema=1 config={config_hash}\n")
            writer = csv.writer(fh)
            writer.writerow(["observation", *matrix.algorithms])
            for label, row in zip(matrix.row_labels, matrix.values):
                writer.writerow([label, *[format(v, ".17g") for v in row]])
        paths.append(path)
    return paths


def aggregate(cfg: ExperimentConfig) -> dict:
    """Load, check, and summarize the grid; returns matrices, per-run means
    and the mean/std table, and persists the observation CSVs."""
    records = load_runs(cfg)
    matrices = observation_matrices(cfg, records)
    run_means = per_run_means(records)
    table = mean_std_table(run_means)
    paths = write_observation_csvs(Path(cfg.output_dir), matrices, cfg.config_hash())
    return {"matrices": matrices, "run_means": run_means,
            "mean_std": table, "paths": paths}
