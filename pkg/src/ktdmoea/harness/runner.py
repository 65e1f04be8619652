"""Run execution and persistence.

Protocol: after the warmup segment converges, each environment contributes a
snapshot right after the change response (before any variation in the new
environment) and another at its final generation; the warmup environment
contributes only the final one. Snapshot CSVs contain no timestamps, so
reruns with the same configuration are byte-identical; wall time lives in a
sidecar JSON.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..algorithms import make_optimizer, OptimizerConfig
from ..metrics import (
    DEFAULT_MC_SAMPLES,
    PHASE_FIRST,
    PHASE_LAST,
    MetricSnapshot,
    snapshot_metrics,
)
from ..operators import VariationConfig
from ..problems import (
    ChangeSchedule,
    make_problem,
    parse_schedule_spec,
    reference_front,
    resolve_cache_dir,
)
from ..transfer import TransferConfig
from .config import ExperimentConfig, RunSpec

SCHEMA_VERSION = 1
_CSV_HEADER = "env,phase,generation,objective_count,hv,gd,ms"


@dataclass
class RunRecord:
    spec: RunSpec
    snapshots: list[MetricSnapshot]
    wall_time: float


def metric_seed(run_seed: int, t: int, phase: str) -> int:
    """Stable per-snapshot seed for the Monte Carlo hypervolume stream."""
    phase_code = 0 if phase == PHASE_FIRST else 1
    ss = np.random.SeedSequence(entropy=(run_seed, t, phase_code))
    return int(ss.generate_state(1)[0])


def build_schedule(cfg: ExperimentConfig, spec: RunSpec) -> ChangeSchedule:
    return ChangeSchedule(parse_schedule_spec(spec.schedule), spec.tau, cfg.warmup)


def build_optimizer_config(cfg: ExperimentConfig, n: int) -> OptimizerConfig:
    return OptimizerConfig(
        population_size=cfg.population_size,
        variation=VariationConfig.for_dimension(n),
        transfer=TransferConfig(theta=cfg.theta),
    )


def execute_run(cfg: ExperimentConfig, spec: RunSpec) -> RunRecord:
    """One full run: warmup, the change sequence, and all protocol snapshots."""
    schedule = build_schedule(cfg, spec)
    problem = make_problem(spec.problem, schedule)
    cache = resolve_cache_dir(cfg.cache_dir)
    refs = {m: reference_front(spec.problem, m, cfg.reference_front_size, cache)
            for m in sorted(set(schedule.segments))}
    optimizer = make_optimizer(spec.algorithm, problem, schedule,
                               build_optimizer_config(cfg, problem.n))
    state = optimizer.reset(spec.seed)
    snapshots: list[MetricSnapshot] = []

    started = time.perf_counter()
    for gen in range(schedule.total_generations()):
        t, m = schedule.environment_at(gen)
        changed = t != state.env
        state = optimizer.step(state)
        if changed:
            pop = optimizer.solution_set(state)
            snapshots.append(snapshot_metrics(
                pop.f, refs[m], t, PHASE_FIRST, gen,
                metric_seed(spec.seed, t, PHASE_FIRST), cfg.hv_mc_samples))
        if gen == schedule.last_generation_of(t):
            pop = optimizer.solution_set(state)
            snapshots.append(snapshot_metrics(
                pop.f, refs[m], t, PHASE_LAST, gen,
                metric_seed(spec.seed, t, PHASE_LAST), cfg.hv_mc_samples))
    wall = time.perf_counter() - started
    return RunRecord(spec=spec, snapshots=snapshots, wall_time=wall)


def run_csv_lines(record: RunRecord, config_hash: str) -> list[str]:
    lines = [f"# schema={SCHEMA_VERSION} config={config_hash}", _CSV_HEADER]
    for s in record.snapshots:
        lines.append(",".join([
            str(s.t), s.phase, str(s.generation), str(s.objective_count),
            format(s.hv, ".17g"), format(s.gd, ".17g"), format(s.ms, ".17g"),
        ]))
    return lines


def write_run(out_dir: Path, record: RunRecord, config_hash: str) -> Path:
    path = out_dir / record.spec.relpath()
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".csv.tmp")
    tmp.write_text("\n".join(run_csv_lines(record, config_hash)) + "\n")
    tmp.replace(path)
    meta = {"wall_time_s": round(record.wall_time, 3), "config": config_hash,
            "seed": record.spec.seed}
    path.with_suffix(".meta.json").write_text(json.dumps(meta, sort_keys=True) + "\n")
    return path


def read_run_csv(path: Path) -> tuple[str, list[dict]]:
    """(config hash, snapshot rows) from one persisted run file."""
    lines = path.read_text().splitlines()
    header = lines[0]
    config_hash = header.split("config=")[1].strip() if "config=" in header else ""
    rows = []
    for line in lines[2:]:
        if not line.strip():
            continue
        env, phase, gen, m, hv, gd, ms = line.split(",")
        rows.append({"t": int(env), "phase": phase, "generation": int(gen),
                     "objective_count": int(m), "hv": float(hv),
                     "gd": float(gd), "ms": float(ms)})
    return config_hash, rows


def prepare_reference_fronts(cfg: ExperimentConfig) -> None:
    """Materialize every needed front before workers start, so the cache is
    written once by one process."""
    cache = resolve_cache_dir(cfg.cache_dir)
    for schedule_spec in cfg.schedules:
        segments = parse_schedule_spec(schedule_spec)
        for problem in cfg.problems:
            for m in sorted(set(segments)):
                reference_front(problem, m, cfg.reference_front_size, cache)


def _run_and_persist(args: tuple) -> str:
    cfg_dict, spec, config_hash = args
    cfg = ExperimentConfig.from_dict(cfg_dict)
    record = execute_run(cfg, spec)
    path = write_run(Path(cfg.output_dir), record, config_hash)
    return str(path)


def run_experiment(cfg: ExperimentConfig, force: bool = False,
                   log=print) -> list[Path]:
    """Execute the full grid, skipping already-persisted runs whose config
    digest matches; interrupted experiments resume from the completed files."""
    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    config_hash = cfg.config_hash()
    prepare_reference_fronts(cfg)

    pending: list[RunSpec] = []
    done: list[Path] = []
    for spec in cfg.run_specs():
        path = out_dir / spec.relpath()
        if not force and path.exists():
            existing_hash, _ = read_run_csv(path)
            if existing_hash == config_hash:
                done.append(path)
                continue
            raise RuntimeError(
                f"{path} was produced by a different configuration "
                f"({existing_hash} != {config_hash}); rerun with force or a fresh output dir")
        pending.append(spec)

    log(f"{len(done)} runs already persisted, {len(pending)} to execute")
    if not pending:
        return done

    if cfg.workers <= 1:
        for i, spec in enumerate(pending, 1):
            record = execute_run(cfg, spec)
            done.append(write_run(out_dir, record, config_hash))
            log(f"[{i}/{len(pending)}] {spec.algorithm} {spec.problem} "
                f"{spec.schedule} tau={spec.tau} seed={spec.seed} "
                f"({record.wall_time:.1f}s)")
    else:
        jobs = [(cfg.to_dict(), spec, config_hash) for spec in pending]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for i, path in enumerate(pool.map(_run_and_persist, jobs), 1):
                done.append(Path(path))
                log(f"[{i}/{len(pending)}] {path}")
    return done
