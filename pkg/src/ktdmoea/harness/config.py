"""Experiment configuration: a declarative JSON file plus CLI overrides.

Every protocol parameter carries its standard value as the default: population
300, theta 2, change frequencies {5, 25, 50, 200}, 31 independent runs, 1000
warmup generations before the first change.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

DEFAULT_TAU_VALUES = (5, 25, 50, 200)


@dataclass(frozen=True)
class RunSpec:
    """One (algorithm, problem, schedule, frequency, run) cell of the grid."""

    algorithm: str
    problem: str
    schedule: str
    tau: int
    run_index: int
    seed: int

    def relpath(self) -> Path:
        return (Path("runs") / self.schedule / f"tau{self.tau}" / self.problem
                / self.algorithm / f"seed{self.seed}.csv")


@dataclass
class ExperimentConfig:
    algorithms: tuple[str, ...] = ("ktdmoea", "dtaea", "nsga2", "dnsga2", "moead")
    problems: tuple[str, ...] = ("F1", "F2", "F3", "F4", "WFG1", "WFG2", "WFG3",
                                 "WFG4", "WFG5", "WFG6", "WFG7", "WFG8", "WFG9")
    schedules: tuple[str, ...] = ("2-7-2",)
    tau_values: tuple[int, ...] = DEFAULT_TAU_VALUES
    runs: int = 31
    base_seed: int = 1
    population_size: int = 300
    theta: int = 2
    warmup: int = 1000
    reference_front_size: int = 10000
    hv_mc_samples: int = 100000
    output_dir: str = "results"
    cache_dir: str | None = None
    workers: int = 1

    def __post_init__(self):
        self.algorithms = tuple(str(a).lower() for a in self.algorithms)
        self.problems = tuple(str(p).upper() for p in self.problems)
        self.schedules = tuple(str(s) for s in self.schedules)
        self.tau_values = tuple(int(t) for t in self.tau_values)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)

    def config_hash(self) -> str:
        """Stable digest of everything that influences run results."""
        relevant = self.to_dict()
        for transient in ("output_dir", "cache_dir", "workers"):
            relevant.pop(transient)
        blob = json.dumps(relevant, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]

    def run_specs(self) -> list[RunSpec]:
        """Every grid cell exactly once; seeds are base_seed + run index."""
        specs = []
        for schedule in self.schedules:
            for tau in self.tau_values:
                for problem in self.problems:
                    for algorithm in self.algorithms:
                        for r in range(self.runs):
                            specs.append(RunSpec(algorithm=algorithm,
                                                 problem=problem,
                                                 schedule=schedule, tau=tau,
                                                 run_index=r,
                                                 seed=self.base_seed + r))
        return specs
