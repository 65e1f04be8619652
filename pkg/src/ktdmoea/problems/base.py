"""Environment schedules and the dynamic-problem evaluation contract.

A run optimizes a fixed decision space while the number of objectives follows
a schedule of segments: a warmup segment, then one segment per environment,
each lasting ``tau`` generations. The decision dimension never changes; only
the objective count (and hence the objective functions) does.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..core import Array

MIN_OBJECTIVES = 2
MAX_OBJECTIVES = 7


class ScheduleEnded(Exception):
    """Raised when a generation index lies beyond the end of the run."""


def expand_waypoints(waypoints: Sequence[int]) -> list[int]:
    """Walk between waypoints one objective at a time, e.g. [2,7,2] ->
    [2,3,4,5,6,7,6,5,4,3,2]."""
    out = [int(waypoints[0])]
    for target in waypoints[1:]:
        step = 1 if target > out[-1] else -1
        while out[-1] != target:
            out.append(out[-1] + step)
    return out


def parse_schedule_spec(spec: str | Sequence[int]) -> tuple[int, ...]:
    """Parse a dash-separated objective-count sequence.

    Counts stepping by at most 2 are taken literally ("2-3-5-7-5-3-2");
    larger jumps are treated as waypoints expanded one by one ("2-7-2").
    """
    if isinstance(spec, str):
        values = [int(part) for part in spec.split("-")]
    else:
        values = [int(v) for v in spec]
    if len(values) >= 2 and any(abs(b - a) > 2 for a, b in zip(values, values[1:])):
        values = expand_waypoints(values)
    return tuple(values)


@dataclass(frozen=True)
class ChangeSchedule:
    """Ordered objective counts per environment plus timing.

    ``segments[0]`` is the warmup environment, granted ``warmup`` generations;
    each later segment lasts ``tau`` generations.
    """

    segments: tuple[int, ...]
    tau: int
    warmup: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(int(m) for m in self.segments))
        if not self.segments:
            raise ValueError("schedule needs at least one segment")
        for m in self.segments:
            if not MIN_OBJECTIVES <= m <= MAX_OBJECTIVES:
                raise ValueError(f"objective count {m} outside [{MIN_OBJECTIVES}, {MAX_OBJECTIVES}]")
        for a, b in zip(self.segments, self.segments[1:]):
            if abs(b - a) not in (1, 2):
                raise ValueError(f"consecutive objective counts must differ by 1 or 2, got {a}->{b}")
        if self.tau < 1 or self.warmup < 1:
            raise ValueError("tau and warmup must be positive")

    @property
    def n_environments(self) -> int:
        return len(self.segments)

    @property
    def n_changes(self) -> int:
        return len(self.segments) - 1

    def objective_count(self, t: int) -> int:
        return self.segments[t]

    def max_objectives(self) -> int:
        return max(self.segments)

    def total_generations(self) -> int:
        return self.warmup + self.n_changes * self.tau

    def environment_at(self, generation: int) -> tuple[int, int]:
        """(environment index, objective count) active at ``generation``."""
        if generation < 0:
            raise ValueError("generation must be nonnegative")
        if generation >= self.total_generations():
            raise ScheduleEnded(f"generation {generation} is past the end of the run")
        if generation < self.warmup:
            return 0, self.segments[0]
        t = 1 + (generation - self.warmup) // self.tau
        return t, self.segments[t]

    def change_generation_of(self, t: int) -> int:
        """First generation of environment t >= 1 (the change generation)."""
        if not 1 <= t <= self.n_changes:
            raise ValueError(f"environment {t} has no change generation")
        return self.warmup + (t - 1) * self.tau

    def last_generation_of(self, t: int) -> int:
        """Final generation spent in environment t."""
        if t == 0:
            return self.warmup - 1
        if not 1 <= t <= self.n_changes:
            raise ValueError(f"no environment {t} in this schedule")
        return self.warmup + t * self.tau - 1


def schedule_objective_count(schedule: ChangeSchedule, generation: int) -> tuple[int, int]:
    """Functional alias for :meth:`ChangeSchedule.environment_at`."""
    return schedule.environment_at(generation)


class ObjectiveFamily:
    """A scalable static test problem: fixed box bounds, evaluation for any
    supported objective count."""

    name: str
    n: int
    lower: Array
    upper: Array

    def evaluate(self, X: Array, m: int) -> Array:  # pragma: no cover - interface
        raise NotImplementedError


class DynamicProblem:
    """Time-indexed objective family. ``evaluate(x, t)`` returns objective
    vectors whose length is the schedule's objective count at environment t."""

    def __init__(self, family: ObjectiveFamily, schedule: ChangeSchedule):
        self.family = family
        self.schedule = schedule
        self.name = family.name
        self.n = family.n
        self.lower = np.asarray(family.lower, dtype=float)
        self.upper = np.asarray(family.upper, dtype=float)

    def objective_count(self, t: int) -> int:
        return self.schedule.objective_count(t)

    def evaluate(self, x: Array, t: int) -> Array:
        """Evaluate one vector (1-D) or a batch (2-D, row-wise) at environment t."""
        X = np.asarray(x, dtype=float)
        single = X.ndim == 1
        if single:
            X = X[None, :]
        if X.shape[1] != self.n:
            raise ValueError(f"{self.name} expects {self.n} variables, got {X.shape[1]}")
        if (X < self.lower - 1e-9).any() or (X > self.upper + 1e-9).any():
            raise ValueError(f"decision vector outside the bounds of {self.name}")
        F = self.family.evaluate(np.clip(X, self.lower, self.upper),
                                 self.objective_count(t))
        return F[0] if single else F
