"""Dynamic benchmark problems, environment schedules and true-front samplers."""

from __future__ import annotations

from .base import (
    MAX_OBJECTIVES,
    MIN_OBJECTIVES,
    ChangeSchedule,
    DynamicProblem,
    ObjectiveFamily,
    ScheduleEnded,
    expand_waypoints,
    parse_schedule_spec,
    schedule_objective_count,
)
from .dtlz import SimplexSphereFamily
from .reference import (
    CACHE_ENV_VAR,
    ReferenceFront,
    reference_front,
    resolve_cache_dir,
    sample_true_pf,
    write_front_csv,
)
from .wfg import WFGFamily

PROBLEM_NAMES = ("F1", "F2", "F3", "F4", "WFG1", "WFG2", "WFG3", "WFG4",
                 "WFG5", "WFG6", "WFG7", "WFG8", "WFG9")


def make_family(name: str, **overrides) -> ObjectiveFamily:
    name = name.upper()
    if name in ("F1", "F2", "F3", "F4"):
        return SimplexSphereFamily(int(name[1]), **overrides)
    if name.startswith("WFG") and name in PROBLEM_NAMES:
        return WFGFamily(int(name[3:]), **overrides)
    raise ValueError(f"unknown problem {name!r}; choose one of {PROBLEM_NAMES}")


def make_problem(name: str, schedule: ChangeSchedule, **overrides) -> DynamicProblem:
    return DynamicProblem(make_family(name, **overrides), schedule)


__all__ = [
    "CACHE_ENV_VAR", "ChangeSchedule", "DynamicProblem", "MAX_OBJECTIVES",
    "MIN_OBJECTIVES", "ObjectiveFamily", "PROBLEM_NAMES", "ReferenceFront",
    "ScheduleEnded", "SimplexSphereFamily", "WFGFamily", "expand_waypoints",
    "make_family", "make_problem", "parse_schedule_spec", "reference_front",
    "resolve_cache_dir", "sample_true_pf", "schedule_objective_count",
    "write_front_csv",
]
