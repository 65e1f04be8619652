"""Optimizers behind one interface: reset(seed) -> state, step(state) -> state,
solution_set(state) -> Population."""

from __future__ import annotations

from .base import DynamicOptimizer, OptimizerConfig, OptimizerState, reevaluated
from .dtaea import DTAEA, DTAEAv1, TwoArchiveState, da_update
from .ktdmoea import KTDMOEA, KTDMOEAv1, ca_update, convergence_indicator, ktdmoea_step
from .moead import MOEAD, tchebycheff
from .nsga2 import DNSGA2, NSGA2, crowding_distance, survival

ALGORITHMS: dict[str, type[DynamicOptimizer]] = {
    "ktdmoea": KTDMOEA,
    "dtaea": DTAEA,
    "nsga2": NSGA2,
    "dnsga2": DNSGA2,
    "moead": MOEAD,
    "dtaea-v1": DTAEAv1,
    "ktdmoea-v1": KTDMOEAv1,
}


def make_optimizer(name: str, problem, schedule, config=None) -> DynamicOptimizer:
    key = name.lower()
    if key not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}; choose one of {sorted(ALGORITHMS)}")
    return ALGORITHMS[key](problem, schedule, config)


def make_ablation(kind: str) -> type[DynamicOptimizer]:
    """The two component-swap variants: 'DTAEAv1' replaces the two-archive
    reconstruction with the transfer; 'KTDMOEAv1' does the reverse swap."""
    table = {"dtaeav1": DTAEAv1, "ktdmoeav1": KTDMOEAv1}
    key = kind.lower().replace("-", "").replace("_", "")
    if key not in table:
        raise ValueError(f"unknown ablation {kind!r}")
    return table[key]


__all__ = [
    "ALGORITHMS", "DNSGA2", "DTAEA", "DTAEAv1", "DynamicOptimizer", "KTDMOEA",
    "KTDMOEAv1", "MOEAD", "NSGA2", "OptimizerConfig", "OptimizerState",
    "TwoArchiveState", "ca_update", "convergence_indicator", "crowding_distance",
    "da_update", "ktdmoea_step", "make_ablation", "make_optimizer", "reevaluated",
    "survival", "tchebycheff",
]
