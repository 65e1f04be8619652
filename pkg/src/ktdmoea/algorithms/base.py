"""Shared optimizer plumbing: configuration, state, the generation loop
contract and offspring generation.

Every optimizer owns exactly one random stream per run; a run's trajectory is
fully determined by (algorithm, problem, schedule, seed). One call to ``step``
consumes one generation: a change response when the schedule switches
environments at that generation, a steady-state update otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import Array, Population, make_rng
from ..operators import VariationConfig, weight_vectors_for
from ..problems.base import ChangeSchedule, DynamicProblem
from ..transfer import TransferConfig


@dataclass(frozen=True)
class OptimizerConfig:
    """Shared and algorithm-specific knobs, defaulting to the standard
    experimental settings."""

    population_size: int = 300
    variation: VariationConfig | None = None  # None: p_m = 1/n at bind time
    transfer: TransferConfig = field(default_factory=TransferConfig)
    moead_neighborhood: int = 20
    moead_replace_limit: int = 2
    dnsga2_replace_fraction: float = 0.2
    dtaea_ca_mating_prob: float = 0.9


@dataclass
class OptimizerState:
    """Mutable per-run state; subclasses add archives as needed."""

    population: Population
    env: int
    generation: int
    rng: np.random.Generator


class DynamicOptimizer:
    """Base class driving the change-aware generation loop."""

    name = "base"

    def __init__(self, problem: DynamicProblem, schedule: ChangeSchedule,
                 config: OptimizerConfig | None = None):
        self.problem = problem
        self.schedule = schedule
        self.config = config or OptimizerConfig()
        if self.config.population_size < 2 * schedule.max_objectives():
            raise ValueError("population size must be at least twice the largest objective count")
        self.variation = self.config.variation or VariationConfig.for_dimension(problem.n)
        self._weights: dict[int, Array] = {}

    @property
    def population_size(self) -> int:
        return self.config.population_size

    def weights_for(self, m: int) -> Array:
        if m not in self._weights:
            self._weights[m] = weight_vectors_for(m, self.population_size)
        return self._weights[m]

    def random_population(self, rng: np.random.Generator, t: int,
                          size: int | None = None) -> Population:
        size = size or self.population_size
        X = rng.uniform(self.problem.lower, self.problem.upper, (size, self.problem.n))
        return Population(X, self.problem.evaluate(X, t), t)

    def reset(self, seed: int) -> OptimizerState:
        rng = make_rng(seed)
        return self._initial_state(rng)

    def step(self, state: OptimizerState) -> OptimizerState:
        t, _ = self.schedule.environment_at(state.generation)
        if t != state.env:
            self._respond_to_change(state, t)
            state.env = t
        else:
            self._steady_state(state)
        state.generation += 1
        return state

    def solution_set(self, state: OptimizerState) -> Population:
        return state.population

    def offspring(self, X: Array, rng: np.random.Generator, count: int) -> Array:
        """count children from uniformly drawn distinct parent pairs, each pair
        crossed and both children mutated."""
        from ..operators import mutate_batch, sbx_batch

        size = X.shape[0]
        n_pairs = (count + 1) // 2
        i = rng.integers(0, size, n_pairs)
        j = rng.integers(0, size - 1, n_pairs)
        j = np.where(j >= i, j + 1, j)
        c1, c2 = sbx_batch(X[i], X[j], self.problem.lower, self.problem.upper,
                           self.variation, rng)
        kids = np.empty((2 * n_pairs, X.shape[1]))
        kids[0::2] = c1
        kids[1::2] = c2
        return mutate_batch(kids[:count], self.problem.lower, self.problem.upper,
                            self.variation, rng)

    # subclass hooks -----------------------------------------------------

    def _initial_state(self, rng: np.random.Generator) -> OptimizerState:
        return OptimizerState(population=self.random_population(rng, 0),
                              env=0, generation=0, rng=rng)

    def _respond_to_change(self, state: OptimizerState, t_new: int) -> None:
        raise NotImplementedError

    def _steady_state(self, state: OptimizerState) -> None:
        raise NotImplementedError


def reevaluated(pop: Population, problem: DynamicProblem, t_new: int) -> Population:
    """Copy of a population with objectives recomputed in the new environment."""
    return Population(pop.x.copy(), problem.evaluate(pop.x, t_new), t_new)
