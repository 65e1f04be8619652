"""Decomposition baseline: one subproblem per weight vector, Tchebycheff
aggregation against a running ideal point, neighborhood mating with a bounded
replacement count. The population size equals the weight count, the smallest
evenly spread design at or above the configured size.

On a change the weight set is regenerated for the new objective count, the old
population is re-evaluated, and each new subproblem adopts the re-evaluated
solution that scalarizes best for its weight."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Array, Population
from ..operators import mutate_batch, sbx_batch
from .base import DynamicOptimizer, OptimizerState

_WEIGHT_FLOOR = 1e-6


def tchebycheff(F: Array, weight: Array, ideal: Array) -> Array:
    """max_i w_i |f_i - z_i| with zero weights floored to keep all objectives
    in play; the ideal point itself scores 0."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    w = np.maximum(np.asarray(weight, dtype=float), _WEIGHT_FLOOR)
    return (w * np.abs(F - ideal)).max(axis=1)


@dataclass
class DecompositionState(OptimizerState):
    weights: Array = None  # type: ignore[assignment]
    neighbors: Array = None  # type: ignore[assignment]
    ideal: Array = None  # type: ignore[assignment]


class MOEAD(DynamicOptimizer):
    name = "moead"

    def _weight_set(self, m: int) -> Array:
        return self.weights_for(m)

    def _neighborhoods(self, weights: Array) -> Array:
        t = min(self.config.moead_neighborhood, len(weights))
        d = np.linalg.norm(weights[:, None, :] - weights[None, :, :], axis=2)
        return np.argsort(d, axis=1, kind="stable")[:, :t]

    def _initial_state(self, rng: np.random.Generator) -> DecompositionState:
        weights = self._weight_set(self.schedule.objective_count(0))
        pop = self.random_population(rng, 0, size=len(weights))
        return DecompositionState(population=pop, env=0, generation=0, rng=rng,
                                  weights=weights,
                                  neighbors=self._neighborhoods(weights),
                                  ideal=pop.f.min(axis=0))

    def _respond_to_change(self, state: DecompositionState, t_new: int) -> None:
        weights = self._weight_set(self.problem.objective_count(t_new))
        f_new = self.problem.evaluate(state.population.x, t_new)
        ideal = f_new.min(axis=0)
        picks = np.empty(len(weights), dtype=int)
        for i, w in enumerate(weights):
            picks[i] = int(np.argmin(tchebycheff(f_new, w, ideal)))
        state.population = Population(state.population.x[picks].copy(),
                                      f_new[picks], t_new)
        state.weights = weights
        state.neighbors = self._neighborhoods(weights)
        state.ideal = ideal

    def _steady_state(self, state: DecompositionState) -> None:
        rng = state.rng
        X, F = state.population.x, state.population.f
        n_r = self.config.moead_replace_limit
        for i in range(len(state.weights)):
            hood = state.neighbors[i]
            a, b = rng.choice(hood, size=2, replace=False)
            child, _ = sbx_batch(X[a][None, :], X[b][None, :], self.problem.lower,
                                 self.problem.upper, self.variation, rng)
            child = mutate_batch(child, self.problem.lower, self.problem.upper,
                                 self.variation, rng)[0]
            child_f = self.problem.evaluate(child, state.env)
            state.ideal = np.minimum(state.ideal, child_f)
            replaced = 0
            for j in rng.permutation(hood):
                if replaced >= n_r:
                    break
                if tchebycheff(child_f[None, :], state.weights[j], state.ideal)[0] < \
                        tchebycheff(F[j][None, :], state.weights[j], state.ideal)[0]:
                    X[j] = child
                    F[j] = child_f
                    replaced += 1

    @property
    def population_size(self) -> int:
        # the decomposition population tracks its weight count; the configured
        # size only seeds the weight-set search
        return self.config.population_size
