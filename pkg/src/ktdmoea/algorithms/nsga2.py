"""Elitist nondominated-sorting baseline and its diversity-injecting dynamic
variant. The static algorithm responds to a change by copying the population
and re-evaluating it; the dynamic variant additionally replaces a fraction of
members with fresh random solutions."""

from __future__ import annotations

import numpy as np

from ..core import Array, Population, nondominated_sort
from .base import DynamicOptimizer, OptimizerState, reevaluated


def crowding_distance(F: Array) -> Array:
    """Per-member crowding distance within one front; extremes get infinity."""
    F = np.asarray(F, dtype=float)
    size, m = F.shape
    dist = np.zeros(size)
    if size <= 2:
        return np.full(size, np.inf)
    for j in range(m):
        order = np.argsort(F[:, j], kind="stable")
        span = F[order[-1], j] - F[order[0], j]
        dist[order[0]] = dist[order[-1]] = np.inf
        if span <= 0:
            continue
        gaps = (F[order[2:], j] - F[order[:-2], j]) / span
        dist[order[1:-1]] += gaps
    return dist


def rank_and_crowding(F: Array) -> tuple[Array, Array]:
    ranks = np.empty(len(F), dtype=int)
    crowd = np.empty(len(F))
    for r, front in enumerate(nondominated_sort(F)):
        ranks[front] = r
        crowd[front] = crowding_distance(F[front])
    return ranks, crowd


def survival(F: Array, n_target: int) -> Array:
    """Indices surviving front-by-front selection with crowding truncation."""
    chosen: list[int] = []
    for front in nondominated_sort(F):
        room = n_target - len(chosen)
        if room == 0:
            break
        if len(front) <= room:
            chosen.extend(int(i) for i in front)
        else:
            crowd = crowding_distance(F[front])
            order = np.lexsort((front, -crowd))
            chosen.extend(int(front[i]) for i in order[:room])
    return np.asarray(chosen)


class NSGA2(DynamicOptimizer):
    """Static baseline: change response is copy + re-evaluate."""

    name = "nsga2"

    def _respond_to_change(self, state: OptimizerState, t_new: int) -> None:
        state.population = reevaluated(state.population, self.problem, t_new)

    def _tournament(self, ranks: Array, crowd: Array, rng: np.random.Generator,
                    count: int) -> Array:
        a = rng.integers(0, len(ranks), count)
        b = rng.integers(0, len(ranks), count)
        better = (ranks[a] < ranks[b]) | ((ranks[a] == ranks[b]) & (crowd[a] > crowd[b]))
        return np.where(better, a, b)

    def _steady_state(self, state: OptimizerState) -> None:
        from ..operators import mutate_batch, sbx_batch

        pop = state.population
        n = self.population_size
        ranks, crowd = rank_and_crowding(pop.f)
        n_pairs = (n + 1) // 2
        p1 = self._tournament(ranks, crowd, state.rng, n_pairs)
        p2 = self._tournament(ranks, crowd, state.rng, n_pairs)
        c1, c2 = sbx_batch(pop.x[p1], pop.x[p2], self.problem.lower,
                           self.problem.upper, self.variation, state.rng)
        kids = np.empty((2 * n_pairs, self.problem.n))
        kids[0::2] = c1
        kids[1::2] = c2
        kids = mutate_batch(kids[:n], self.problem.lower, self.problem.upper,
                            self.variation, state.rng)
        kids_f = self.problem.evaluate(kids, state.env)
        X = np.vstack([pop.x, kids])
        F = np.vstack([pop.f, kids_f])
        keep = survival(F, n)
        state.population = Population(X[keep], F[keep], state.env)


class DNSGA2(NSGA2):
    """Dynamic variant: after re-evaluation, a configured fraction of the
    population is replaced by fresh uniform random solutions."""

    name = "dnsga2"

    def _respond_to_change(self, state: OptimizerState, t_new: int) -> None:
        super()._respond_to_change(state, t_new)
        n = self.population_size
        n_replace = int(round(self.config.dnsga2_replace_fraction * n))
        if n_replace == 0:
            return
        slots = state.rng.choice(n, size=n_replace, replace=False)
        fresh = state.rng.uniform(self.problem.lower, self.problem.upper,
                                  (n_replace, self.problem.n))
        X = state.population.x.copy()
        F = state.population.f.copy()
        X[slots] = fresh
        F[slots] = self.problem.evaluate(fresh, t_new)
        state.population = Population(X, F, t_new)
