"""Two-archive baseline: a convergence archive (CA) and a diversity archive
(DA) co-evolve; on a change the archives are rebuilt by copying knowledge from
the old environment.

Reconstruction on an objective-count increase copies the old CA verbatim
(re-evaluated) and refills the DA with uniform random samples; on a decrease
the re-evaluated old CA splits into its nondominated part (new CA) and its
dominated part (new DA, topped up randomly). Steady state restricts mating
toward the CA, updates the CA with the crowding-aware elitist rule and
rebuilds the DA to cover weight subregions the CA leaves empty. The CA is the
reported solution set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Array, Population, nondominated_mask
from ..operators import associate_subregions, mutate_batch, sbx_batch
from ..transfer import transfer
from .base import DynamicOptimizer, OptimizerState, reevaluated
from .ktdmoea import ca_update, convergence_indicator


@dataclass
class TwoArchiveState(OptimizerState):
    """``population`` aliases the CA (the reported solution set)."""

    da: Population = None  # type: ignore[assignment]

    @property
    def ca(self) -> Population:
        return self.population

    @ca.setter
    def ca(self, value: Population) -> None:
        self.population = value


def da_update(ca: Population, da: Population, offspring: Population,
              weights: Array, n_target: int) -> Population:
    """Keep, per weight subregion the CA does not occupy, the best-indicator
    candidate from the old DA and the offspring; cap at ``n_target``."""
    cand_x = np.vstack([da.x, offspring.x])
    cand_f = np.vstack([da.f, offspring.f])
    combined = np.vstack([ca.f, cand_f])
    lo, hi = combined.min(axis=0), combined.max(axis=0)
    ca_regions = associate_subregions(ca.f, weights, (lo, hi))
    cand_regions = associate_subregions(cand_f, weights, (lo, hi))
    indicator = convergence_indicator(cand_f, lo, hi)
    occupied = set(int(r) for r in np.unique(ca_regions))
    chosen: list[int] = []
    for region in np.unique(cand_regions):
        if int(region) in occupied:
            continue
        members = np.where(cand_regions == region)[0]
        chosen.append(int(members[np.lexsort((members, indicator[members]))[0]]))
    if len(chosen) > n_target:
        chosen_arr = np.asarray(chosen)
        keep = np.lexsort((chosen_arr, indicator[chosen_arr]))[:n_target]
        chosen = sorted(int(chosen_arr[i]) for i in keep)
    idx = np.asarray(chosen, dtype=int)
    return Population(cand_x[idx], cand_f[idx], offspring.t)


class DTAEA(DynamicOptimizer):
    """Two-archive baseline with copy-based change responses."""

    name = "dtaea"

    def _initial_state(self, rng: np.random.Generator) -> TwoArchiveState:
        ca = self.random_population(rng, 0)
        da = self.random_population(rng, 0)
        return TwoArchiveState(population=ca, env=0, generation=0, rng=rng, da=da)

    def _rebuild_da(self, state: TwoArchiveState, t_new: int,
                    dominated: Population | None) -> None:
        """Increase: fresh random samples. Decrease: the dominated part of the
        old CA topped up with random samples to full size."""
        if dominated is None:
            state.da = self.random_population(state.rng, t_new)
            return
        short = self.population_size - len(dominated)
        filler = self.random_population(state.rng, t_new, short) if short > 0 else None
        if filler is None:
            state.da = dominated
        else:
            state.da = Population(np.vstack([dominated.x, filler.x]),
                                  np.vstack([dominated.f, filler.f]), t_new)

    def _rebuild_ca(self, state: TwoArchiveState, t_new: int) -> Population | None:
        """Returns the dominated remnant on a decrease, None on an increase."""
        m_old = self.problem.objective_count(state.env)
        m_new = self.problem.objective_count(t_new)
        if m_new > m_old:
            state.ca = reevaluated(state.ca, self.problem, t_new)
            return None
        f_new = self.problem.evaluate(state.ca.x, t_new)
        mask = nondominated_mask(f_new)
        dominated = Population(state.ca.x[~mask].copy(), f_new[~mask], t_new)
        state.ca = Population(state.ca.x[mask].copy(), f_new[mask], t_new)
        return dominated

    def _respond_to_change(self, state: TwoArchiveState, t_new: int) -> None:
        dominated = self._rebuild_ca(state, t_new)
        self._rebuild_da(state, t_new, dominated)

    def _mating_pool(self, state: TwoArchiveState) -> tuple[Array, Array]:
        """Each parent comes from the CA with the configured probability,
        otherwise from the DA (always from the CA when the DA is empty)."""
        n_pairs = (self.population_size + 1) // 2
        rng = state.rng
        parents = []
        for _ in range(2):
            from_ca = rng.random(n_pairs) <= self.config.dtaea_ca_mating_prob
            idx_ca = rng.integers(0, len(state.ca), n_pairs)
            if len(state.da) == 0:
                parents.append(state.ca.x[idx_ca])
                continue
            idx_da = rng.integers(0, len(state.da), n_pairs)
            parents.append(np.where(from_ca[:, None], state.ca.x[idx_ca],
                                    state.da.x[idx_da]))
        return parents[0], parents[1]

    def _steady_state(self, state: TwoArchiveState) -> None:
        n = self.population_size
        p1, p2 = self._mating_pool(state)
        c1, c2 = sbx_batch(p1, p2, self.problem.lower, self.problem.upper,
                           self.variation, state.rng)
        kids = np.empty((2 * len(c1), self.problem.n))
        kids[0::2] = c1
        kids[1::2] = c2
        kids = mutate_batch(kids[:n], self.problem.lower, self.problem.upper,
                            self.variation, state.rng)
        offspring = Population(kids, self.problem.evaluate(kids, state.env), state.env)
        m = self.problem.objective_count(state.env)
        weights = self.weights_for(m)
        state.ca = ca_update(state.ca, offspring, weights, n)
        state.da = da_update(state.ca, state.da, offspring, weights, n)


class DTAEAv1(DTAEA):
    """Ablation: the CA reconstruction after changes is replaced by the
    expansion/contraction transfer; the DA rebuild and everything else stay."""

    name = "dtaea-v1"

    def _respond_to_change(self, state: TwoArchiveState, t_new: int) -> None:
        m_old = self.problem.objective_count(state.env)
        m_new = self.problem.objective_count(t_new)
        dominated = None
        if m_new < m_old:
            f_new = self.problem.evaluate(state.ca.x, t_new)
            mask = nondominated_mask(f_new)
            dominated = Population(state.ca.x[~mask].copy(), f_new[~mask], t_new)
        state.ca = transfer(state.ca, self.problem, state.env, t_new,
                            self.config.transfer, self.variation,
                            self.weights_for, state.rng, self.population_size)
        self._rebuild_da(state, t_new, dominated)
