"""Knowledge transfer across objective-count changes.

When the objective count grows, the optimal manifold gains dimensions: a
detective cloud mutated around one extreme point of the old optimal set is
screened for survivors that are nondominated, off the old set's subregions,
and therefore witness directions the set can expand along; base solutions
evenly picked from the old set are then pushed along those decision-space
rays up to the box boundary. When the count shrinks, the re-evaluated old set
collapses onto the smaller front: its nondominated core is kept, stretched at
the extremes toward the boundary, and filled in by pair interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Array,
    Population,
    extreme_points,
    nondominated_mask,
    not_dominated_by,
    rand_open_closed,
)
from .operators import VariationConfig, associate_subregions, mutate_batch
from .problems.base import DynamicProblem


@dataclass(frozen=True)
class TransferConfig:
    """Expansion knobs: solutions per direction, detective cloud size
    (defaults to the population size), direction-duplicate tolerance."""

    theta: int = 2
    detective_size: int | None = None
    dedup_tolerance: float = 1e-9

    def __post_init__(self):
        if self.theta < 1:
            raise ValueError("theta must be at least 1")


@dataclass
class DirectionSet:
    """Unit decision-space rays anchored at one extreme point."""

    anchor: Array  # (n,) decision vector of the chosen extreme point
    directions: Array  # (n_dir, n), unit rows

    def __len__(self) -> int:
        return int(self.directions.shape[0])


def boundary_coefficient(x: Array, direction: Array, lower: Array, upper: Array) -> float:
    """Largest step c such that x + c * direction stays inside the box.

    Components with zero direction impose no constraint. An all-zero
    direction is a contract violation.
    """
    x = np.asarray(x, dtype=float)
    d = np.asarray(direction, dtype=float)
    if not np.any(d):
        raise ValueError("direction must be nonzero")
    para = np.full(x.shape, np.inf)
    pos = d > 0
    neg = d < 0
    para[pos] = (np.asarray(upper, dtype=float)[pos] - x[pos]) / d[pos]
    para[neg] = (np.asarray(lower, dtype=float)[neg] - x[neg]) / d[neg]
    return float(max(para.min(), 0.0))


def boundary_coefficients(X: Array, D: Array, lower: Array, upper: Array) -> Array:
    """Vectorized :func:`boundary_coefficient` for base rows x direction rows."""
    X = np.asarray(X, dtype=float)[:, None, :]
    D = np.asarray(D, dtype=float)[None, :, :]
    para = np.full(np.broadcast_shapes(X.shape, D.shape), np.inf)
    pos = np.broadcast_to(D > 0, para.shape)
    neg = np.broadcast_to(D < 0, para.shape)
    up = np.broadcast_to(np.asarray(upper, dtype=float), para.shape)
    lo = np.broadcast_to(np.asarray(lower, dtype=float), para.shape)
    Xb = np.broadcast_to(X, para.shape)
    Db = np.broadcast_to(D, para.shape)
    para[pos] = (up[pos] - Xb[pos]) / Db[pos]
    para[neg] = (lo[neg] - Xb[neg]) / Db[neg]
    return np.maximum(para.min(axis=2), 0.0)


def even_objective_selection(F: Array, count: int) -> Array:
    """Indices of ``count`` members spread evenly in objective space.

    Two objectives: even positions along the first-objective sort (repeats
    appear naturally once count exceeds the set size). More objectives:
    greedy max-min-distance selection seeded at the per-objective extreme
    points, cycling once the set is exhausted. count = 1 picks the
    first-objective extreme.
    """
    F = np.asarray(F, dtype=float)
    size = len(F)
    if size == 0:
        raise ValueError("cannot select from an empty set")
    if count <= 0:
        return np.empty(0, dtype=int)
    if F.shape[1] == 2 or size == 1:
        order = np.argsort(F[:, 0], kind="stable")
        if count == 1:
            return np.asarray([order[-1]])
        positions = np.rint(np.arange(count) * (size - 1) / (count - 1)).astype(int)
        return order[positions]
    seeds = list(dict.fromkeys(int(i) for i in extreme_points(F)))
    if count <= len(seeds):
        return np.asarray(seeds[:count])
    selected = list(seeds)
    d_min = np.full(size, np.inf)
    for s in selected:
        diff = F - F[s]
        d_min = np.minimum(d_min, (diff * diff).sum(axis=1))
    chosen_mask = np.zeros(size, dtype=bool)
    chosen_mask[selected] = True
    while len(selected) < min(count, size):
        d_masked = np.where(chosen_mask, -np.inf, d_min)
        nxt = int(np.argmax(d_masked))
        selected.append(nxt)
        chosen_mask[nxt] = True
        diff = F - F[nxt]
        d_min = np.minimum(d_min, (diff * diff).sum(axis=1))
    while len(selected) < count:
        selected.append(selected[len(selected) % size])
    return np.asarray(selected[:count])


def _dedup_directions(D: Array, tolerance: float) -> Array:
    """Drop rays whose cosine similarity with a kept ray exceeds 1 - tolerance."""
    kept: list[Array] = []
    for row in D:
        if all(float(row @ other) <= 1.0 - tolerance for other in kept):
            kept.append(row)
    return np.asarray(kept)


def search_expansion_directions(ps: Population, problem: DynamicProblem, t_new: int,
                                weights: Array, cfg: TransferConfig,
                                variation: VariationConfig,
                                rng: np.random.Generator) -> DirectionSet | None:
    """Discover decision-space expansion rays after an objective-count increase.

    Mutates a detective cloud around a randomly chosen extreme point of the
    old set, keeps cloud members that survive nondominated sorting and are
    not dominated by the re-evaluated old set, discards those landing in
    subregions the old set already occupies, and normalizes the survivors
    into anchored unit directions. Returns None when nothing survives.
    """
    ext_idx = extreme_points(ps.f)
    anchor = ps.x[ext_idx[int(rng.integers(len(ext_idx)))]]
    n_detective = cfg.detective_size or len(ps)
    cloud = mutate_batch(np.tile(anchor, (n_detective, 1)),
                         problem.lower, problem.upper, variation, rng)
    cloud_f = problem.evaluate(cloud, t_new)
    keep = nondominated_mask(cloud_f)
    cloud, cloud_f = cloud[keep], cloud_f[keep]

    ps_f_new = problem.evaluate(ps.x, t_new)
    survive = not_dominated_by(cloud_f, ps_f_new)
    cloud, cloud_f = cloud[survive], cloud_f[survive]
    if len(cloud) == 0:
        return None

    combined = np.vstack([cloud_f, ps_f_new])
    norm_bounds = (combined.min(axis=0), combined.max(axis=0))
    cloud_regions = associate_subregions(cloud_f, weights, norm_bounds)
    ps_regions = associate_subregions(ps_f_new, weights, norm_bounds)
    fresh = ~np.isin(cloud_regions, np.unique(ps_regions))
    cloud = cloud[fresh]
    if len(cloud) == 0:
        return None

    diffs = cloud - anchor
    norms = np.linalg.norm(diffs, axis=1)
    nonzero = norms > 0
    if not nonzero.any():
        return None
    directions = _dedup_directions(diffs[nonzero] / norms[nonzero, None],
                                   cfg.dedup_tolerance)
    return DirectionSet(anchor=anchor.copy(), directions=directions)


def expansion_counts(n_out: int, m_old: int, n_dir: int, theta: int) -> tuple[int, int, int]:
    """(base solutions, expanded solutions, fill-from-old-set solutions).

    Reserving m_old slots guarantees the old set's extreme points carry over.
    """
    n_base = max((n_out - m_old) // (n_dir * theta), 0)
    n_expanded = n_base * n_dir * theta
    return n_base, n_expanded, n_out - n_expanded


def expand_ps(ps: Population, dirs: DirectionSet, cfg: TransferConfig,
              problem: DynamicProblem, t_new: int,
              rng: np.random.Generator, n_out: int) -> Population:
    """Push evenly selected base solutions along each expansion ray.

    Each (base, direction) pair yields theta solutions at a random fraction
    (drawn in (0, 1]) of the boundary-reaching step, so every output respects
    the box. The remainder is filled from the old set, extreme points first.
    """
    m_old = ps.f.shape[1]
    n_base, n_expanded, n_fill = expansion_counts(n_out, m_old, len(dirs), cfg.theta)
    blocks = []
    if n_base > 0:
        base_x = ps.x[even_objective_selection(ps.f, n_base)]
        coeff = boundary_coefficients(base_x, dirs.directions, problem.lower, problem.upper)
        steps = coeff[:, :, None] * rand_open_closed(rng, (n_base, len(dirs), cfg.theta))
        moved = base_x[:, None, None, :] + steps[:, :, :, None] * dirs.directions[None, :, None, :]
        blocks.append(np.clip(moved.reshape(-1, ps.x.shape[1]), problem.lower, problem.upper))
    ext_idx = extreme_points(ps.f)
    fill_idx = np.concatenate([ext_idx, even_objective_selection(ps.f, n_fill - len(ext_idx))])
    blocks.append(ps.x[fill_idx])
    X = np.vstack(blocks)
    return Population(X, problem.evaluate(X, t_new), t_new)


def _spread_solution(x_extreme: Array, x_neighbor: Array,
                     lower: Array, upper: Array) -> Array | None:
    """Extend the neighbor-to-extreme direction until it hits the box."""
    diff = np.asarray(x_extreme, dtype=float) - np.asarray(x_neighbor, dtype=float)
    norm = np.linalg.norm(diff)
    if norm == 0:
        return None
    direction = diff / norm
    c = boundary_coefficient(x_extreme, direction, lower, upper)
    return np.clip(x_extreme + c * direction, lower, upper)


def contract_ps(ps: Population, problem: DynamicProblem, t_new: int,
                variation: VariationConfig, rng: np.random.Generator,
                n_out: int) -> Population:
    """Collapse the old set after an objective-count decrease.

    The re-evaluated nondominated core is kept verbatim; one boundary-seeking
    spread solution is added per extreme point (direction from its nearest
    decision-space neighbor); random pair interpolation x_a + r (x_a - x_b),
    clamped to the box, fills the population. A singleton core falls back to
    mutation around the single point.
    """
    f_new = problem.evaluate(ps.x, t_new)
    core = nondominated_mask(f_new)
    core_x, core_f = ps.x[core][:n_out], f_new[core][:n_out]
    rows = [row.copy() for row in core_x]

    if len(core_x) == 1:
        extra = mutate_batch(np.tile(core_x[0], (n_out - 1, 1)),
                             problem.lower, problem.upper, variation, rng)
        X = np.vstack([core_x, extra])
        F = np.vstack([core_f, problem.evaluate(extra, t_new)])
        return Population(X, F, t_new)

    if len(rows) < n_out:
        for j in extreme_points(core_f):
            if len(rows) >= n_out:
                break
            dists = np.linalg.norm(core_x - core_x[j], axis=1)
            dists[j] = np.inf
            dists[dists == 0] = np.inf
            if not np.isfinite(dists).any():
                continue
            spread = _spread_solution(core_x[j], core_x[int(np.argmin(dists))],
                                      problem.lower, problem.upper)
            if spread is not None:
                rows.append(spread)
        while len(rows) < n_out:
            i = int(rng.integers(len(rows)))
            j = int(rng.integers(len(rows) - 1))
            if j >= i:
                j += 1
            r = float(rand_open_closed(rng))
            candidate = rows[i] + r * (rows[i] - rows[j])
            rows.append(np.clip(candidate, problem.lower, problem.upper))

    X = np.asarray(rows[:n_out])
    fresh = X[len(core_x):]
    F = np.vstack([core_f, problem.evaluate(fresh, t_new)]) if len(fresh) else core_f
    return Population(X, F, t_new)


def transfer(ps: Population, problem: DynamicProblem, t_old: int, t_new: int,
             cfg: TransferConfig, variation: VariationConfig,
             weights_for, rng: np.random.Generator, n_out: int) -> Population:
    """Dispatch the change response: expansion when the objective count grows,
    contraction when it shrinks.

    ``weights_for(m)`` supplies the subregion weight set for the new count.
    If no expansion direction is found the population falls back to an even
    selection from the old set (extreme points kept verbatim, the rest
    mutated for variety).
    """
    m_old = problem.objective_count(t_old)
    m_new = problem.objective_count(t_new)
    if m_new == m_old:
        raise ValueError("transfer requires a change in the objective count")
    if m_new > m_old:
        dirs = search_expansion_directions(ps, problem, t_new, weights_for(m_new),
                                           cfg, variation, rng)
        if dirs is None or len(dirs) == 0:
            ext_idx = extreme_points(ps.f)
            rest = ps.x[even_objective_selection(ps.f, n_out - len(ext_idx))]
            mutated = mutate_batch(rest, problem.lower, problem.upper, variation, rng)
            X = np.vstack([ps.x[ext_idx], mutated])
            return Population(X, problem.evaluate(X, t_new), t_new)
        return expand_ps(ps, dirs, cfg, problem, t_new, rng, n_out)
    return contract_ps(ps, problem, t_new, variation, rng, n_out)
