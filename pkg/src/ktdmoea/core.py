"""Foundational value types, Pareto dominance and the shared randomness contract.

Everything here works on plain numpy arrays: a decision vector is a 1-D float
array of length n, an objective vector a 1-D float array whose length tracks
the environment's objective count, and a set of either is a 2-D array with one
row per member. All problems are minimized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Array = np.ndarray


def make_rng(seed: int) -> np.random.Generator:
    """One random stream per independent run; equal seeds replay bit-exactly."""
    return np.random.default_rng(seed)


def rand_open_closed(rng: np.random.Generator, size=None):
    """Uniform draw in the half-open interval (0, 1]."""
    return 1.0 - rng.random(size)


@dataclass(frozen=True)
class Individual:
    """A decision vector paired with its objectives and the environment index
    it was evaluated in. Objectives are stale as soon as the environment
    changes and must be recomputed, never truncated or padded."""

    x: Array
    f: Array
    eval_time: int


@dataclass
class Population:
    """Ordered multiset of solutions, stored row-wise.

    Invariant: every member was evaluated in the same environment ``t``, so
    ``f`` has a single consistent column count.
    """

    x: Array  # (size, n) decision vectors
    f: Array  # (size, m) objective vectors
    t: int  # environment index of evaluation

    def __len__(self) -> int:
        return int(self.x.shape[0])

    def member(self, i: int) -> Individual:
        return Individual(self.x[i].copy(), self.f[i].copy(), self.t)

    def copy(self) -> "Population":
        return Population(self.x.copy(), self.f.copy(), self.t)


def dominates(a, b) -> bool:
    """Pareto dominance for minimization: a <= b everywhere and < somewhere."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"objective vectors differ in length: {a.shape} vs {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def dominance_matrix(F: Array) -> Array:
    """Boolean matrix where entry (i, j) is True iff row i dominates row j."""
    F = np.asarray(F, dtype=float)
    le = (F[:, None, :] <= F[None, :, :]).all(axis=2)
    lt = (F[:, None, :] < F[None, :, :]).any(axis=2)
    return le & lt


def nondominated_mask(F: Array) -> Array:
    """Mask of rows dominated by no other row."""
    F = np.asarray(F, dtype=float)
    if F.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return ~dominance_matrix(F).any(axis=0)


def not_dominated_by(F: Array, G: Array) -> Array:
    """Mask over rows of F that no row of G dominates."""
    F = np.asarray(F, dtype=float)
    G = np.asarray(G, dtype=float)
    if len(G) == 0:
        return np.ones(len(F), dtype=bool)
    le = (G[:, None, :] <= F[None, :, :]).all(axis=2)
    lt = (G[:, None, :] < F[None, :, :]).any(axis=2)
    return ~(le & lt).any(axis=0)


def nondominated_sort(F: Array) -> list[Array]:
    """Partition row indices into successive nondominated fronts.

    Front 0 holds the rows dominated by nobody; front k+1 holds rows dominated
    only by members of fronts <= k. Returns an empty list for empty input.
    """
    F = np.asarray(F, dtype=float)
    n = F.shape[0]
    if n == 0:
        return []
    dom = dominance_matrix(F)
    counts = dom.sum(axis=0).astype(int)  # dominators remaining per row
    assigned = np.zeros(n, dtype=bool)
    fronts: list[Array] = []
    while not assigned.all():
        current = np.where((counts == 0) & ~assigned)[0]
        fronts.append(current)
        assigned[current] = True
        counts -= dom[current].sum(axis=0).astype(int)
    return fronts


def extreme_points(F: Array) -> Array:
    """Index of the row maximizing each objective; ties go to the lowest index."""
    F = np.asarray(F, dtype=float)
    if F.shape[0] == 0:
        raise ValueError("extreme_points of an empty set")
    return np.argmax(F, axis=0)
