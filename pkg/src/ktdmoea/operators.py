"""Variation operators and the weight-vector machinery used for density
estimation (subregion association) and decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Array

_EPS = 1e-14


@dataclass(frozen=True)
class VariationConfig:
    """Simulated binary crossover and polynomial mutation parameters."""

    p_c: float = 1.0
    eta_c: float = 20.0
    p_m: float = 0.1
    eta_m: float = 20.0

    def __post_init__(self):
        if not (0.0 <= self.p_c <= 1.0 and 0.0 <= self.p_m <= 1.0):
            raise ValueError("crossover/mutation probabilities must lie in [0, 1]")
        if self.eta_c <= 0 or self.eta_m <= 0:
            raise ValueError("distribution indices must be positive")

    @classmethod
    def for_dimension(cls, n: int, p_c: float = 1.0, eta_c: float = 20.0,
                      eta_m: float = 20.0) -> "VariationConfig":
        """Defaults with the customary per-variable mutation rate 1/n."""
        return cls(p_c=p_c, eta_c=eta_c, p_m=1.0 / n, eta_m=eta_m)


def sbx_batch(A: Array, B: Array, lower: Array, upper: Array,
              cfg: VariationConfig, rng: np.random.Generator) -> tuple[Array, Array]:
    """Simulated binary crossover on paired parent rows.

    Each pair is crossed with probability p_c; within a crossed pair each
    variable participates with probability 0.5. Children are clamped to the
    per-variable bounds. Identical parents yield identical children.
    """
    A = np.array(A, dtype=float, copy=True)
    B = np.array(B, dtype=float, copy=True)
    pair_on = rng.random((A.shape[0], 1)) <= cfg.p_c
    var_on = rng.random(A.shape) <= 0.5
    u = rng.random(A.shape)
    exponent = 1.0 / (cfg.eta_c + 1.0)
    beta = np.where(
        u <= 0.5,
        np.power(2.0 * u, exponent),
        np.power(1.0 / np.maximum(2.0 * (1.0 - u), _EPS), exponent),
    )
    c1 = 0.5 * ((1.0 + beta) * A + (1.0 - beta) * B)
    c2 = 0.5 * ((1.0 - beta) * A + (1.0 + beta) * B)
    apply = pair_on & var_on
    child1 = np.where(apply, c1, A)
    child2 = np.where(apply, c2, B)
    np.clip(child1, lower, upper, out=child1)
    np.clip(child2, lower, upper, out=child2)
    return child1, child2


def sbx_crossover(a: Array, b: Array, lower: Array, upper: Array,
                  cfg: VariationConfig, rng: np.random.Generator) -> tuple[Array, Array]:
    """Single-pair convenience wrapper around :func:`sbx_batch`."""
    c1, c2 = sbx_batch(a[None, :], b[None, :], lower, upper, cfg, rng)
    return c1[0], c2[0]


def mutate_batch(X: Array, lower: Array, upper: Array,
                 cfg: VariationConfig, rng: np.random.Generator) -> Array:
    """Polynomial mutation applied independently per variable with rate p_m.

    Bounded form: the perturbation distribution is squeezed so results stay
    within [lower, upper] (plus a final clamp for float safety).
    """
    X = np.array(X, dtype=float, copy=True)
    span = np.asarray(upper, dtype=float) - np.asarray(lower, dtype=float)
    mask = rng.random(X.shape) <= cfg.p_m
    u = rng.random(X.shape)
    d1 = (X - lower) / span
    d2 = (upper - X) / span
    power = 1.0 / (cfg.eta_m + 1.0)
    low_side = np.power(
        2.0 * u + (1.0 - 2.0 * u) * np.power(1.0 - d1, cfg.eta_m + 1.0), power
    ) - 1.0
    high_side = 1.0 - np.power(
        2.0 * (1.0 - u) + 2.0 * (u - 0.5) * np.power(1.0 - d2, cfg.eta_m + 1.0), power
    )
    delta = np.where(u < 0.5, low_side, high_side)
    out = np.where(mask, X + delta * span, X)
    np.clip(out, lower, upper, out=out)
    return out


def polynomial_mutation(x: Array, lower: Array, upper: Array,
                        cfg: VariationConfig, rng: np.random.Generator) -> Array:
    """Single-vector convenience wrapper around :func:`mutate_batch`."""
    return mutate_batch(x[None, :], lower, upper, cfg, rng)[0]


def das_dennis_weights(m: int, h: int) -> Array:
    """All simplex-lattice points with spacing 1/h in m dimensions.

    The count is C(h + m - 1, m - 1); rows are emitted in lexicographic order
    of the integer compositions, so the set is deterministic.
    """
    if m < 2 or h < 1:
        raise ValueError("need m >= 2 and h >= 1")
    rows: list[list[int]] = []

    def compose(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            rows.append(prefix + [remaining])
            return
        for v in range(remaining + 1):
            compose(prefix + [v], remaining - v, slots - 1)

    compose([], h, m)
    return np.asarray(rows, dtype=float) / h


def two_layer_weights(m: int, h_boundary: int, h_inner: int) -> Array:
    """Boundary lattice plus an inner lattice shrunk halfway to the centroid."""
    boundary = das_dennis_weights(m, h_boundary)
    if h_inner < 1:
        return boundary
    inner = das_dennis_weights(m, h_inner) * 0.5 + 0.5 / m
    combined = np.vstack([boundary, inner])
    _, keep = np.unique(np.round(combined, 12), axis=0, return_index=True)
    return combined[np.sort(keep)]


def simplex_lattice_size(m: int, h: int) -> int:
    return math.comb(h + m - 1, m - 1)


def weight_vectors_for(m: int, count: int) -> Array:
    """Smallest evenly spread weight set with at least ``count`` vectors.

    A single lattice layer suffices up to five objectives; beyond that the
    lattice grows too coarsely, so a boundary+inner two-layer design is
    searched instead.
    """
    if m <= 5:
        h = 1
        while simplex_lattice_size(m, h) < count:
            h += 1
        return das_dennis_weights(m, h)
    best = None
    for h1 in range(1, 10):
        size1 = simplex_lattice_size(m, h1)
        for h2 in range(0, h1 + 1):
            size = size1 + (simplex_lattice_size(m, h2) if h2 >= 1 else 0)
            if size >= count and (best is None or size < best[0]):
                best = (size, h1, h2)
    if best is None:
        raise ValueError(f"no two-layer design found for m={m}, count={count}")
    _, h1, h2 = best
    if h2 == 0:
        return das_dennis_weights(m, h1)
    return two_layer_weights(m, h1, h2)


def normalize_objectives(F: Array, lo: Array | None = None,
                         hi: Array | None = None) -> Array:
    """Scale objectives to [0, 1] per column; degenerate columns map to 0."""
    F = np.asarray(F, dtype=float)
    lo = F.min(axis=0) if lo is None else np.asarray(lo, dtype=float)
    hi = F.max(axis=0) if hi is None else np.asarray(hi, dtype=float)
    span = hi - lo
    out = np.zeros_like(F)
    ok = span > _EPS
    out[:, ok] = (F[:, ok] - lo[ok]) / span[ok]
    return out


def associate_subregions(F: Array, weights: Array,
                         bounds: tuple[Array, Array] | None = None) -> Array:
    """Assign each objective vector to the weight ray it is closest to.

    Closeness is perpendicular distance from the normalized objective vector
    to the ray through the weight vector. ``bounds`` supplies the (lo, hi)
    normalization when the caller normalizes over a larger combined set.
    """
    F = np.asarray(F, dtype=float)
    if bounds is None:
        Fn = normalize_objectives(F)
    else:
        Fn = normalize_objectives(F, bounds[0], bounds[1])
    W = np.asarray(weights, dtype=float)
    unit = W / np.linalg.norm(W, axis=1, keepdims=True)
    proj = Fn @ unit.T
    sq = np.maximum((Fn * Fn).sum(axis=1)[:, None] - proj * proj, 0.0)
    return np.argmin(sq, axis=1)
