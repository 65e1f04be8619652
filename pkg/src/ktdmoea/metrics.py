"""Quality indicators: hypervolume, generational distance, maximum spread.

Hypervolume is exact (dimension sweep) for two and three objectives and a
seeded Monte Carlo estimate above that, so indicator noise is reproducible.
The harness normalizes objectives by the true-front nadir before hypervolume
so values stay comparable across objective counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Array
from .problems.reference import ReferenceFront

PHASE_FIRST = "first_gen_after_change"
PHASE_LAST = "last_gen_before_change"

DEFAULT_MC_SAMPLES = 100_000
HV_REFERENCE_OFFSET = 1.1


@dataclass(frozen=True)
class MetricSnapshot:
    """Indicator values for one solution set at one protocol phase."""

    t: int
    phase: str
    generation: int
    objective_count: int
    hv: float
    gd: float
    ms: float
    seed: int


def _filter_dominating(points: Array, ref_point: Array) -> Array:
    """Keep points that dominate the reference point; others add no volume."""
    points = np.asarray(points, dtype=float)
    ref_point = np.asarray(ref_point, dtype=float)
    if points.ndim != 2 or points.shape[1] != ref_point.shape[0]:
        raise ValueError("points and reference point disagree on objective count")
    keep = (points <= ref_point).all(axis=1) & (points < ref_point).any(axis=1)
    return points[keep]


def _hv2d(points: Array, ref_point: Array) -> float:
    order = np.argsort(points[:, 0], kind="stable")
    pts = points[order]
    total = 0.0
    best_f2 = ref_point[1]
    for f1, f2 in pts:
        if f2 < best_f2:
            total += (ref_point[0] - f1) * (best_f2 - f2)
            best_f2 = f2
    return total


def _hv3d(points: Array, ref_point: Array) -> float:
    levels = np.unique(points[:, 2])
    total = 0.0
    for i, z in enumerate(levels):
        height = (levels[i + 1] - z) if i + 1 < len(levels) else (ref_point[2] - z)
        if height <= 0:
            continue
        active = points[points[:, 2] <= z][:, :2]
        total += _hv2d(active, ref_point[:2]) * height
    return total


def hypervolume_exact(points: Array, ref_point: Array) -> float:
    """Lebesgue measure of the union of boxes [point, ref] for m <= 3."""
    pts = _filter_dominating(points, ref_point)
    if len(pts) == 0:
        return 0.0
    m = pts.shape[1]
    if m == 2:
        return _hv2d(pts, np.asarray(ref_point, dtype=float))
    if m == 3:
        return _hv3d(pts, np.asarray(ref_point, dtype=float))
    raise ValueError("exact hypervolume implemented for 2 or 3 objectives only")


def hypervolume_monte_carlo(points: Array, ref_point: Array,
                            n_samples: int = DEFAULT_MC_SAMPLES,
                            seed: int = 0) -> float:
    """Seeded Monte Carlo hypervolume over the box [min(points), ref]."""
    pts = _filter_dominating(points, ref_point)
    if len(pts) == 0:
        return 0.0
    ref_point = np.asarray(ref_point, dtype=float)
    lower = pts.min(axis=0)
    box = np.prod(ref_point - lower)
    rng = np.random.default_rng(seed)
    hits = 0
    chunk = 4096
    remaining = n_samples
    while remaining > 0:
        batch = min(chunk, remaining)
        samples = rng.uniform(lower, ref_point, size=(batch, pts.shape[1]))
        covered = (pts[None, :, :] <= samples[:, None, :]).all(axis=2).any(axis=1)
        hits += int(covered.sum())
        remaining -= batch
    return box * hits / n_samples


def hypervolume(points: Array, ref_point: Array,
                mc_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0) -> float:
    """Exact sweep up to three objectives, Monte Carlo beyond."""
    points = np.asarray(points, dtype=float)
    if points.shape[1] <= 3:
        return hypervolume_exact(points, ref_point)
    return hypervolume_monte_carlo(points, ref_point, mc_samples, seed)


def generational_distance(points: Array, reference: ReferenceFront | Array) -> float:
    """sqrt(sum of squared nearest-reference distances) / number of points."""
    points = np.asarray(points, dtype=float)
    ref = reference.points if isinstance(reference, ReferenceFront) else np.asarray(reference, dtype=float)
    if len(points) == 0:
        raise ValueError("generational distance of an empty set is undefined")
    if len(ref) == 0:
        raise ValueError("empty reference front")
    d_min_sq = np.empty(len(points))
    chunk = 1024
    for start in range(0, len(points), chunk):
        block = points[start:start + chunk]
        diff = block[:, None, :] - ref[None, :, :]
        d_min_sq[start:start + chunk] = (diff * diff).sum(axis=2).min(axis=1)
    return float(np.sqrt(d_min_sq.sum()) / len(points))


def maximum_spread(points: Array, reference: ReferenceFront | Array) -> float:
    """Reference-bounded extent coverage in [0, 1]; 1 means the solution set
    spans the full true extent of every objective.

    Degenerate reference extents are excluded from the mean with a warning.
    """
    points = np.asarray(points, dtype=float)
    ref = reference.points if isinstance(reference, ReferenceFront) else np.asarray(reference, dtype=float)
    if len(ref) == 0:
        raise ValueError("empty reference front")
    ref_lo, ref_hi = ref.min(axis=0), ref.max(axis=0)
    span = ref_hi - ref_lo
    ok = span > 1e-14
    if not ok.all():
        import warnings

        warnings.warn("degenerate reference extent; objective excluded from spread")
    if not ok.any():
        raise ValueError("all reference extents degenerate")
    f_lo, f_hi = points.min(axis=0), points.max(axis=0)
    overlap = np.minimum(f_hi, ref_hi) - np.maximum(f_lo, ref_lo)
    ratio = np.clip(overlap[ok] / span[ok], 0.0, None)
    return float(np.sqrt(np.mean(ratio ** 2)))


def snapshot_metrics(F: Array, reference: ReferenceFront, t: int, phase: str,
                     generation: int, seed: int,
                     mc_samples: int = DEFAULT_MC_SAMPLES) -> MetricSnapshot:
    """Protocol measurement of a solution set against its true front.

    Hypervolume uses nadir-normalized objectives with the reference point at
    1.1 per objective; the Monte Carlo seed is fixed per snapshot.
    """
    F = np.asarray(F, dtype=float)
    nadir = reference.nadir
    scale = np.where(np.abs(nadir) > 1e-14, nadir, 1.0)
    ref_point = np.full(reference.m, HV_REFERENCE_OFFSET)
    hv = hypervolume(F / scale, ref_point, mc_samples=mc_samples, seed=seed)
    gd = generational_distance(F, reference)
    ms = maximum_spread(F, reference)
    return MetricSnapshot(t=t, phase=phase, generation=generation,
                          objective_count=reference.m, hv=hv, gd=gd, ms=ms,
                          seed=seed)
