"""Analytic optimal-front samplers with a CSV disk cache.

Every supported problem has closed-form front geometry: a linear simplex, the
unit hypersphere, or a shape-function image. Samplers draw position parameters
(a uniform grid for two objectives, a Halton sequence above that, always
including the corner parameter combinations so per-objective extremes are
exact), map them through the geometry, and keep a mutually nondominated set.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.stats import qmc

from ..core import Array
from .dtlz import simplex_front, sphere_front
from .wfg import wfg_front_points

CACHE_ENV_VAR = "KTDMOEA_CACHE_DIR"
DEFAULT_CACHE_DIR = "pf_cache"

# Only the variants whose last shape is non-monotone produce dominated points
# on the shape image and need filtering.
_NEEDS_FILTER = {"WFG1", "WFG2"}


@dataclass(frozen=True)
class ReferenceFront:
    """Sampled true front used by the quality indicators."""

    points: Array  # (count, m)

    def __len__(self) -> int:
        return int(self.points.shape[0])

    @property
    def m(self) -> int:
        return int(self.points.shape[1])

    @property
    def ideal(self) -> Array:
        return self.points.min(axis=0)

    @property
    def nadir(self) -> Array:
        return self.points.max(axis=0)


def _corner_params(dim: int) -> Array:
    grids = np.meshgrid(*([np.array([0.0, 1.0])] * dim), indexing="ij")
    return np.column_stack([g.ravel() for g in grids])


def _position_params(m: int, count: int) -> Array:
    """A uniform grid for two objectives (its endpoints are the corners),
    otherwise corner combinations followed by Halton points."""
    dim = m - 1
    if dim == 1:
        return np.linspace(0.0, 1.0, max(count, 2))[:, None]
    corners = _corner_params(dim)
    fill = max(count - len(corners), 0)
    body = qmc.Halton(d=dim, scramble=False).random(fill) if fill else np.zeros((0, dim))
    return np.vstack([corners, body])


def _nondominated_subset(points: Array) -> Array:
    """Mask of mutually nondominated rows, computed in row chunks."""
    n = len(points)
    keep = np.ones(n, dtype=bool)
    chunk = 512
    for start in range(0, n, chunk):
        block = points[start:start + chunk]
        le = (points[:, None, :] <= block[None, :, :]).all(axis=2)
        lt = (points[:, None, :] < block[None, :, :]).any(axis=2)
        keep[start:start + chunk] = ~(le & lt).any(axis=0)
    return keep


def _front_image(name: str, m: int, params: Array) -> Array:
    if name == "F1":
        return simplex_front(params)
    if name in ("F2", "F3", "F4"):
        return sphere_front(params)
    if name.startswith("WFG"):
        return wfg_front_points(int(name[3:]), m, params)
    raise ValueError(f"no front geometry known for problem {name!r}")


def sample_true_pf(name: str, m: int, count: int) -> Array:
    """Deterministically sample ``count`` points from the true front."""
    if count < 1:
        raise ValueError("count must be positive")
    raw = count
    for _ in range(8):
        points = _front_image(name, m, _position_params(m, raw))
        if name in _NEEDS_FILTER:
            points = points[_nondominated_subset(points)]
        if len(points) >= count:
            return points[:count]
        raw *= 2
    return points  # pragma: no cover - filter never discards this much


def _cache_path(cache_dir: str | Path, name: str, m: int, count: int) -> Path:
    return Path(cache_dir) / f"{name}_m{m}_n{count}.csv"


def resolve_cache_dir(cache_dir: str | Path | None = None) -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    return Path(os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR))


def write_front_csv(path: Path, points: Array) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"f{i + 1}" for i in range(points.shape[1])])
        for row in points:
            writer.writerow([format(float(v), ".17g") for v in row])


def read_front_csv(path: Path) -> Array:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        next(reader)  # header
        rows = [[float(v) for v in row] for row in reader]
    return np.asarray(rows, dtype=float)


def reference_front(name: str, m: int, count: int,
                    cache_dir: str | Path | None = None) -> ReferenceFront:
    """Load the cached front for (problem, m, count), sampling it on a miss."""
    path = _cache_path(resolve_cache_dir(cache_dir), name, m, count)
    if path.exists():
        return ReferenceFront(read_front_csv(path))
    points = sample_true_pf(name, m, count)
    write_front_csv(path, points)
    return ReferenceFront(points)
