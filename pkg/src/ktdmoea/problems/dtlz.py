"""Scalable simplex/sphere benchmark family (F1-F4).

F1 has a linear front (sum f_i = 0.5 at the optimum g = 0), F2-F4 share the
unit hypersphere front. The decision dimension is fixed for the whole run and
sized for the largest supported objective count, so when the active count m is
smaller, the surplus position variables simply join the distance block: the
first m-1 variables parameterize the front, the remaining n-m+1 contribute to
the distance function g.

F1, F3 use the multimodal (100 k + ...) distance function, F2, F4 the
unimodal sphere; F4 additionally raises position variables to a high power,
which biases the density of solutions but leaves the front unchanged.
"""

from __future__ import annotations

import numpy as np

from ..core import Array
from .base import MAX_OBJECTIVES, ObjectiveFamily

_ALPHA_F4 = 100.0


def _g_multimodal(Xm: Array) -> Array:
    k = Xm.shape[1]
    z = Xm - 0.5
    return 100.0 * (k + (z * z - np.cos(20.0 * np.pi * z)).sum(axis=1))


def _g_sphere(Xm: Array) -> Array:
    z = Xm - 0.5
    return (z * z).sum(axis=1)


def _linear_objectives(P: Array, g: Array) -> Array:
    """f_i = 0.5 (1+g) * prod of leading position vars * (1 - next one)."""
    m = P.shape[1] + 1
    cols = []
    for i in range(m):
        prod = np.prod(P[:, : m - 1 - i], axis=1) if m - 1 - i > 0 else 1.0
        if i > 0:
            prod = prod * (1.0 - P[:, m - 1 - i])
        cols.append(0.5 * (1.0 + g) * prod)
    return np.column_stack(cols)


def _spherical_objectives(P: Array, g: Array) -> Array:
    """f_i = (1+g) * prod of cos terms * trailing sin term; unit sphere at g=0."""
    m = P.shape[1] + 1
    angles = P * (np.pi / 2.0)
    cos = np.cos(angles)
    sin = np.sin(angles)
    cols = []
    for i in range(m):
        prod = np.prod(cos[:, : m - 1 - i], axis=1) if m - 1 - i > 0 else np.ones(len(P))
        if i > 0:
            prod = prod * sin[:, m - 1 - i]
        cols.append((1.0 + g) * prod)
    return np.column_stack(cols)


class SimplexSphereFamily(ObjectiveFamily):
    """F1-F4 with n = MAX_OBJECTIVES + k - 1 and all variables in [0, 1]."""

    def __init__(self, kind: int, n_distance: int | None = None):
        if kind not in (1, 2, 3, 4):
            raise ValueError(f"unknown variant F{kind}")
        self.kind = kind
        k = n_distance if n_distance is not None else (5 if kind == 1 else 10)
        self.n = MAX_OBJECTIVES + k - 1
        self.name = f"F{kind}"
        self.lower = np.zeros(self.n)
        self.upper = np.ones(self.n)

    def evaluate(self, X: Array, m: int) -> Array:
        P = X[:, : m - 1]
        Xm = X[:, m - 1:]
        if self.kind in (1, 3):
            g = _g_multimodal(Xm)
        else:
            g = _g_sphere(Xm)
        if self.kind == 1:
            return _linear_objectives(P, g)
        if self.kind == 4:
            P = np.power(P, _ALPHA_F4)
        return _spherical_objectives(P, g)


def simplex_front(params: Array) -> Array:
    """Linear-front image of position parameters in [0,1]^(m-1); sums to 0.5."""
    return _linear_objectives(np.asarray(params, dtype=float), np.zeros(len(params)))


def sphere_front(params: Array) -> Array:
    """Unit-sphere front image of position parameters in [0,1]^(m-1)."""
    return _spherical_objectives(np.asarray(params, dtype=float), np.zeros(len(params)))
