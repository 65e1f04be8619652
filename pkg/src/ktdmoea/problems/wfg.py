"""Scalable walking-fish-group benchmark family (WFG1-WFG9).

Each problem composes transition transformations (shift, bias, reduction) with
a shape layer. Variables split into k position parameters and l distance
parameters; variable i ranges over [0, 2i] and objective m is scaled by 2m.

The position block k is chosen divisible by m-1 for every supported objective
count so the same decision space serves all environments of a run (60 is the
smallest such block of useful size). At the optimum every transformed distance
parameter is zero and the objectives land exactly on the shape image.
"""

from __future__ import annotations

import numpy as np

from ..core import Array
from .base import ObjectiveFamily

DEFAULT_K = 60
DEFAULT_L = 10


def _clip01(y: Array) -> Array:
    return np.clip(y, 0.0, 1.0)


# --- transition transformations ---------------------------------------------

def shift_linear(y, A=0.35):
    return _clip01(np.fabs(y - A) / np.fabs(np.floor(A - y) + A))


def shift_deceptive(y, A=0.35, B=0.005, C=0.05):
    tmp1 = np.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    tmp2 = np.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return _clip01(1.0 + (np.fabs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B))


def shift_multimodal(y, A, B, C):
    tmp1 = np.fabs(y - C) / (2.0 * (np.floor(C - y) + C))
    tmp2 = (4.0 * A + 2.0) * np.pi * (0.5 - tmp1)
    return _clip01((1.0 + np.cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0))


def bias_flat(y, A, B, C):
    out = (A + np.minimum(0.0, np.floor(y - B)) * (A * (B - y) / B)
           - np.minimum(0.0, np.floor(C - y)) * ((1.0 - A) * (y - C) / (1.0 - C)))
    return _clip01(out)


def bias_poly(y, alpha):
    return _clip01(np.power(y, alpha))


def bias_param(y, u, A, B, C):
    v = A - (1.0 - 2.0 * u) * np.fabs(np.floor(0.5 - u) + A)
    return _clip01(np.power(y, B + (C - B) * v))


def reduce_weighted(y, w):
    return _clip01(y @ w / w.sum())


def reduce_mean(y):
    return _clip01(y.mean(axis=1))


def reduce_nonsep(y, A):
    n_cols = y.shape[1]
    num = np.zeros(y.shape[0])
    for j in range(n_cols):
        num += y[:, j]
        for k in range(A - 1):
            num += np.fabs(y[:, j] - y[:, (1 + j + k) % n_cols])
    half = np.ceil(A / 2.0)
    denom = n_cols * half * (1.0 + 2.0 * A - 2.0 * half) / A
    return _clip01(num / denom)


# --- shape functions ---------------------------------------------------------

def shape_linear(P, m):
    M = P.shape[1] + 1
    if m == M:
        return 1.0 - P[:, 0]
    out = np.prod(P[:, : M - m], axis=1)
    if m > 1:
        out = out * (1.0 - P[:, M - m])
    return out


def shape_convex(P, m):
    M = P.shape[1] + 1
    if m == M:
        return 1.0 - np.sin(0.5 * np.pi * P[:, 0])
    out = np.prod(1.0 - np.cos(0.5 * np.pi * P[:, : M - m]), axis=1)
    if m > 1:
        out = out * (1.0 - np.sin(0.5 * np.pi * P[:, M - m]))
    return out


def shape_concave(P, m):
    M = P.shape[1] + 1
    if m == M:
        return np.cos(0.5 * np.pi * P[:, 0])
    out = np.prod(np.sin(0.5 * np.pi * P[:, : M - m]), axis=1)
    if m > 1:
        out = out * np.cos(0.5 * np.pi * P[:, M - m])
    return out


def shape_mixed(x1, A=5.0, alpha=1.0):
    aux = 2.0 * A * np.pi
    return np.power(1.0 - x1 - np.cos(aux * x1 + 0.5 * np.pi) / aux, alpha)


def shape_disconnected(x1, alpha=1.0, beta=1.0, A=5.0):
    return 1.0 - np.power(x1, alpha) * np.cos(A * np.pi * np.power(x1, beta)) ** 2


def _shapes_for(kind: int, P: Array, m: int) -> Array:
    if kind == 1:
        cols = [shape_convex(P, j) for j in range(1, m)]
        cols.append(shape_mixed(P[:, 0]))
    elif kind == 2:
        cols = [shape_convex(P, j) for j in range(1, m)]
        cols.append(shape_disconnected(P[:, 0]))
    elif kind == 3:
        cols = [shape_linear(P, j) for j in range(1, m + 1)]
    else:
        cols = [shape_concave(P, j) for j in range(1, m + 1)]
    return np.column_stack(cols)


def _degeneracy(kind: int, m: int) -> Array:
    A = np.ones(m - 1)
    if kind == 3:
        A[1:] = 0.0
    return A


def _post(T: Array, A: Array) -> Array:
    """Turn the reduced transition vector into underlying shape parameters."""
    last = T[:, -1]
    cols = [np.maximum(last, A[i]) * (T[:, i] - 0.5) + 0.5 for i in range(T.shape[1] - 1)]
    cols.append(last)
    return np.column_stack(cols)


class WFGFamily(ObjectiveFamily):
    """One of WFG1-WFG9 with configurable position/distance split."""

    def __init__(self, kind: int, k: int = DEFAULT_K, l: int = DEFAULT_L):
        if kind not in range(1, 10):
            raise ValueError(f"unknown variant WFG{kind}")
        if kind in (2, 3) and l % 2 != 0:
            raise ValueError("WFG2/WFG3 need an even number of distance parameters")
        self.kind = kind
        self.k = k
        self.l = l
        self.n = k + l
        self.name = f"WFG{kind}"
        self.lower = np.zeros(self.n)
        self.upper = 2.0 * np.arange(1, self.n + 1, dtype=float)

    def _position_groups(self, y: Array, m: int) -> list[Array]:
        if self.k % (m - 1) != 0:
            raise ValueError(f"position block {self.k} not divisible by {m - 1}")
        gap = self.k // (m - 1)
        return [y[:, i * gap:(i + 1) * gap] for i in range(m - 1)]

    def evaluate(self, X: Array, m: int) -> Array:
        k, n = self.k, self.n
        y = X / self.upper

        kind = self.kind
        if kind == 1:
            y[:, k:] = shift_linear(y[:, k:])
            y[:, k:] = bias_flat(y[:, k:], 0.8, 0.75, 0.85)
            y = bias_poly(y, 0.02)
            w = 2.0 * np.arange(1, n + 1, dtype=float)
            gap = self.k // (m - 1)
            cols = [reduce_weighted(y[:, i * gap:(i + 1) * gap], w[i * gap:(i + 1) * gap])
                    for i in range(m - 1)]
            cols.append(reduce_weighted(y[:, k:], w[k:]))
            T = np.column_stack(cols)
        elif kind in (2, 3):
            y[:, k:] = shift_linear(y[:, k:])
            pairs = [reduce_nonsep(y[:, k + 2 * i:k + 2 * i + 2], 2)
                     for i in range(self.l // 2)]
            y = np.column_stack([y[:, :k]] + pairs)
            cols = [reduce_mean(g) for g in self._position_groups(y, m)]
            cols.append(reduce_mean(y[:, k:]))
            T = np.column_stack(cols)
        elif kind == 4:
            y = shift_multimodal(y, 30.0, 10.0, 0.35)
            T = self._sum_reduction(y, m)
        elif kind == 5:
            y = shift_deceptive(y, 0.35, 0.001, 0.05)
            T = self._sum_reduction(y, m)
        elif kind == 6:
            y[:, k:] = shift_linear(y[:, k:])
            gap = self.k // (m - 1)
            cols = [reduce_nonsep(g, gap) for g in self._position_groups(y, m)]
            cols.append(reduce_nonsep(y[:, k:], self.l))
            T = np.column_stack(cols)
        elif kind == 7:
            biased = [bias_param(y[:, i], reduce_mean(y[:, i + 1:]),
                                 0.98 / 49.98, 0.02, 50.0) for i in range(k)]
            y = np.column_stack(biased + [y[:, k:]])
            y[:, k:] = shift_linear(y[:, k:])
            T = self._sum_reduction(y, m)
        elif kind == 8:
            biased = [bias_param(y[:, i], reduce_mean(y[:, :i]),
                                 0.98 / 49.98, 0.02, 50.0) for i in range(k, n)]
            y = np.column_stack([y[:, :k]] + biased)
            y[:, k:] = shift_linear(y[:, k:])
            T = self._sum_reduction(y, m)
        else:  # kind == 9
            biased = [bias_param(y[:, i], reduce_mean(y[:, i + 1:]),
                                 0.98 / 49.98, 0.02, 50.0) for i in range(n - 1)]
            y = np.column_stack(biased + [y[:, -1]])
            y[:, :k] = shift_deceptive(y[:, :k], 0.35, 0.001, 0.05)
            y[:, k:] = shift_multimodal(y[:, k:], 30.0, 95.0, 0.35)
            gap = self.k // (m - 1)
            cols = [reduce_nonsep(g, gap) for g in self._position_groups(y, m)]
            cols.append(reduce_nonsep(y[:, k:], self.l))
            T = np.column_stack(cols)

        P = _post(T, _degeneracy(kind, m))
        H = _shapes_for(kind, P[:, :-1], m)
        S = 2.0 * np.arange(1, m + 1, dtype=float)
        return P[:, -1][:, None] + S * H

    def _sum_reduction(self, y: Array, m: int) -> Array:
        cols = [reduce_mean(g) for g in self._position_groups(y, m)]
        cols.append(reduce_mean(y[:, self.k:]))
        return np.column_stack(cols)


def wfg_front_points(kind: int, m: int, params: Array) -> Array:
    """Shape image at optimal distance for position parameters in [0,1]^(m-1).

    This is the attainable boundary; for the variants with non-monotone last
    shapes (WFG1, WFG2) the true front is its nondominated subset.
    """
    params = np.atleast_2d(np.asarray(params, dtype=float))
    T = np.column_stack([params, np.zeros(len(params))])
    P = _post(T, _degeneracy(kind, m))
    H = _shapes_for(kind, P[:, :-1], m)
    S = 2.0 * np.arange(1, m + 1, dtype=float)
    return S * H
