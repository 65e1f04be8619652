import numpy as np
import pytest

from ktdmoea.core import (
    dominates,
    extreme_points,
    make_rng,
    nondominated_mask,
    nondominated_sort,
    not_dominated_by,
    rand_open_closed,
)


def brute_force_fronts(F):
    """Independent oracle: repeated O(n^2 m) pairwise scans."""
    remaining = list(range(len(F)))
    fronts = []
    while remaining:
        front = []
        for i in remaining:
            dominated = any(dominates(F[j], F[i]) for j in remaining if j != i)
            if not dominated:
                front.append(i)
        fronts.append(front)
        remaining = [i for i in remaining if i not in front]
    return fronts


def test_dominates_strict_improvement():
    assert dominates((1, 2), (2, 3))


def test_dominates_identity_false():
    assert not dominates((1, 2), (1, 2))


def test_dominates_incomparable():
    assert not dominates((1, 3), (2, 2))
    assert not dominates((2, 2), (1, 3))


def test_dominates_length_mismatch():
    with pytest.raises(ValueError):
        dominates((1, 2), (1, 2, 3))


def test_dominance_properties_random_triples(rng):
    # irreflexive, asymmetric, transitive over many random triples
    for _ in range(500):
        a, b, c = rng.integers(0, 4, size=(3, 3)).astype(float)
        assert not dominates(a, a)
        if dominates(a, b):
            assert not dominates(b, a)
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


def test_sort_simple():
    F = np.array([[1, 2], [2, 1], [3, 3]], dtype=float)
    fronts = nondominated_sort(F)
    assert [sorted(f.tolist()) for f in fronts] == [[0, 1], [2]]


def test_sort_singleton():
    assert [f.tolist() for f in nondominated_sort(np.array([[1.0, 1.0]]))] == [[0]]


def test_sort_empty():
    assert nondominated_sort(np.empty((0, 2))) == []


def test_sort_matches_brute_force(rng):
    for _ in range(40):
        F = rng.random((20, 3))
        got = [sorted(f.tolist()) for f in nondominated_sort(F)]
        want = [sorted(f) for f in brute_force_fronts(F)]
        assert got == want


def test_sort_front_properties(rng):
    F = rng.integers(0, 5, size=(60, 3)).astype(float)
    fronts = nondominated_sort(F)
    flat = np.concatenate(fronts)
    assert sorted(flat.tolist()) == list(range(len(F)))  # partition
    for front in fronts:
        for i in front:
            for j in front:
                assert not dominates(F[i], F[j])


def test_nondominated_mask_consistent(rng):
    F = rng.random((30, 2))
    mask = nondominated_mask(F)
    assert sorted(np.where(mask)[0].tolist()) == sorted(nondominated_sort(F)[0].tolist())


def test_not_dominated_by(rng):
    F = rng.random((25, 3))
    G = rng.random((15, 3))
    mask = not_dominated_by(F, G)
    for i in range(len(F)):
        expected = not any(dominates(g, F[i]) for g in G)
        assert mask[i] == expected


def test_extreme_points_two_corners():
    F = np.array([[0.0, 1.0], [1.0, 0.0]])
    idx = extreme_points(F)
    assert idx.tolist() == [1, 0]


def test_extreme_points_singleton():
    F = np.array([[0.5, 0.5]])
    assert extreme_points(F).tolist() == [0, 0]


def test_extreme_points_matches_column_scan(rng):
    F = rng.random((50, 3))
    idx = extreme_points(F)
    for j in range(3):
        best = max(range(50), key=lambda i: (F[i, j], -i))
        assert idx[j] == best


def test_extreme_points_tie_lowest_index():
    F = np.array([[1.0, 0.0], [1.0, 0.5], [0.0, 0.5]])
    assert extreme_points(F)[0] == 0  # both rows 0 and 1 maximize f1


def test_rng_replay_identical():
    a, b = make_rng(99), make_rng(99)
    assert np.array_equal(a.random(1000), b.random(1000))


def test_rand_open_closed_interval():
    r = rand_open_closed(make_rng(1), 100000)
    assert (r > 0).all() and (r <= 1).all()
