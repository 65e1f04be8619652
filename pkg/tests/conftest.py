import numpy as np
import pytest

from ktdmoea.problems.base import ObjectiveFamily


class BoxFamily(ObjectiveFamily):
    """Objectives are the first m decision coordinates; handy for geometric
    transfer tests because objective and decision space coincide."""

    def __init__(self, n=2):
        self.n = n
        self.name = "box"
        self.lower = np.zeros(n)
        self.upper = np.ones(n)

    def evaluate(self, X, m):
        return X[:, :m].copy()


class RadialFamily(ObjectiveFamily):
    """Every objective equals the squared distance to the box center, so the
    exact center dominates everything else."""

    def __init__(self, n=2):
        self.n = n
        self.name = "radial"
        self.lower = np.zeros(n)
        self.upper = np.ones(n)

    def evaluate(self, X, m):
        d = ((X - 0.5) ** 2).sum(axis=1)
        return np.tile(d[:, None], (1, m))


@pytest.fixture(scope="session")
def pf_cache(tmp_path_factory):
    return tmp_path_factory.mktemp("pf_cache")


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)
