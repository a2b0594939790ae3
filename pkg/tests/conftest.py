import numpy as np
import pytest

from stablecut import Cut, Instance


def _edges(n, pairs, w=1.0):
    W = np.zeros((n, n))
    for a, b in pairs:
        W[a, b] = W[b, a] = w
    return W


@pytest.fixture
def c4():
    """Unit 4-cycle 0-1-2-3-0; maximum cut {0,2}|{1,3} of weight 4."""
    return Instance(_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


@pytest.fixture
def c4_maxcut():
    return Cut([True, False, True, False])


@pytest.fixture
def k3():
    return Instance(np.ones((3, 3)) - np.eye(3))


@pytest.fixture
def k22_heavy():
    """Complete graph on 4 vertices: the cut {0,2}|{1,3} has edges of weight 10,
    the two non-cut pairs have weight 1.  10-stable with a unique optimum."""
    W = _edges(4, [(0, 1), (0, 3), (1, 2), (2, 3)], 10.0)
    W += _edges(4, [(0, 2), (1, 3)], 1.0)
    return Instance(W)


@pytest.fixture
def pair_metric():
    """Four points: two pairs at distance 1, everything across at distance 2."""
    W = np.full((4, 4), 2.0)
    np.fill_diagonal(W, 0.0)
    W[0, 1] = W[1, 0] = 1.0
    W[2, 3] = W[3, 2] = 1.0
    return Instance(W)


def random_instance(rng, n, connected_retry=20):
    """Random dense symmetric instance with positive weights."""
    for _ in range(connected_retry):
        W = np.triu(rng.random((n, n)), 1)
        W += W.T
        if (W.sum(axis=1) > 0).all():
            return Instance(W)
    raise AssertionError("could not draw a connected instance")


def random_cut(rng, n):
    side = np.zeros(n, dtype=bool)
    k = rng.integers(1, n)
    side[rng.permutation(n)[:k]] = True
    return Cut(side)
