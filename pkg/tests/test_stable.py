import math

import numpy as np
import pytest

import stablecut as sc
from stablecut.errors import ParameterError, PreconditionError, SizeLimitError
from stablecut.stable import sqrt_stability_threshold

from conftest import random_instance

INF = math.inf


# ---------------------------------------------------------------------------
# warm-up pair finder
# ---------------------------------------------------------------------------


def test_warmup_pair_traces(k22_heavy, c4):
    w = sc.find_same_side_pair_2n(k22_heavy)
    assert w.pair == (1, 3)
    assert w.evidence == {"first_edge": (0, 1), "second_edge": (0, 3)}

    # both argmax ties resolve to the lexicographically smallest edge
    w = sc.find_same_side_pair_2n(c4)
    assert w.pair == (1, 3)

    with pytest.raises(SizeLimitError):
        sc.find_same_side_pair_2n(sc.Instance([[0.0, 1.0], [1.0, 0.0]]))


def test_warmup_pairs_are_same_side_on_stable_instances():
    for i in range(30):
        n = (6, 8)[i % 2]
        planted = sc.gen_stable_bipartite_noise(n, 2.4 * n, seed=1000 + i)
        opt, _, _ = sc.brute_force_maxcut(planted.instance)
        w = sc.find_same_side_pair_2n(planted.instance)
        assert opt.side[w.pair[0]] == opt.side[w.pair[1]]
        assert sc.same_bipartition(sc.warmup_2n_solve(planted.instance), opt)


# ---------------------------------------------------------------------------
# sqrt-threshold pair finder: all three stages
# ---------------------------------------------------------------------------


def test_sqrt_pair_t1_branch(k22_heavy, c4):
    w = sc.find_same_side_pair_sqrt(k22_heavy, 8.0)
    assert w.kind == "t1-incident-pair" and w.pair == (1, 3)
    w = sc.find_same_side_pair_sqrt(c4, 8.0)
    assert w.kind == "t1-incident-pair" and w.pair == (1, 3)

    with pytest.raises(PreconditionError):
        sc.find_same_side_pair_sqrt(k22_heavy, 5.0)  # threshold at n=4 is 7


def test_sqrt_pair_t2_branch():
    # One very heavy edge (0,1) forms the T1 matching; the edge (0,2) stays
    # below both endpoint T1 thresholds but clears tau({0,1})/(gamma+1)
    # because the heavy edge cancels almost all of tau({0,1}).  The rest of
    # the graph is near-regular so nothing else triggers.
    n = 20
    W = np.zeros((n, n))
    others = range(3, n)
    for y in others:
        W[0, y] = W[y, 0] = 0.05
        W[1, y] = W[y, 1] = 0.05
        W[2, y] = W[y, 2] = 7.3
        for z in others:
            if y < z:
                W[y, z] = W[z, y] = 7.0
    W[0, 1] = W[1, 0] = 100.0
    W[0, 2] = W[2, 0] = 6.5
    W[1, 2] = W[2, 1] = 0.05
    inst = sc.Instance(W)
    gamma = sqrt_stability_threshold(n) + 0.5
    w = sc.find_same_side_pair_sqrt(inst, gamma)
    assert w.kind == "t2-pair"
    assert w.pair == (1, 2)
    assert w.evidence["t2_edge"] == (0, 2) and w.evidence["t1_edge"] == (0, 1)


def test_sqrt_pair_common_neighbor_branch():
    # Large uniform complete bipartite graph: every edge sits below the T1
    # threshold, so only the common-neighbor count can certify a pair, and
    # any pair it certifies must share a part.
    n = 50
    W = np.zeros((n, n))
    W[:25, 25:] = 1.0
    W[25:, :25] = 1.0
    inst = sc.Instance(W)
    w = sc.find_same_side_pair_sqrt(inst, sqrt_stability_threshold(n) + 1e-6)
    assert w.kind == "common-neighbor-pair"
    assert (w.pair[0] < 25) == (w.pair[1] < 25)
    assert w.evidence["common_weight"] > w.evidence["limit"]


def test_sqrt_pairs_are_same_side_on_stable_instances():
    for i in range(30):
        n = (8, 10, 12)[i % 3]
        threshold = sqrt_stability_threshold(n)
        planted = sc.gen_stable_bipartite_noise(n, 1.3 * threshold, seed=2000 + i)
        gamma = sc.cut_stability_gamma(planted.instance, planted.planted_cut)
        if not gamma > threshold:
            continue
        opt, _, _ = sc.brute_force_maxcut(planted.instance)
        w = sc.find_same_side_pair_sqrt(planted.instance, threshold + 1e-6)
        assert opt.side[w.pair[0]] == opt.side[w.pair[1]]


# ---------------------------------------------------------------------------
# full merging solvers
# ---------------------------------------------------------------------------


def test_sqrt_stable_solve(k22_heavy):
    opt, _, _ = sc.brute_force_maxcut(k22_heavy)
    assert sc.same_bipartition(sc.sqrt_stable_solve(k22_heavy, "auto"), opt)
    assert sc.same_bipartition(sc.sqrt_stable_solve(k22_heavy, 8.0), opt)

    planted = sc.gen_stable_bipartite_noise(12, 13.0, seed=2)
    assert sc.cut_stability_gamma(planted.instance, planted.planted_cut) \
        > sqrt_stability_threshold(12)
    opt, _, _ = sc.brute_force_maxcut(planted.instance)
    assert sc.same_bipartition(sc.sqrt_stable_solve(planted.instance, "auto"), opt)

    # bipartite instances are infinitely stable; parts are recovered at any size
    big = sc.gen_planted_partition(16, 1.0, 0.0, seed=0)
    assert sc.same_bipartition(sc.sqrt_stable_solve(big.instance, "auto"),
                               big.planted_cut)


def test_merging_preserves_stability_and_optimum():
    rng = np.random.default_rng(31)
    tested = 0
    while tested < 15:
        inst = random_instance(rng, int(rng.integers(5, 13)))
        opt, _, count = sc.brute_force_maxcut(inst)
        gamma = sc.cut_stability_gamma(inst, opt)
        if count != 1 or not gamma > 1.0:
            continue
        tested += 1
        same = np.flatnonzero(opt.side) if opt.side.sum() >= 2 else np.flatnonzero(~opt.side)
        u, v = int(same[0]), int(same[1])
        merged, mapping = sc.merge_vertices(inst, u, v)
        m_opt, _, m_count = sc.brute_force_maxcut(merged)
        assert m_count == 1
        lifted = sc.Cut(m_opt.side[mapping])
        assert sc.same_bipartition(lifted, opt)
        assert sc.cut_stability_gamma(merged, m_opt) >= gamma * (1 - 1e-9)


# ---------------------------------------------------------------------------
# spanning-tree solver
# ---------------------------------------------------------------------------


def test_spanning_tree_bipartite_always_exact(c4):
    for seed in range(20):
        cut = sc.spanning_tree_solve(c4, seed=seed, repetitions=1)
        assert sc.cut_weight(c4, cut) == 4.0


def test_spanning_tree_k3(k3):
    cut = sc.spanning_tree_solve(k3, seed=1, repetitions=10)
    assert sc.cut_weight(k3, cut) == 2.0


def test_spanning_tree_bound_values():
    assert sc.spanning_tree_success_bound(9.0, 10) == pytest.approx(0.9 ** 9)
    assert sc.spanning_tree_success_bound(INF, 7) == 1.0
    assert sc.spanning_tree_success_bound(1.0, 2) == 0.5
    with pytest.raises(ParameterError):
        sc.spanning_tree_success_bound(0.5, 4)
    with pytest.raises(ParameterError):
        sc.spanning_tree_solve(sc.Instance([[0, 1.0], [1.0, 0]]), seed=0, repetitions=0)


def test_spanning_tree_determinism_and_rate():
    planted = sc.gen_stable_bipartite_noise(12, 20.0, seed=7)
    inst = planted.instance
    a = sc.spanning_tree_solve(inst, seed=5, repetitions=4)
    b = sc.spanning_tree_solve(inst, seed=5, repetitions=4)
    assert a == b

    opt, _, _ = sc.brute_force_maxcut(inst)
    gamma = sc.cut_stability_gamma(inst, opt)
    bound = sc.spanning_tree_success_bound(gamma, 12)
    trials = 500
    hits = sum(sc.same_bipartition(sc.spanning_tree_solve(inst, seed=s, repetitions=1), opt)
               for s in range(trials))
    rate = hits / trials
    assert rate >= bound - 3 * math.sqrt(bound * (1 - bound) / trials)
