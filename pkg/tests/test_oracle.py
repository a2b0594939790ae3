import math

import numpy as np
import pytest

import stablecut as sc
from stablecut.errors import ParameterError, SizeLimitError

from conftest import random_instance

INF = math.inf


def test_brute_force_examples(c4, k3):
    cut, w, count = sc.brute_force_maxcut(c4)
    assert (w, count) == (4.0, 1)
    assert sc.same_bipartition(cut, sc.Cut([True, False, True, False]))

    cut, w, count = sc.brute_force_maxcut(k3)
    assert (w, count) == (2.0, 3)
    # reported cut is the lexicographically smallest side vector
    assert list(cut.side.astype(int)) == [1, 0, 0]

    k4 = sc.Instance(np.ones((4, 4)) - np.eye(4))
    _, w, count = sc.brute_force_maxcut(k4)
    assert (w, count) == (4.0, 3)


def test_brute_force_size_cap(k3):
    with pytest.raises(SizeLimitError):
        sc.brute_force_maxcut(k3, max_n=2)


def test_cut_stability_examples(c4, k3, k22_heavy, c4_maxcut):
    assert sc.cut_stability_gamma(c4, c4_maxcut) == INF
    assert sc.cut_stability_gamma(k3, sc.Cut([True, False, False])) == 1.0
    assert sc.cut_stability_gamma(k22_heavy, sc.Cut([True, False, True, False])) == 10.0


def test_local_stability_examples(c4, k3, pair_metric, c4_maxcut):
    assert sc.local_stability_gamma(c4, c4_maxcut) == INF
    assert sc.local_stability_gamma(k3, sc.Cut([True, False, False])) == 1.0
    assert sc.local_stability_gamma(pair_metric, sc.Cut([True, True, False, False])) == 4.0


def test_distinction_examples(c4, k3, c4_maxcut):
    assert sc.distinction_alpha(k3, sc.Cut([True, False, False])) == 0.0
    assert sc.distinction_alpha(c4, c4_maxcut) == 0.5
    planted = sc.gen_infinite_stable_not_distinguished(4, 1e-3)
    assert sc.distinction_alpha(planted.instance, planted.planted_cut) < 0.01


def test_cheeger_examples(c4, k3):
    assert sc.cheeger_constant(k3) == 1.0
    assert sc.cheeger_constant(c4) == 0.5
    k22 = sc.gen_planted_partition(4, 1.0, 0.0, seed=0).instance
    assert sc.cheeger_constant(k22) == 0.5


def test_enumerate_locally_stable_cuts(c4, k3):
    cuts = sc.enumerate_locally_stable_cuts(c4, 2.0)
    assert len(cuts) == 1 and sc.same_bipartition(cuts[0], sc.Cut([True, False, True, False]))

    assert len(sc.enumerate_locally_stable_cuts(sc.gen_matching_epsilon(2, 1e-3), 2.0)) == 2
    assert len(sc.enumerate_locally_stable_cuts(sc.gen_matching_epsilon(3, 1e-3), 2.0)) == 4
    assert len(sc.enumerate_locally_stable_cuts(k3, 1.0)) == 3

    with pytest.raises(ParameterError):
        sc.enumerate_locally_stable_cuts(k3, 0.5)


def test_instance_stability_examples(c4, k3, k22_heavy):
    rep = sc.instance_stability(c4)
    assert rep.gamma == INF and rep.is_unique_maxcut
    assert rep.alpha == 0.5 and rep.cheeger == 0.5

    rep = sc.instance_stability(k3)
    assert rep.gamma == 1.0 and not rep.is_unique_maxcut

    rep = sc.instance_stability(k22_heavy)
    assert rep.gamma == 10.0 and rep.is_unique_maxcut


# ---------------------------------------------------------------------------
# cross-invariants on random instances
# ---------------------------------------------------------------------------


def _profile(inst):
    cut, _, count = sc.brute_force_maxcut(inst)
    gamma = sc.cut_stability_gamma(inst, cut)
    return cut, count, gamma


def test_oracle_invariants_random():
    rng = np.random.default_rng(20240811)
    for _ in range(30):
        n = int(rng.integers(5, 11))
        inst = random_instance(rng, n)
        cut, count, gamma = _profile(inst)
        gamma_local = sc.local_stability_gamma(inst, cut)
        alpha = sc.distinction_alpha(inst, cut)
        h = sc.cheeger_constant(inst)

        assert gamma <= gamma_local * (1 + 1e-9) or gamma == gamma_local == INF
        assert alpha <= h + 1e-9
        if count == 1 and alpha < 1.0:
            assert gamma >= (1 + alpha) / (1 - alpha) * (1 - 1e-9)
        # stability above 1 iff unique optimum
        if gamma > 1.0 + 1e-9:
            assert count == 1
        if count > 1:
            assert gamma <= 1.0 + 1e-9


def test_stability_matches_perturbation_definition():
    # cross-check against the definition itself: the optimum survives every
    # entrywise inflation bounded by the measured gamma, while inflating the
    # non-cut edges just past gamma always dethrones it
    rng = np.random.default_rng(99)
    checked = 0
    while checked < 12:
        n = int(rng.integers(5, 9))
        inst = random_instance(rng, n)
        opt, _, count = sc.brute_force_maxcut(inst)
        gamma = sc.cut_stability_gamma(inst, opt)
        if count != 1 or not math.isfinite(gamma) or gamma <= 1.0:
            continue
        checked += 1
        F = np.triu(rng.uniform(1.0, gamma * (1 - 1e-9), (n, n)), 1)
        F += F.T
        np.fill_diagonal(F, 1.0)
        survived, _ = sc.apply_perturbation(inst, F)
        p_opt, _, p_count = sc.brute_force_maxcut(survived)
        assert p_count == 1 and sc.same_bipartition(p_opt, opt)

        separated = opt.delta[:, None] * opt.delta[None, :] < 0
        F2 = np.where(separated, 1.0, gamma * (1 + 1e-6))
        np.fill_diagonal(F2, 1.0)
        dethroned, _ = sc.apply_perturbation(inst, F2)
        d_opt, _, _ = sc.brute_force_maxcut(dethroned)
        assert not sc.same_bipartition(d_opt, opt)


def test_local_stability_matches_perturbation_definition():
    # scaling one vertex's non-cut edges just past its xi/iota ratio makes
    # flipping that vertex profitable; below the minimum ratio it never is
    rng = np.random.default_rng(101)
    checked = 0
    while checked < 10:
        n = int(rng.integers(5, 9))
        inst = random_instance(rng, n)
        opt, w, _ = sc.brute_force_maxcut(inst)
        g = sc.local_stability_gamma(inst, opt)
        if not math.isfinite(g) or g <= 1.0:
            continue
        checked += 1
        from stablecut.oracle import per_vertex_cut_weights
        xi, iota = per_vertex_cut_weights(inst.weights, opt.side)
        x = int(np.argmin(np.where(iota > 0, xi / np.where(iota > 0, iota, 1), math.inf)))
        factor = g * (1 + 1e-6)
        F = np.ones((n, n))
        same = opt.side == opt.side[x]
        F[x, same] = factor
        F[same, x] = factor
        np.fill_diagonal(F, 1.0)
        pert, _ = sc.apply_perturbation(inst, F)
        flipped = opt.side.copy()
        flipped[x] = ~flipped[x]
        assert sc.cut_weight(pert, sc.Cut(flipped)) > sc.cut_weight(pert, opt)


def test_unique_maxcut_is_enumerated():
    rng = np.random.default_rng(77)
    found_any = False
    for _ in range(20):
        inst = random_instance(rng, 7)
        cut, count, gamma = _profile(inst)
        if count != 1 or not gamma > 1.0:
            continue
        found_any = True
        level = 1.0 + (min(gamma, 10.0) - 1.0) / 2
        cuts = sc.enumerate_locally_stable_cuts(inst, level)
        assert any(sc.same_bipartition(c, cut) for c in cuts)
    assert found_any


def test_local_distinction_identity():
    # min over vertices of (xi - iota)/mu equals (g-1)/(g+1) at g = local gamma
    rng = np.random.default_rng(123)
    for _ in range(20):
        n = int(rng.integers(4, 9))
        inst = random_instance(rng, n)
        cut, _, _ = _profile(inst)
        g = sc.local_stability_gamma(inst, cut)
        from stablecut.oracle import per_vertex_cut_weights
        xi, iota = per_vertex_cut_weights(inst.weights, cut.side)
        lhs = float(((xi - iota) / (xi + iota)).min())
        rhs = 1.0 if g == INF else (g - 1.0) / (g + 1.0)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)
