import json

import numpy as np
import pytest

import stablecut as sc
from stablecut.errors import (
    InvalidCutError,
    InvalidInstanceError,
    InvalidSubsetError,
    ParameterError,
)

from conftest import random_cut, random_instance


# ---------------------------------------------------------------------------
# construction and invariants
# ---------------------------------------------------------------------------


def test_instance_rejects_bad_matrices():
    with pytest.raises(InvalidInstanceError):
        sc.Instance([[0.0, 1.0], [2.0, 0.0]])  # asymmetric
    with pytest.raises(InvalidInstanceError):
        sc.Instance([[0.0, -1.0], [-1.0, 0.0]])  # negative
    with pytest.raises(InvalidInstanceError):
        sc.Instance([[1.0, 1.0], [1.0, 0.0]])  # diagonal
    with pytest.raises(InvalidInstanceError):
        sc.Instance([[0.0]])  # too small
    with pytest.raises(InvalidInstanceError):
        # disconnected support: two components
        sc.Instance([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    with pytest.raises(InvalidInstanceError):
        sc.Instance(np.ones((3, 3)) - np.eye(3), labels=["a"])


def test_instance_is_immutable(k3):
    with pytest.raises(AttributeError):
        k3.n = 5
    with pytest.raises(ValueError):
        k3.weights[0, 1] = 7.0


def test_cut_validation():
    with pytest.raises(InvalidCutError):
        sc.Cut([True, True, True])
    with pytest.raises(InvalidCutError):
        sc.Cut([False, False])
    cut = sc.Cut([True, False, True])
    assert np.array_equal(cut.delta, [1.0, -1.0, 1.0])
    assert cut.complement() == sc.Cut([False, True, False])
    assert cut.members() == ((0, 2), (1,))
    assert sc.same_bipartition(cut, cut.complement())
    assert not sc.same_bipartition(cut, sc.Cut([True, True, False]))


# ---------------------------------------------------------------------------
# subset statistics
# ---------------------------------------------------------------------------


def test_subset_stats_k3(k3):
    st = sc.subset_stats(k3, sc.Cut([True, False, False]), 1)
    assert (st.xi, st.iota, st.tau, st.mu) == (1.0, 1.0, 2.0, 2.0)


def test_subset_stats_c4(c4, c4_maxcut):
    st = sc.subset_stats(c4, c4_maxcut, 0)
    assert (st.xi, st.iota, st.tau, st.mu) == (2.0, 0.0, 2.0, 2.0)
    st = sc.subset_stats(c4, c4_maxcut, (0, 1))
    assert (st.xi, st.iota, st.tau, st.mu) == (2.0, 0.0, 2.0, 4.0)


def test_subset_stats_rejects_bad_subsets(c4, c4_maxcut):
    with pytest.raises(InvalidSubsetError):
        sc.subset_stats(c4, c4_maxcut, ())
    with pytest.raises(InvalidSubsetError):
        sc.subset_stats(c4, c4_maxcut, (0, 1, 2, 3))
    with pytest.raises(InvalidSubsetError):
        sc.subset_stats(c4, c4_maxcut, (7,))


def test_subset_identities_random():
    rng = np.random.default_rng(42)
    for _ in range(25):
        n = int(rng.integers(4, 9))
        inst = random_instance(rng, n)
        cut = random_cut(rng, n)
        size = int(rng.integers(1, n))
        subset = rng.permutation(n)[:size]
        st = sc.subset_stats(inst, cut, subset)
        assert st.xi + st.iota == st.tau  # exact by construction
        assert st.tau <= st.mu + 1e-12


# ---------------------------------------------------------------------------
# cut weight, merging, perturbation
# ---------------------------------------------------------------------------


def test_cut_weight_examples(c4, k3, c4_maxcut):
    assert sc.cut_weight(c4, c4_maxcut) == 4.0
    assert sc.cut_weight(k3, sc.Cut([True, False, False])) == 2.0
    assert sc.cut_weight(k3, sc.Cut([True, True, False])) == 2.0


def test_flipping_a_subset_costs_xi_minus_iota():
    # moving A across the cut trades its cut boundary for its non-cut one
    rng = np.random.default_rng(19)
    for _ in range(20):
        n = int(rng.integers(4, 9))
        inst = random_instance(rng, n)
        cut = random_cut(rng, n)
        size = int(rng.integers(1, n))
        subset = rng.permutation(n)[:size]
        stats = sc.subset_stats(inst, cut, subset)
        flipped = cut.side.copy()
        flipped[subset] = ~flipped[subset]
        if flipped.all() or not flipped.any():
            continue
        assert sc.cut_weight(inst, sc.Cut(flipped)) == pytest.approx(
            sc.cut_weight(inst, cut) - stats.xi + stats.iota, rel=1e-12, abs=1e-12)


def test_cut_weight_complement_invariance():
    rng = np.random.default_rng(7)
    for _ in range(10):
        inst = random_instance(rng, 6)
        cut = random_cut(rng, 6)
        assert sc.cut_weight(inst, cut) == pytest.approx(
            sc.cut_weight(inst, cut.complement()), rel=1e-15)


def test_merge_vertices_examples(c4, k3):
    merged, mapping = sc.merge_vertices(k3, 1, 2)
    assert merged.n == 2
    assert merged.weights[0, 1] == 2.0
    assert list(mapping) == [0, 1, 1]

    merged, mapping = sc.merge_vertices(c4, 0, 2)
    assert merged.n == 3
    assert merged.weights[0, 1] == 2.0  # merged vertex to 1
    assert merged.weights[0, 2] == 2.0  # merged vertex to 3
    assert merged.weights[1, 2] == 0.0
    assert list(mapping) == [0, 1, 0, 2]

    with pytest.raises(ParameterError):
        sc.merge_vertices(k3, 1, 1)


def test_merge_preserves_lifted_cut_weights():
    rng = np.random.default_rng(3)
    for _ in range(20):
        inst = random_instance(rng, 7)
        u, v = rng.permutation(7)[:2]
        merged, mapping = sc.merge_vertices(inst, int(u), int(v))
        cut = random_cut(rng, merged.n)
        lifted = sc.Cut(cut.side[mapping])
        assert sc.cut_weight(merged, cut) == pytest.approx(
            sc.cut_weight(inst, lifted), rel=1e-12)


def test_apply_perturbation(c4):
    same, gamma = sc.apply_perturbation(c4, np.ones((4, 4)))
    assert np.array_equal(same.weights, c4.weights) and gamma == 1.0

    factors = np.ones((4, 4))
    factors[0, 1] = factors[1, 0] = 2.0
    pert, gamma = sc.apply_perturbation(c4, factors)
    assert pert.weights[0, 1] == 2.0 and pert.weights[1, 2] == 1.0 and gamma == 2.0

    factors[2, 3] = factors[3, 2] = 0.5
    with pytest.raises(ParameterError):
        sc.apply_perturbation(c4, factors)


def test_perturbation_bounds_cut_weights():
    rng = np.random.default_rng(11)
    for _ in range(15):
        inst = random_instance(rng, 6)
        F = np.triu(rng.uniform(1.0, 3.0, (6, 6)), 1)
        F += F.T
        np.fill_diagonal(F, 1.0)
        pert, gamma = sc.apply_perturbation(inst, F)
        cut = random_cut(rng, 6)
        before = sc.cut_weight(inst, cut)
        after = sc.cut_weight(pert, cut)
        assert before - 1e-12 <= after <= gamma * before + 1e-12


def test_density_coefficient(c4):
    assert sc.density_coefficient(c4) == 2.0
    for n in (3, 5, 8):
        kn = sc.Instance(np.ones((n, n)) - np.eye(n))
        assert sc.density_coefficient(kn) == pytest.approx(n / (n - 1))
    star = np.zeros((4, 4))
    star[0, 1:] = star[1:, 0] = 1.0
    assert sc.density_coefficient(sc.Instance(star)) == 4.0


def test_density_uniform_scaling_invariance():
    rng = np.random.default_rng(5)
    inst = random_instance(rng, 6)
    scaled, _ = sc.apply_perturbation(inst, np.full((6, 6), 3.5))
    assert sc.density_coefficient(scaled) == pytest.approx(
        sc.density_coefficient(inst), rel=1e-12)


# ---------------------------------------------------------------------------
# metric check
# ---------------------------------------------------------------------------


def test_is_metric(c4):
    rng = np.random.default_rng(0)
    pts = rng.normal(size=(6, 3))
    D = np.linalg.norm(pts[:, None] - pts[None, :], axis=2)
    assert sc.is_metric(sc.Instance(D)).ok

    check = sc.is_metric(c4)
    assert not check.ok and check.kind == "nonpositive"

    bad = sc.Instance(np.array([[0, 1, 3], [1, 0, 1], [3, 1, 0]], dtype=float))
    check = sc.is_metric(bad)
    assert not check.ok and check.kind == "triangle" and check.violation == (0, 1, 2)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def test_instance_json_roundtrip_bitexact(tmp_path):
    rng = np.random.default_rng(9)
    W = np.triu(rng.random((7, 7)), 1)
    W[0, 1] = 0.1  # not exactly representable; must still round-trip
    W[2, 3] = 0.0  # dropped pair
    W += W.T
    inst = sc.Instance(W)
    path = tmp_path / "inst.json"
    sc.save_instance(inst, path)
    back = sc.load_instance(path)
    assert np.array_equal(back.weights, inst.weights)
    doc = json.loads(path.read_text())
    listed = {(min(i, j), max(i, j)) for i, j, _ in doc["weights"]}
    assert (2, 3) not in listed


def test_instance_json_rejects_garbage():
    with pytest.raises(InvalidInstanceError):
        sc.instance_from_json({"n": 3})
    with pytest.raises(InvalidInstanceError):
        sc.instance_from_json({"n": 3, "weights": [[0, 1, 1.0], [1, 0, 2.0], [1, 2, 1.0], [0, 2, 1.0]]})
    with pytest.raises(InvalidInstanceError):
        sc.instance_from_json({"n": 3, "weights": [[0, 3, 1.0]]})


def test_cut_json_roundtrip(tmp_path):
    cut = sc.Cut([True, False, False, True])
    path = tmp_path / "cut.json"
    sc.save_cut(cut, path)
    assert sc.load_cut(path) == cut
    with pytest.raises(InvalidCutError):
        sc.cut_from_json({"side": [1, 1]})
