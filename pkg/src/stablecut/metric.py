"""Metric MAXCUT: the vertex-splitting reduction to dense instances, the
reduction-based sampling solver, and the fast ball-enumeration solver.

Splitting replaces vertex x by floor(tau(x)) identical copies (after the
total weight is normalized to 2 n^2 over ordered pairs) and divides each
weight by the product of the fiber sizes.  The map (S, S-bar) ->
(pi^{-1}(S), pi^{-1}(S-bar)) preserves cut weights, stability and local
stability exactly, and the split instance of a metric is roughly 4-dense,
which is what the sampling solver needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dense import DenseSolverConfig, _best_valid, _partition_chunks, draw_samples, induced_side_matrix
from .errors import DegenerateInstanceError, ParameterError, PreconditionError, SolverFailure
from .instance import Cut, Instance, REL_TOL, cut_weight, is_metric

# Absorbs representation error in floor(tau) after floating-point
# normalization; tau >= n analytically so a one-off cannot occur.
FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class SplitMap:
    """Result of the vertex-splitting reduction.

    pi maps each split vertex to its original vertex; multiplicity[x] is the
    fiber size floor(tau(x)).  Weights within a fiber are zero.
    """

    original: Instance
    split: Instance
    pi: np.ndarray
    multiplicity: np.ndarray


def normalize_total_weight(inst: Instance) -> tuple[Instance, float]:
    """Rescale so the ordered total w(V, V) equals 2 n^2; returns (instance, scale).

    Scaling preserves the argmax cut and every stability ratio.
    """
    total = float(inst.weights.sum())
    if total <= 0.0:
        raise DegenerateInstanceError("total weight must be positive")
    scale = 2.0 * inst.n ** 2 / total
    return Instance(inst.weights * scale, labels=inst.labels), scale


def split_instance(inst: Instance) -> SplitMap:
    """Split a normalized instance into floor(tau(x)) copies per vertex."""
    n = inst.n
    total = float(inst.weights.sum())
    target = 2.0 * n ** 2
    if abs(total - target) > REL_TOL * target:
        raise PreconditionError(
            f"instance must be normalized to w(V,V) = 2n^2 (= {target:g}), got {total:g}")
    tau = inst.degrees()
    mult = np.floor(tau + FLOOR_EPS).astype(int)
    if (mult < 1).any():
        raise DegenerateInstanceError("every floor(tau(x)) must be >= 1")
    pi = np.repeat(np.arange(n), mult)
    scaled = inst.weights / np.outer(mult, mult)
    W = scaled[np.ix_(pi, pi)]
    W[pi[:, None] == pi[None, :]] = 0.0
    return SplitMap(original=inst, split=Instance(W), pi=pi, multiplicity=mult)


def lift_cut(smap: SplitMap, cut: Cut) -> Cut:
    """Lift a cut of the original instance to the split instance (fiber-constant)."""
    if cut.n != smap.original.n:
        raise ParameterError("cut size mismatch")
    return Cut(cut.side[smap.pi])


def project_cut(smap: SplitMap, split_cut: Cut) -> Cut | None:
    """Invert ``lift_cut``; None when some fiber is split across sides."""
    if split_cut.n != smap.split.n:
        raise ParameterError("cut size mismatch")
    offsets = np.concatenate(([0], np.cumsum(smap.multiplicity)[:-1]))
    firsts = split_cut.side[offsets]
    if not np.array_equal(split_cut.side, firsts[smap.pi]):
        return None
    return Cut(firsts)


def _require_metric(inst: Instance) -> None:
    check = is_metric(inst)
    if not check:
        raise PreconditionError(f"instance is not a metric: {check.kind} at {check.violation}")


def metric_dense_solve(inst: Instance, cfg: DenseSolverConfig) -> Cut:
    """Normalize, split, run the dense sampling solver, and project back.

    Candidate cuts of the split instance that are not fiber-constant are
    repaired by per-fiber majority vote (ties to the S side) before scoring,
    so no sample partition is wasted.
    """
    _require_metric(inst)
    normalized, _ = normalize_total_weight(inst)
    smap = split_instance(normalized)
    n_split = smap.split.n
    m = cfg.resolve_m(n_split)
    samples = draw_samples(n_split, m, cfg.seed)
    sample_sides = None
    if cfg.seed_cut is not None:
        sample_sides = lift_cut(smap, cfg.seed_cut).side[samples]
    best_side, best_w = None, -math.inf
    for r_masks in _partition_chunks(cfg, samples, sample_sides):
        split_sides = induced_side_matrix(smap.split.weights, samples, r_masks)
        fiber_votes = np.zeros((inst.n, split_sides.shape[1]))
        np.add.at(fiber_votes, smap.pi, split_sides.astype(np.float64))
        repaired = 2.0 * fiber_votes >= smap.multiplicity[:, None]
        hit = _best_valid(inst.weights, repaired)
        if hit is not None and hit[1] > best_w:
            best_side, best_w = repaired[:, hit[0]].copy(), hit[1]
    if best_side is None:
        raise SolverFailure("every sample partition induced a degenerate cut")
    return Cut(best_side)


def enumerate_balls(inst: Instance) -> list[tuple[int, float, np.ndarray]]:
    """All distinct closed balls B(c, r) = {y : w(c, y) <= r} as (center, radius, membership).

    Radii sweep the exact distance values from each center plus radius 0
    (the singleton ball), which exhausts the distinct balls; B(c, V) is
    skipped since it cannot form a cut.
    """
    n = inst.n
    W = inst.weights
    balls = []
    for c in range(n):
        radii = np.unique(np.concatenate(([0.0], W[c])))
        for r in radii:
            inside = W[c] <= r
            if inside.all():
                continue
            balls.append((c, float(r), inside))
    return balls


def ball_enumeration_solve(inst: Instance) -> Cut:
    """Best cut of the form (B(c, r), complement) over all closed metric balls.

    On instances whose maximum cut is locally stable above 3 one side of the
    optimum is a ball, so the scan is exact there; below that threshold it
    simply returns the best ball cut, which may be suboptimal.
    """
    _require_metric(inst)
    best_w = -math.inf
    best = None
    for _, _, inside in enumerate_balls(inst):
        w = cut_weight(inst, Cut(inside))
        if w > best_w:
            best_w, best = w, inside
    return Cut(best)


@dataclass(frozen=True)
class CrossBoundCheck:
    """Outcome of the cut-edge lower-bound diagnostic.

    ``worst_pair`` is the separated ordered pair (x, z) with the smallest
    slack w(x, z) - bound(x), negative slack meaning a violation.
    """

    ok: bool
    gamma: float
    worst_pair: tuple[int, int]
    worst_slack: float


def cut_edge_lower_bound_check(inst: Instance, cut: Cut, gamma: float) -> CrossBoundCheck:
    """Verify w(x, z) >= ((gamma^2-1)/gamma) * w(x, R) / (gamma |R| + |L|) across the cut.

    Here L is x's side and R = z's side, checked for both orientations.  The
    inequality holds for every gamma-locally-stable cut of a metric
    instance, so it serves as a diagnostic invariant at gamma up to the
    measured local stability.
    """
    _require_metric(inst)
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    if gamma < 1.0:
        raise ParameterError("gamma must be >= 1")
    W = inst.weights
    tol = REL_TOL * float(W.max())
    worst_pair, worst_slack = None, math.inf
    for s in (cut.side, ~cut.side):
        L = np.flatnonzero(s)
        R = np.flatnonzero(~s)
        w_to_r = W[np.ix_(L, R)].sum(axis=1)
        if math.isinf(gamma):
            bounds = w_to_r / R.size
        else:
            bounds = (gamma ** 2 - 1.0) / gamma * w_to_r / (gamma * R.size + L.size)
        slack = W[np.ix_(L, R)] - bounds[:, None]
        i, j = np.unravel_index(np.argmin(slack), slack.shape)
        if slack[i, j] < worst_slack:
            worst_slack = float(slack[i, j])
            worst_pair = (int(L[i]), int(R[j]))
    return CrossBoundCheck(ok=worst_slack >= -tol, gamma=gamma,
                           worst_pair=worst_pair, worst_slack=worst_slack)
