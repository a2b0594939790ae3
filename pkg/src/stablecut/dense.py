"""Sampling solver for locally stable, density-bounded instances.

The solver draws m vertices i.i.d. uniformly (with replacement), and for a
collection of bipartitions (L, R) of the sample multiset forms the cut

    S = {x : w(x, R) > w(x, L)}

keeping the heaviest valid cut.  Ties w(x, R) = w(x, L) put x on the
complement side of S, deterministically.  With the true sides of the sample
as the partition, every vertex lands correctly unless its weighted sample
majority falls on its own side; the failure probability of that event is
bounded by ``failure_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SolverFailure
from .instance import Cut, Instance, cut_weights_for_sides

_SCORE_CHUNK = 1 << 14


def sample_size(C: float, eps: float, n: int) -> int:
    """Sample size sufficient for the failure union bound: ceil(2*(C*(2+eps)/eps)^2 * ln(2n))."""
    if C < 1.0:
        raise ParameterError("C must be >= 1")
    if eps <= 0.0:
        raise ParameterError("eps must be positive")
    if n < 2:
        raise ParameterError("n must be >= 2")
    return math.ceil(2.0 * (C * (2.0 + eps) / eps) ** 2 * math.log(2 * n))


def failure_bound(C: float, gamma: float, m: int, n: int) -> float:
    """n * exp(-((gamma-1)/(C*(gamma+1)))^2 * m / 2), clamped to [0, 1].

    Vacuous (1.0) for gamma <= 1.  gamma may be +inf.
    """
    if C < 1.0:
        raise ParameterError("C must be >= 1")
    if gamma <= 1.0:
        return 1.0
    ratio = 1.0 if math.isinf(gamma) else (gamma - 1.0) / (gamma + 1.0)
    return min(1.0, n * math.exp(-0.5 * (ratio / C) ** 2 * m))


@dataclass
class DenseSolverConfig:
    """Configuration for ``dense_solve``.

    m defaults to ``sample_size(C, eps, n)`` when not given.  Modes:
    "enumerate" tries all 2^m sample bipartitions (m capped), "seeded" uses
    the sample's true sides from ``seed_cut`` (test harnesses), "random"
    tries k uniformly drawn bipartitions.
    """

    eps: float | None = None
    C: float | None = None
    m: int | None = None
    mode: str = "enumerate"
    k: int | None = None
    seed: int = 0
    seed_cut: Cut | None = None
    enumeration_cap: int = 22

    def __post_init__(self):
        if self.mode not in ("enumerate", "seeded", "random"):
            raise ParameterError(f"unknown mode {self.mode!r}")
        if self.m is not None and self.m < 1:
            raise ParameterError("m must be >= 1")
        if self.eps is not None and self.eps <= 0.0:
            raise ParameterError("eps must be positive")
        if self.C is not None and self.C < 1.0:
            raise ParameterError("C must be >= 1")

    def resolve_m(self, n: int) -> int:
        if self.m is not None:
            return self.m
        if self.C is None or self.eps is None:
            raise ParameterError("either m or both C and eps must be set")
        return sample_size(self.C, self.eps, n)


def draw_samples(n: int, m: int, seed: int) -> np.ndarray:
    """m i.i.d. uniform vertices, with replacement (duplicates are kept)."""
    return np.random.default_rng(seed).integers(0, n, size=m)


def _partition_chunks(cfg: DenseSolverConfig, samples: np.ndarray,
                      sample_sides: np.ndarray | None):
    """Yield boolean (k, m) partition blocks; True marks a sample assigned to R.

    Enumeration is chunked so the cap (2^22 partitions) stays within memory.
    """
    m = samples.size
    if cfg.mode == "enumerate":
        if m > cfg.enumeration_cap:
            raise ParameterError(
                f"enumerate mode caps m at {cfg.enumeration_cap}, got {m}")
        shifts = np.arange(m, dtype=np.uint64)
        for lo in range(0, 1 << m, _SCORE_CHUNK):
            ks = np.arange(lo, min(lo + _SCORE_CHUNK, 1 << m), dtype=np.uint64)
            yield ((ks[:, None] >> shifts[None, :]) & 1).astype(bool)
    elif cfg.mode == "seeded":
        if sample_sides is None:
            raise ParameterError("seeded mode needs seed_cut")
        # R gets the samples on the planted False side, so the recovered S
        # lines up with the planted True side.
        yield ~sample_sides[None, :]
    else:
        if cfg.k is None or cfg.k < 1:
            raise ParameterError("random mode needs k >= 1")
        rng = np.random.default_rng(cfg.seed + 1)
        for lo in range(0, cfg.k, _SCORE_CHUNK):
            yield rng.integers(0, 2, size=(min(_SCORE_CHUNK, cfg.k - lo), m)).astype(bool)


def induced_side_matrix(W: np.ndarray, samples: np.ndarray,
                        r_masks: np.ndarray) -> np.ndarray:
    """Sides S = {x : w(x,R) > w(x,L)} for every partition row; (n, K) boolean."""
    M = W[:, samples]
    signs = np.where(r_masks, 1.0, -1.0)  # +1 toward R, -1 toward L
    return (M @ signs.T) > 0.0


def _best_valid(W: np.ndarray, sides: np.ndarray) -> tuple[int, float] | None:
    """Index and weight of the heaviest nondegenerate side vector (first wins ties)."""
    counts = sides.sum(axis=0)
    valid = np.flatnonzero((counts > 0) & (counts < W.shape[0]))
    if valid.size == 0:
        return None
    w = cut_weights_for_sides(W, sides[:, valid])
    k = int(np.argmax(w))
    return int(valid[k]), float(w[k])


def dense_solve(inst: Instance, cfg: DenseSolverConfig) -> Cut:
    """Run the sampling solver and return the heaviest induced valid cut.

    Raises SolverFailure when every considered partition induces a
    degenerate assignment (one side empty); callers may retry with a fresh
    seed.
    """
    n = inst.n
    m = cfg.resolve_m(n)
    samples = draw_samples(n, m, cfg.seed)
    sample_sides = None
    if cfg.seed_cut is not None:
        if cfg.seed_cut.n != n:
            raise ParameterError("seed_cut size mismatch")
        sample_sides = cfg.seed_cut.side[samples]
    best_side, best_w = None, -math.inf
    for r_masks in _partition_chunks(cfg, samples, sample_sides):
        sides = induced_side_matrix(inst.weights, samples, r_masks)
        hit = _best_valid(inst.weights, sides)
        if hit is not None and hit[1] > best_w:
            best_side, best_w = sides[:, hit[0]].copy(), hit[1]
    if best_side is None:
        raise SolverFailure("every sample partition induced a degenerate cut")
    return Cut(best_side)


def per_vertex_failures(inst: Instance, cut: Cut, samples: np.ndarray) -> np.ndarray:
    """Misclassification indicators for the seeded partition of ``samples``.

    Vertex x fails when the side recovered from the sample's true partition
    differs from its own side under ``cut``; in particular a weighted sample
    majority on x's own side (or a tie, for x on the True side) is a failure.
    """
    r_mask = ~cut.side[samples]
    sides = induced_side_matrix(inst.weights, samples, r_mask[None, :])
    return sides[:, 0] != cut.side
