"""Exact brute-force ground truth at desk scale.

Everything here scans an exponential space (all bipartitions, or all vertex
subsets), vectorized in chunks so that the configured caps (n <= 24 for
subset scans, n <= 28 for the max-cut scan) stay feasible.  Subset scans
exploit complement symmetry and only visit subsets containing vertex 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SizeLimitError
from .instance import (
    Cut,
    Instance,
    REL_TOL,
    ZERO_FRACTION,
    cut_weight,
    cut_weights_for_sides,
)

INF = math.inf

_CHUNK = 1 << 14


def _side_chunks(n: int, n_masks: int, chunk: int = _CHUNK):
    """Yield (masks, sides) with vertex 0 fixed in S.

    Bit (n-1-i) of the mask holds side[i] for i >= 1, so increasing mask
    order enumerates side vectors in lexicographic order.
    """
    shifts = np.array([n - 1 - i for i in range(1, n)], dtype=np.uint64)
    for lo in range(0, n_masks, chunk):
        masks = np.arange(lo, min(lo + chunk, n_masks), dtype=np.uint64)
        sides = np.ones((n, masks.size), dtype=bool)
        sides[1:] = (masks[None, :] >> shifts[:, None]) & 1
        yield masks, sides


def brute_force_maxcut(inst: Instance, max_n: int = 28) -> tuple[Cut, float, int]:
    """Exhaustive maximum cut.

    Returns one optimal cut (the lexicographically smallest side vector with
    vertex 0 in S), its weight, and the number of distinct optimal cuts (a
    cut and its complement count once).  Optima are counted up to relative
    tolerance 1e-9.
    """
    n = inst.n
    if n > max_n:
        raise SizeLimitError(f"brute force capped at n <= {max_n}, got {n}")
    W = inst.weights
    n_masks = (1 << (n - 1)) - 1  # exclude S = V
    best = -INF
    for _, sides in _side_chunks(n, n_masks):
        best = max(best, float(cut_weights_for_sides(W, sides).max()))
    tol = REL_TOL * best
    count = 0
    best_side = None
    for _, sides in _side_chunks(n, n_masks):
        w = cut_weights_for_sides(W, sides)
        hits = np.flatnonzero(w >= best - tol)
        count += hits.size
        if best_side is None and hits.size:
            best_side = sides[:, hits[0]].copy()
    cut = Cut(best_side)
    return cut, cut_weight(inst, cut), count


def subset_scan_minima(
    W: np.ndarray, delta: np.ndarray | None = None, max_n: int = 24
) -> tuple[float, float, float]:
    """Scan all nonempty proper subsets of a weight matrix.

    Returns (gamma, alpha, cheeger): the minima of xi(A)/iota(A),
    (xi(A)-iota(A))/min(mu(A), mu(A-bar)) and tau(A)/min(mu(A), mu(A-bar)).
    When ``delta`` is None only the Cheeger minimum is meaningful and the
    first two come back as +inf.  0/0 ratios are +inf by convention.
    """
    n = W.shape[0]
    if n > max_n:
        raise SizeLimitError(f"subset scan capped at n <= {max_n}, got {n}")
    mu = W.sum(axis=1)
    total_mu = float(mu.sum())
    zero = ZERO_FRACTION * max(total_mu, 1e-300)
    if delta is not None:
        W_cut = W * (delta[:, None] * delta[None, :] < 0)
        xi_vec = W_cut.sum(axis=1)
    gamma = alpha = cheeger = INF
    n_masks = (1 << (n - 1)) - 1  # A contains vertex 0, A != V
    for _, sides in _side_chunks(n, n_masks):
        chi = sides.astype(np.float64)
        mu_a = mu @ chi
        tau = mu_a - np.einsum("ik,ik->k", chi, W @ chi)
        min_side = np.minimum(mu_a, total_mu - mu_a)
        min_side_safe = np.where(min_side > zero, min_side, INF)
        cheeger = min(cheeger, float((tau / min_side_safe).min()))
        if delta is not None:
            xi = xi_vec @ chi - np.einsum("ik,ik->k", chi, W_cut @ chi)
            iota = tau - xi
            ratios = np.where(iota > zero, xi / np.where(iota > zero, iota, 1.0), INF)
            gamma = min(gamma, float(ratios.min()))
            alpha = min(alpha, float(((xi - iota) / min_side_safe).min()))
    return gamma, alpha, cheeger


def per_vertex_cut_weights(W: np.ndarray, side: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(xi(x), iota(x)) for every vertex: weight to the other / own side."""
    mu = W.sum(axis=1)
    to_s = W @ side.astype(np.float64)
    xi = np.where(side, mu - to_s, to_s)
    return xi, mu - xi


def cut_stability_gamma(inst: Instance, cut: Cut, max_n: int = 24) -> float:
    """min over nonempty proper subsets A of xi(A)/iota(A); +inf terms for iota(A)=0.

    The cut is gamma-stable exactly for gamma up to this value.
    """
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    gamma, _, _ = subset_scan_minima(inst.weights, cut.delta, max_n=max_n)
    return gamma


def local_stability_gamma(inst: Instance, cut: Cut) -> float:
    """min over vertices of xi(x)/iota(x); +inf when every iota(x) = 0."""
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    xi, iota = per_vertex_cut_weights(inst.weights, cut.side)
    zero = ZERO_FRACTION * max(float(inst.weights.sum()), 1e-300)
    ratios = np.where(iota > zero, xi / np.where(iota > zero, iota, 1.0), INF)
    return float(ratios.min())


def distinction_alpha(inst: Instance, cut: Cut, max_n: int = 24) -> float:
    """min over subsets of (xi(A)-iota(A)) / min(mu(A), mu(A-bar))."""
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    _, alpha, _ = subset_scan_minima(inst.weights, cut.delta, max_n=max_n)
    return alpha


def cheeger_constant(inst: Instance, max_n: int = 24) -> float:
    """Exact Cheeger constant min_A tau(A) / min(mu(A), mu(A-bar))."""
    _, _, h = subset_scan_minima(inst.weights, None, max_n=max_n)
    return h


def enumerate_locally_stable_cuts(inst: Instance, gamma: float, max_n: int = 24) -> list[Cut]:
    """All cuts (up to complement) with xi(x) >= gamma * iota(x) at every vertex."""
    if gamma < 1.0:
        raise ParameterError("gamma must be >= 1")
    n = inst.n
    if n > max_n:
        raise SizeLimitError(f"enumeration capped at n <= {max_n}, got {n}")
    W = inst.weights
    mu = W.sum(axis=1)
    zero = ZERO_FRACTION * max(float(W.sum()), 1e-300)
    found: list[Cut] = []
    n_masks = (1 << (n - 1)) - 1
    for _, sides in _side_chunks(n, n_masks):
        to_s = W @ sides.astype(np.float64)
        xi = np.where(sides, mu[:, None] - to_s, to_s)
        iota = mu[:, None] - xi
        slack = xi - gamma * iota
        ok = (slack >= -REL_TOL * np.maximum(xi, gamma * iota) - zero).all(axis=0)
        for k in np.flatnonzero(ok):
            found.append(Cut(sides[:, k].copy()))
    return found


@dataclass(frozen=True)
class StabilityReport:
    """Exact stability profile of an instance (all values from brute force).

    gamma and gamma_local may be +inf (bipartite support).  When the maximum
    cut is not unique, gamma is clamped to 1: being gamma-stable for any
    gamma > 1 is equivalent to having a unique maximum cut.
    """

    gamma: float
    gamma_local: float
    alpha: float
    cheeger: float
    is_unique_maxcut: bool


def instance_stability(inst: Instance, max_n: int = 24) -> StabilityReport:
    """Full report at the brute-force optimal cut."""
    if inst.n > max_n:
        raise SizeLimitError(f"stability oracle capped at n <= {max_n}, got {inst.n}")
    cut, _, count = brute_force_maxcut(inst, max_n=max_n)
    gamma, alpha, cheeger = subset_scan_minima(inst.weights, cut.delta, max_n=max_n)
    unique = count == 1
    return StabilityReport(
        gamma=gamma if unique else 1.0,
        gamma_local=local_stability_gamma(inst, cut),
        alpha=alpha,
        cheeger=cheeger,
        is_unique_maxcut=unique,
    )
