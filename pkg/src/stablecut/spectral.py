"""Spectral certificates and the semidefinite relaxation pipeline.

Fix a cut with sign vector delta.  Split W into its cut and uncut parts,
let D^cut/D^uncut be the corresponding diagonal row-sum matrices, and set
D' = D^cut - D^uncut.  Then (W + D') delta = 0 always, and when the cut is
locally stable enough relative to the expansion of its cut edges, W + D' is
positive semidefinite with rank n-1 — a certificate that pins the maximum
cut down to the sign pattern of the kernel.

The relaxation side solves

    minimize sum_ij W_ij <v_i, v_j>   over unit vectors v_i

by block-coordinate descent on the factor matrix (each row update is the
closed-form minimizer), extracts the unique dual diagonal from the solved
Gram matrix, and rounds with random hyperplanes.  A cut whose rank-one
+/-1 Gram matrix attains the relaxation optimum is called bipolar here;
the four equivalent characterizations are evaluated independently by
``bipolarity_check``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, PreconditionError, SolverFailure
from .instance import Cut, Instance, REL_TOL, cut_weight
from .oracle import distinction_alpha, local_stability_gamma, subset_scan_minima

INF = math.inf


def eig_zero_tol(M: np.ndarray) -> float:
    """Scale-aware threshold below which an eigenvalue counts as zero."""
    return 1e-8 * (1.0 + float(np.abs(M).max()) * M.shape[0])


def weight_scale(W: np.ndarray) -> float:
    """Reference magnitude for relaxation values and dual entries."""
    return max(1.0, float(np.abs(W).sum()))


# ---------------------------------------------------------------------------
# PSD certificate for a candidate cut.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralBundle:
    """Cut/uncut decomposition of an instance at a cut, with the spectrum of W + D'.

    Diagonal matrices are stored as vectors.  ``kernel_vector`` is the
    eigenvector of the smallest eigenvalue when that eigenvalue is
    numerically zero, else None.
    """

    delta: np.ndarray
    cut_part: np.ndarray
    uncut_part: np.ndarray
    d_cut: np.ndarray
    d_uncut: np.ndarray
    d: np.ndarray
    d_prime: np.ndarray
    shifted: np.ndarray
    eigenvalues: np.ndarray
    kernel_vector: np.ndarray | None


def build_spectral_bundle(inst: Instance, cut: Cut) -> SpectralBundle:
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    W = inst.weights
    delta = cut.delta
    separated = delta[:, None] * delta[None, :] < 0
    cut_part = W * separated
    uncut_part = W - cut_part
    d_cut = cut_part.sum(axis=1)
    d_uncut = uncut_part.sum(axis=1)
    d_prime = d_cut - d_uncut
    shifted = W + np.diag(d_prime)
    eigenvalues, vectors = np.linalg.eigh(shifted)
    kernel = vectors[:, 0] if abs(eigenvalues[0]) <= eig_zero_tol(shifted) else None
    return SpectralBundle(delta=delta, cut_part=cut_part, uncut_part=uncut_part,
                          d_cut=d_cut, d_uncut=d_uncut, d=d_cut + d_uncut,
                          d_prime=d_prime, shifted=shifted,
                          eigenvalues=eigenvalues, kernel_vector=kernel)


def psd_rank_certificate(bundle: SpectralBundle) -> str:
    """"certified" iff W + D' is PSD of rank n-1 and its kernel reproduces the cut.

    Other verdicts: "not-psd" (negative eigenvalue) and "rank-deficient"
    (kernel dimension above one, or a kernel whose sign pattern does not
    match the cut).
    """
    tol = eig_zero_tol(bundle.shifted)
    ev = bundle.eigenvalues
    if ev[0] < -tol:
        return "not-psd"
    if ev.shape[0] < 2 or ev[1] <= tol or bundle.kernel_vector is None:
        return "rank-deficient"
    aligned = bundle.kernel_vector * bundle.delta
    if not ((aligned > 1e-8).all() or (aligned < -1e-8).all()):
        return "rank-deficient"
    return "certified"


@dataclass(frozen=True)
class DistinguishedReport:
    """Local stability of a cut against the two spectral-feasibility thresholds.

    The certificate above is guaranteed once gamma_local exceeds
    2 / (1 - sqrt(1 - h^2)) for h the Cheeger constant of the cut edges
    alone, and a fortiori for h replaced by the distinction coefficient
    alpha (which it dominates).
    """

    gamma_local: float
    alpha: float
    cut_cheeger: float
    alpha_threshold: float
    cheeger_threshold: float
    meets_alpha: bool
    meets_cheeger: bool
    cheeger_dominates_alpha: bool


def _spectral_threshold(x: float) -> float:
    if x <= 0.0:
        return INF
    x = min(x, 1.0)
    return 2.0 / (1.0 - math.sqrt(max(0.0, 1.0 - x * x)))


def distinguished_condition(inst: Instance, cut: Cut, max_n: int = 24) -> DistinguishedReport:
    """Measure gamma_local, alpha and h(cut edges); report threshold satisfaction."""
    bundle = build_spectral_bundle(inst, cut)
    gamma_local = local_stability_gamma(inst, cut)
    alpha = distinction_alpha(inst, cut, max_n=max_n)
    _, _, h_cut = subset_scan_minima(bundle.cut_part, None, max_n=max_n)
    thr_a = _spectral_threshold(alpha)
    thr_h = _spectral_threshold(h_cut)
    return DistinguishedReport(
        gamma_local=gamma_local, alpha=alpha, cut_cheeger=h_cut,
        alpha_threshold=thr_a, cheeger_threshold=thr_h,
        meets_alpha=gamma_local > thr_a, meets_cheeger=gamma_local > thr_h,
        cheeger_dominates_alpha=h_cut >= alpha - REL_TOL * max(1.0, abs(alpha)))


# ---------------------------------------------------------------------------
# Cuts induced by least eigenvectors of diagonal shifts.
# ---------------------------------------------------------------------------


def glev_cut(inst: Instance, shift) -> Cut | None:
    """Cut induced by the least eigenvector of W + diag(shift).

    Returns None when the least eigenvalue is degenerate or some coordinate
    of the eigenvector is too close to zero to take a side.  Raises when the
    shifted matrix is not PSD (the shift does not certify anything then).
    """
    d = np.asarray(shift, dtype=np.float64)
    if d.shape != (inst.n,):
        raise ParameterError(f"shift must be a diagonal vector of length {inst.n}")
    M = inst.weights + np.diag(d)
    tol = eig_zero_tol(M)
    eigenvalues, vectors = np.linalg.eigh(M)
    if eigenvalues[0] < -tol:
        raise PreconditionError("W + diag(shift) is not PSD")
    if eigenvalues.shape[0] > 1 and eigenvalues[1] - eigenvalues[0] <= tol:
        return None
    v = vectors[:, 0]
    if (np.abs(v) <= 1e-8).any():
        return None
    side = v > 0.0
    if side.all() or not side.any():
        return None
    return Cut(side)


def glev_stability_condition(inst: Instance, gamma: float, u) -> bool:
    """True when gamma >= max |u_i u_j| / min |u_i u_j| over vertex pairs.

    Instances live on the complete graph (absent edges have weight zero), so
    the ratio ranges over all pairs.  When the condition holds for a
    least-eigenvector u of some PSD diagonal shift of a gamma-stable
    instance, the cut induced by u is the maximum cut.
    """
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (inst.n,):
        raise ParameterError(f"u must have length {inst.n}")
    if (u == 0.0).any():
        raise ParameterError("u has a zero coordinate; the pair ratio is undefined")
    i, j = np.triu_indices(inst.n, k=1)
    products = np.abs(u[i] * u[j])
    ratio = float(products.max() / products.min())
    return gamma >= ratio * (1.0 - REL_TOL)


def glev_scaling_perturbation(inst: Instance, v) -> Instance:
    """Entrywise perturbation W'_ij = |v_i| |v_j| W_ij."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (inst.n,):
        raise ParameterError(f"v must have length {inst.n}")
    if (v == 0.0).any():
        raise ParameterError("v must have no zero coordinates")
    a = np.abs(v)
    return Instance(inst.weights * np.outer(a, a), labels=inst.labels)


# ---------------------------------------------------------------------------
# The vector relaxation: block-coordinate primal, dual extraction, rounding.
# ---------------------------------------------------------------------------


@dataclass
class GwSolution:
    """State of one relaxation solve; dual and rounding fields are filled lazily."""

    vectors: np.ndarray
    gram: np.ndarray
    primal_value: float
    converged: bool
    sweeps: int
    dual_diag: np.ndarray | None = None
    dual_value: float | None = None
    gap: float | None = None
    psd_residual: float | None = None
    kkt_residual: float | None = None
    rounded_cut: Cut | None = None
    rounded_weight: float | None = None


def gw_primal_solve(inst: Instance, rank: int | None = None, max_sweeps: int = 100_000,
                    tol: float = 1e-10, seed: int = 0) -> GwSolution:
    """Minimize sum_ij W_ij <v_i, v_j> over unit vectors by cyclic row updates.

    Each row update v_i <- -normalize(sum_j W_ij v_j) is the exact minimizer
    with the other rows fixed (rows with a vanishing update direction keep
    their current value: any unit vector is stationary there).  Stops when
    the objective change per sweep drops below ``tol`` relative, or after
    ``max_sweeps``; the result then carries converged=False.  Global
    optimality is certified a posteriori through the dual residuals, not by
    the iteration itself.
    """
    n = inst.n
    r = n if rank is None else rank
    if r < 2:
        raise ParameterError("rank must be >= 2")
    W = inst.weights
    rng = np.random.default_rng(seed)
    V = rng.normal(size=(n, r))
    V /= np.linalg.norm(V, axis=1, keepdims=True)
    stall = 1e-13 * max(1.0, float(W.max()))
    prev = float(np.einsum("ij,jk,ik->", W, V, V))
    converged = False
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        for i in range(n):
            g = W[i] @ V
            norm = np.linalg.norm(g)
            if norm > stall:
                V[i] = -g / norm
        value = float(np.einsum("ij,jk,ik->", W, V, V))
        if abs(value - prev) <= tol * (1.0 + abs(value)):
            converged = True
            prev = value
            break
        prev = value
    return GwSolution(vectors=V, gram=V @ V.T, primal_value=prev,
                      converged=converged, sweeps=sweeps)


@dataclass(frozen=True)
class DualExtraction:
    """The unique dual candidate extracted from a primal Gram matrix.

    At a true optimum W - diag(diag_values) is PSD and annihilates the Gram
    matrix; ``psd_residual`` (most negative eigenvalue, >= -tol) and
    ``kkt_residual`` (max |P (W - D)|, <= tol) quantify how close this solve
    got.  ``gap`` is |primal - dual|.
    """

    diag_values: np.ndarray
    dual_value: float
    gap: float
    psd_residual: float
    kkt_residual: float


def gw_dual_extract(inst: Instance, gram: np.ndarray) -> DualExtraction:
    """Extract D_jj = sum_i P_ji W_ij and report optimality residuals."""
    P = np.asarray(gram, dtype=np.float64)
    if P.shape != (inst.n, inst.n):
        raise ParameterError("gram matrix has the wrong shape")
    if np.abs(np.diagonal(P) - 1.0).max() > 1e-6:
        raise ParameterError("gram diagonal must be 1")
    if float(np.linalg.eigvalsh(P)[0]) < -eig_zero_tol(P):
        raise ParameterError("gram matrix must be PSD")
    W = inst.weights
    d = np.diagonal(P @ W).copy()
    A = W - np.diag(d)
    primal = float((P * W).sum())
    dual = float(d.sum())
    return DualExtraction(diag_values=d, dual_value=dual, gap=abs(primal - dual),
                          psd_residual=float(np.linalg.eigvalsh(A)[0]),
                          kkt_residual=float(np.abs(P @ A).max()))


@dataclass(frozen=True)
class GwRounding:
    """Best hyperplane rounding: the cut, its weight, and the projection
    vector u that produced it (u always lies in the span of the Gram columns)."""

    cut: Cut
    weight: float
    projection: np.ndarray


def gw_round(inst: Instance, vectors: np.ndarray, seed: int = 0, trials: int = 32) -> GwRounding:
    """Round solved vectors through uniformly random hyperplanes.

    Each trial samples a direction v and takes S = {i : <v, v_i> > 0}; the
    heaviest valid cut over all trials wins.  An exactly zero projection is
    resampled; trials whose sign pattern is one-sided yield no candidate.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    V = np.asarray(vectors, dtype=np.float64)
    if V.ndim != 2 or V.shape[0] != inst.n:
        raise ParameterError("vectors must be (n, r)")
    rng = np.random.default_rng(seed)
    best: GwRounding | None = None
    for _ in range(trials):
        for _ in range(64):
            u = V @ rng.normal(size=V.shape[1])
            if np.abs(u).max() > 0.0:
                break
        side = u > 0.0
        if side.all() or not side.any():
            continue
        cut = Cut(side)
        w = cut_weight(inst, cut)
        if best is None or w > best.weight:
            best = GwRounding(cut=cut, weight=w, projection=u)
    if best is None:
        raise SolverFailure("every rounding trial produced a one-sided pattern")
    return best


def gw_solve(inst: Instance, seed: int = 0, trials: int = 32, rank: int | None = None,
             max_sweeps: int = 100_000, tol: float = 1e-10) -> GwSolution:
    """Primal solve + dual extraction + hyperplane rounding in one call."""
    sol = gw_primal_solve(inst, rank=rank, max_sweeps=max_sweeps, tol=tol, seed=seed)
    ext = gw_dual_extract(inst, sol.gram)
    sol.dual_diag = ext.diag_values
    sol.dual_value = ext.dual_value
    sol.gap = ext.gap
    sol.psd_residual = ext.psd_residual
    sol.kkt_residual = ext.kkt_residual
    rounding = gw_round(inst, sol.vectors, seed=seed, trials=trials)
    sol.rounded_cut = rounding.cut
    sol.rounded_weight = rounding.weight
    return sol


# ---------------------------------------------------------------------------
# Bipolarity: four equivalent ways to say "the relaxation optimum is the cut".
# ---------------------------------------------------------------------------


def binary_shift(inst: Instance, cut: Cut) -> np.ndarray:
    """The canonical diagonal for a cut: d_i = -delta_i * (W delta)_i.

    W + diag(d) always annihilates delta; it is PSD exactly when the cut
    attains the relaxation optimum.  At a cut this equals D' from the
    spectral bundle.
    """
    if cut.n != inst.n:
        raise ParameterError("cut size mismatch")
    delta = cut.delta
    return -delta * (inst.weights @ delta)


@dataclass(frozen=True)
class BipolarityReport:
    """Independent verdicts for the four equivalent bipolarity conditions.

    primal_attains_binary: the solved relaxation value equals delta^T W delta.
    kernel_sign_glev: delta spans a zero eigenvector of W + diag(shift) whose
        eigenvalue is the least one.
    psd_shift: W + diag(shift) is PSD.
    dual_matches: the extracted dual diagonal equals -shift.
    """

    shift: np.ndarray
    binary_value: float
    primal_value: float
    dual_diag: np.ndarray
    eigenvalues: np.ndarray
    conditions: dict = field(default_factory=dict)
    tolerance_scale: float = 1.0

    @property
    def agree(self) -> bool:
        values = list(self.conditions.values())
        return all(values) or not any(values)

    @property
    def bipolar(self) -> bool:
        return all(self.conditions.values())


def bipolarity_check(inst: Instance, cut: Cut, seed: int = 0,
                     tol_scale: float = 1.0) -> BipolarityReport:
    """Evaluate the four bipolarity conditions independently.

    The equivalences are meaningful when ``cut`` is a maximum cut (callers
    check that against the oracle at desk scale).  ``tol_scale`` escalates
    every tolerance for borderline spectra; escalation is for reporting,
    never silent.
    """
    W = inst.weights
    delta = cut.delta
    d = binary_shift(inst, cut)
    M = W + np.diag(d)
    tol = eig_zero_tol(M) * tol_scale
    eigenvalues = np.linalg.eigh(M)[0]
    scale = weight_scale(W)
    binary_value = float(delta @ W @ delta)

    sol = gw_primal_solve(inst, seed=seed)
    ext = gw_dual_extract(inst, sol.gram)

    conditions = {
        "primal_attains_binary": bool(
            sol.converged and abs(sol.primal_value - binary_value) <= 1e-6 * scale * tol_scale),
        "kernel_sign_glev": bool(
            abs(eigenvalues[0]) <= tol and np.abs(M @ delta).max() <= tol),
        "psd_shift": bool(eigenvalues[0] >= -tol),
        "dual_matches": bool(np.abs(ext.diag_values + d).max() <= 1e-4 * scale * tol_scale),
    }
    return BipolarityReport(shift=d, binary_value=binary_value,
                            primal_value=sol.primal_value, dual_diag=ext.diag_values,
                            eigenvalues=eigenvalues, conditions=conditions,
                            tolerance_scale=tol_scale)


def strongly_bipolar_perturb(inst: Instance, cut: Cut, eps: float) -> Instance:
    """Scale the cut edges by 1 + eps.

    For a cut attaining the relaxation optimum this makes the rank-one
    +/-1 Gram matrix the *unique* optimum (the shifted matrix gains rank
    n-1), so the relaxation output reads off the cut directly.  eps = 0
    returns the instance unchanged.
    """
    if eps < 0.0:
        raise ParameterError("eps must be >= 0")
    d = binary_shift(inst, cut)
    M = inst.weights + np.diag(d)
    if float(np.linalg.eigvalsh(M)[0]) < -eig_zero_tol(M):
        raise PreconditionError("cut is not bipolar for this instance")
    if eps == 0.0:
        return inst
    delta = cut.delta
    separated = delta[:, None] * delta[None, :] < 0
    return Instance(inst.weights * np.where(separated, 1.0 + eps, 1.0), labels=inst.labels)
