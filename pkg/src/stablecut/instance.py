"""Core data model: weighted MAXCUT instances, cuts, and subset bookkeeping.

Weights are a symmetric nonnegative matrix with zero diagonal whose support
graph is connected.  Instances and cuts are immutable after construction and
all operations here are pure functions, so everything is safe to share across
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateInstanceError,
    InvalidCutError,
    InvalidInstanceError,
    InvalidSubsetError,
    ParameterError,
)

# Relative tolerance used by every floating-point comparison in the stability
# verifiers.  The underlying theory works over exact reals.
REL_TOL = 1e-9

# Sums are declared "exactly zero" below this fraction of the total weight;
# absorbs accumulation error without masking genuinely tiny weights.
ZERO_FRACTION = 1e-12


def _support_connected(weights: np.ndarray) -> bool:
    """BFS over the positive-weight support graph."""
    n = weights.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = [0]
    while frontier:
        reach = (weights[frontier] > 0.0).any(axis=0) & ~seen
        frontier = np.flatnonzero(reach).tolist()
        seen |= reach
    return bool(seen.all())


class Instance:
    """A weighted MAXCUT instance on vertices 0..n-1.

    Attributes:
        n: vertex count (>= 2).
        weights: read-only (n, n) float64 array; symmetric, nonnegative,
            zero diagonal, connected support.
        labels: optional per-vertex metadata, not used by any algorithm.
    """

    __slots__ = ("n", "weights", "labels")

    def __init__(self, weights, labels: Sequence[str] | None = None):
        W = np.array(weights, dtype=np.float64)
        if W.ndim != 2 or W.shape[0] != W.shape[1]:
            raise InvalidInstanceError(f"weights must be square, got shape {W.shape}")
        n = W.shape[0]
        if n < 2:
            raise InvalidInstanceError("an instance needs at least 2 vertices")
        if not np.array_equal(W, W.T):
            raise InvalidInstanceError("weights must be exactly symmetric")
        if np.diagonal(W).any():
            raise InvalidInstanceError("diagonal weights must be zero")
        if (W < 0.0).any() or not np.isfinite(W).all():
            raise InvalidInstanceError("weights must be finite and nonnegative")
        if not _support_connected(W):
            raise InvalidInstanceError("positive-weight support graph must be connected")
        if labels is not None and len(labels) != n:
            raise InvalidInstanceError("labels length must equal the vertex count")
        W.flags.writeable = False
        object.__setattr__(self, "weights", W)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Instance is immutable")

    def degrees(self) -> np.ndarray:
        """Weighted degree mu(x) = sum_y w(x, y) per vertex."""
        return self.weights.sum(axis=1)

    def total_weight(self) -> float:
        """Total weight over unordered pairs: w(V)."""
        return float(self.weights.sum()) / 2.0

    def __repr__(self):
        return f"Instance(n={self.n}, total_weight={self.total_weight():g})"


class Cut:
    """A bipartition (S, S-bar), encoded by a boolean side vector.

    ``side[i]`` is True when vertex i lies in S.  Both sides must be
    nonempty.  ``delta`` is the +/-1 characteristic vector.
    """

    __slots__ = ("side",)

    def __init__(self, side):
        s = np.array(side, dtype=bool)
        if s.ndim != 1:
            raise InvalidCutError("side must be a flat boolean vector")
        if s.all() or not s.any():
            raise InvalidCutError("both sides of a cut must be nonempty")
        s.flags.writeable = False
        object.__setattr__(self, "side", s)

    def __setattr__(self, name, value):
        raise AttributeError("Cut is immutable")

    @property
    def n(self) -> int:
        return self.side.shape[0]

    @property
    def delta(self) -> np.ndarray:
        """+1 on S, -1 on the complement."""
        return np.where(self.side, 1.0, -1.0)

    def complement(self) -> "Cut":
        return Cut(~self.side)

    def members(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(S, S-bar) as sorted index tuples."""
        idx = np.flatnonzero(self.side)
        rest = np.flatnonzero(~self.side)
        return tuple(int(i) for i in idx), tuple(int(i) for i in rest)

    def __eq__(self, other):
        return isinstance(other, Cut) and np.array_equal(self.side, other.side)

    def __hash__(self):
        return hash(self.side.tobytes())

    def __repr__(self):
        s, t = self.members()
        return f"Cut({set(s)} | {set(t)})"


def same_bipartition(a: Cut, b: Cut) -> bool:
    """True when the two cuts induce the same bipartition (sides may be swapped)."""
    if a.n != b.n:
        return False
    return np.array_equal(a.side, b.side) or np.array_equal(a.side, ~b.side)


@dataclass(frozen=True)
class SubsetStats:
    """Weights of edges leaving a subset A, classified against a cut.

    xi: cut edges leaving A.  iota: non-cut edges leaving A.
    tau: all edges leaving A (xi + iota).  mu: all edges touching A,
    i.e. the sum of weighted degrees over A (internal edges count twice).
    """

    xi: float
    iota: float
    tau: float
    mu: float


def _check_cut(inst: Instance, cut: Cut) -> None:
    if cut.n != inst.n:
        raise InvalidCutError(f"cut has {cut.n} vertices, instance has {inst.n}")


def _subset_indices(inst: Instance, subset) -> np.ndarray:
    if isinstance(subset, (int, np.integer)):
        subset = (int(subset),)
    idx = np.array(sorted({int(v) for v in subset}), dtype=int)
    if idx.size == 0:
        raise InvalidSubsetError("subset must be nonempty")
    if idx.size >= inst.n:
        raise InvalidSubsetError("subset must be a proper subset of the vertices")
    if idx.min() < 0 or idx.max() >= inst.n:
        raise InvalidSubsetError("subset contains out-of-range vertices")
    return idx


def subset_stats(inst: Instance, cut: Cut, subset) -> SubsetStats:
    """Compute xi/iota/tau/mu of a vertex subset relative to a cut.

    ``subset`` may be a single vertex, a pair, or any iterable of vertices.
    ``iota = tau - xi`` holds exactly by construction, and ``tau <= mu``.
    """
    _check_cut(inst, cut)
    idx = _subset_indices(inst, subset)
    W = inst.weights
    in_a = np.zeros(inst.n, dtype=bool)
    in_a[idx] = True
    out = ~in_a
    boundary = W[np.ix_(idx, np.flatnonzero(out))]
    separated = cut.side[idx][:, None] != cut.side[out][None, :]
    xi = float(boundary[separated].sum())
    iota = float(boundary[~separated].sum())
    # tau = xi + iota and mu = tau + internal hold exactly even in floats
    tau = xi + iota
    internal = float(W[np.ix_(idx, idx)].sum())
    return SubsetStats(xi=xi, iota=iota, tau=tau, mu=tau + internal)


def cut_weight(inst: Instance, cut: Cut) -> float:
    """w(S, S-bar): direct summation over separated pairs."""
    _check_cut(inst, cut)
    s = cut.side
    return float(inst.weights[np.ix_(s, ~s)].sum())


def cut_weights_for_sides(weights: np.ndarray, sides: np.ndarray) -> np.ndarray:
    """Cut weights for many side vectors at once.

    ``sides`` is (n, k) boolean; returns the k cut weights via the quadratic
    identity 4*w(S,S-bar) = 2*w(V,V) - delta^T W delta.
    """
    delta = np.where(sides, 1.0, -1.0)
    quad = np.einsum("ik,ik->k", delta, weights @ delta)
    return (weights.sum() - quad) / 4.0


def merge_vertices(inst: Instance, u: int, v: int) -> tuple[Instance, np.ndarray]:
    """Contract u and v into one vertex; the internal weight w(u,v) is dropped.

    The merged vertex takes index min(u, v); vertices above max(u, v) shift
    down by one.  Returns the new instance and the old->new index mapping.
    """
    if u == v:
        raise ParameterError("cannot merge a vertex with itself")
    if not (0 <= u < inst.n and 0 <= v < inst.n):
        raise ParameterError("merge endpoints out of range")
    a, b = min(u, v), max(u, v)
    W = inst.weights.copy()
    W[a, :] += W[b, :]
    W[:, a] += W[:, b]
    W[a, a] = 0.0
    keep = [i for i in range(inst.n) if i != b]
    W2 = W[np.ix_(keep, keep)]
    mapping = np.array([a if x in (u, v) else (x if x < b else x - 1) for x in range(inst.n)])
    labels = None
    if inst.labels is not None:
        merged = f"{inst.labels[a]}+{inst.labels[b]}"
        labels = [merged if i == a else inst.labels[i] for i in keep]
    return Instance(W2, labels=labels), mapping


def apply_perturbation(inst: Instance, factors) -> tuple[Instance, float]:
    """Multiply weights entrywise by factors >= 1.

    Returns the perturbed instance and the implied gamma: the largest factor
    applied to a positive-weight edge.
    """
    F = np.asarray(factors, dtype=np.float64)
    if F.shape != inst.weights.shape:
        raise ParameterError(f"factors must have shape {inst.weights.shape}")
    if not np.array_equal(F, F.T):
        raise ParameterError("factors must be symmetric")
    if (F < 1.0).any() or not np.isfinite(F).all():
        raise ParameterError("every factor must be a finite number >= 1")
    W2 = inst.weights * F
    np.fill_diagonal(W2, 0.0)
    support = inst.weights > 0.0
    gamma = float(F[support].max()) if support.any() else 1.0
    return Instance(W2, labels=inst.labels), gamma


def density_coefficient(inst: Instance) -> float:
    """Smallest C such that w(x, y) <= C * tau(x) / n for every ordered pair."""
    mu = inst.degrees()
    if (mu <= 0.0).any():
        raise DegenerateInstanceError("vertex with zero degree")
    return float((inst.n * inst.weights / mu[:, None]).max())


@dataclass(frozen=True)
class MetricCheck:
    """Outcome of a metric test; ``violation`` holds the first offending tuple.

    kind is None when the instance is a metric, "nonpositive" for a zero
    off-diagonal weight (violation = (x, z)), or "triangle" for a triangle
    inequality failure (violation = (x, y, z) with w(x,z) > w(x,y)+w(y,z)).
    """

    ok: bool
    kind: str | None = None
    violation: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


def is_metric(inst: Instance) -> MetricCheck:
    """Check positivity off the diagonal and the triangle inequality."""
    W = inst.weights
    n = inst.n
    off = ~np.eye(n, dtype=bool)
    bad = (W <= 0.0) & off
    if bad.any():
        x, z = np.argwhere(bad)[0]
        return MetricCheck(False, "nonpositive", (int(x), int(z)))
    tol = REL_TOL * float(W.max())
    for y in range(n):
        through = W[:, y][:, None] + W[y, :][None, :]
        viol = W > through + tol
        viol[y, :] = False
        viol[:, y] = False
        np.fill_diagonal(viol, False)
        if viol.any():
            x, z = np.argwhere(viol)[0]
            return MetricCheck(False, "triangle", (int(x), y, int(z)))
    return MetricCheck(True)


# ---------------------------------------------------------------------------
# JSON interchange.
#
# Instance files: {"n": int, "weights": [[i, j, w], ...]} with each unordered
# pair listed at most once; omitted pairs have weight zero.  Cut files:
# {"side": [0/1, ...]}.  Floats round-trip bit-exactly (json emits the
# shortest decimal that parses back to the same float64, 17 significant
# digits when needed).
# ---------------------------------------------------------------------------


def instance_to_json(inst: Instance) -> dict:
    i, j = np.nonzero(np.triu(inst.weights))
    triples = [[int(a), int(b), float(inst.weights[a, b])] for a, b in zip(i, j)]
    return {"n": inst.n, "weights": triples}


def instance_from_json(doc: dict) -> Instance:
    if not isinstance(doc, dict) or "n" not in doc or "weights" not in doc:
        raise InvalidInstanceError('instance JSON needs keys "n" and "weights"')
    n = int(doc["n"])
    if n < 2:
        raise InvalidInstanceError("instance JSON must have n >= 2")
    W = np.zeros((n, n))
    seen = set()
    for entry in doc["weights"]:
        if len(entry) != 3:
            raise InvalidInstanceError(f"weight entry must be [i, j, w], got {entry!r}")
        i, j, w = int(entry[0]), int(entry[1]), float(entry[2])
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise InvalidInstanceError(f"bad vertex pair ({i}, {j})")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise InvalidInstanceError(f"pair {key} listed more than once")
        seen.add(key)
        W[i, j] = w
        W[j, i] = w
    return Instance(W)


def save_instance(inst: Instance, path) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_json(inst), fh)
        fh.write("\n")


def load_instance(path) -> Instance:
    with open(path) as fh:
        return instance_from_json(json.load(fh))


def cut_to_json(cut: Cut) -> dict:
    return {"side": [int(b) for b in cut.side]}


def cut_from_json(doc: dict) -> Cut:
    if not isinstance(doc, dict) or "side" not in doc:
        raise InvalidCutError('cut JSON needs key "side"')
    return Cut([bool(int(b)) for b in doc["side"]])


def save_cut(cut: Cut, path) -> None:
    with open(path, "w") as fh:
        json.dump(cut_to_json(cut), fh)
        fh.write("\n")


def load_cut(path) -> Cut:
    with open(path) as fh:
        return cut_from_json(json.load(fh))
