"""K-means exemplars for the common (zone 0) instances.

The cluster count comes from the elbow rule, read as the largest second
difference of the within-cluster sum of squares curve; each cluster is
then represented by the member nearest its centroid. Everything is
seeded, restarted a fixed number of times, and tie-broken by id, so the
same corpus always yields the same exemplars.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .features import FeatureVector
from .scoring import matrix_from_vectors, standardize

RESTARTS = 50
MAX_ITER = 100
FLAT_TOL = 1e-9


@dataclass(frozen=True)
class KMeansResult:
    labels: np.ndarray
    centers: np.ndarray
    inertia: float


@dataclass(frozen=True)
class ExemplarResult:
    k: int
    exemplar_ids: tuple[str, ...]          # one per cluster, cluster order
    assignments: dict[str, int]            # id -> cluster label
    inertia_curve: tuple[float, ...]       # wcss for k = 1..k_max tried


def _plusplus_init(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    d2 = np.sum((x - centers[0]) ** 2, axis=1)
    for c in range(1, k):
        total = d2.sum()
        if total <= 0.0:
            centers[c:] = x[rng.integers(n, size=k - c)]
            break
        probs = d2 / total
        centers[c] = x[rng.choice(n, p=probs)]
        d2 = np.minimum(d2, np.sum((x - centers[c]) ** 2, axis=1))
    return centers


def _assign(x: np.ndarray, centers: np.ndarray) -> np.ndarray:
    # argmin of |x - c|^2 = argmin of |c|^2 - 2 x.c (the |x|^2 term is
    # constant per row); the matmul form keeps large corpora fast
    c2 = (centers * centers).sum(axis=1)
    return (c2[None, :] - 2.0 * (x @ centers.T)).argmin(axis=1)


def _lloyd(x: np.ndarray, k: int, rng: np.random.Generator) -> KMeansResult:
    centers = _plusplus_init(x, k, rng)
    labels = _assign(x, centers)
    for _ in range(MAX_ITER):
        for c in range(k):
            members = x[labels == c]
            if len(members):
                centers[c] = members.mean(axis=0)
            else:
                # re-seed an empty cluster on the point farthest from its center
                far = np.argmax(((x - centers[_assign(x, centers)]) ** 2).sum(axis=1))
                centers[c] = x[far]
        new_labels = _assign(x, centers)
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
    inertia = float(((x - centers[labels]) ** 2).sum())
    return KMeansResult(labels, centers, inertia)


def kmeans(x: np.ndarray, k: int, seed: int = 0, restarts: int = RESTARTS) -> KMeansResult:
    """Best-of-``restarts`` Lloyd runs with k-means++ seeding."""
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        result = _lloyd(x, k, rng)
        if best is None or result.inertia < best.inertia:
            best = result
    return best


def elbow_k(inertias: np.ndarray) -> int:
    """Pick k by the largest second difference of the inertia curve.

    ``inertias[i]`` is the wcss for k = i + 1. Falls back to 1 when the
    curve is too short or flat to bend.
    """
    w = np.asarray(inertias, dtype=np.float64)
    if w.size < 3 or (w.max() - w.min()) <= FLAT_TOL:
        return 1
    second = w[:-2] - 2.0 * w[1:-1] + w[2:]
    return int(np.argmax(second)) + 2  # second[i] belongs to k = i + 2


def zone0_exemplars(vectors: list[FeatureVector], k_max: int = 10,
                    seed: int = 0) -> ExemplarResult:
    """Cluster the common instances and name one exemplar per cluster.

    Rows are standardized before clustering. With fewer than 3 instances
    a single cluster is used; ties for the centroid-nearest member break
    toward the smaller id.
    """
    if not vectors:
        return ExemplarResult(0, (), {}, ())
    matrix = matrix_from_vectors(vectors)
    if matrix.n == 1:
        return ExemplarResult(1, (matrix.ids[0],), {matrix.ids[0]: 0}, (0.0,))
    standardized, _ = standardize(matrix)
    x = standardized.data

    k_cap = min(k_max, matrix.n)
    runs = [kmeans(x, k, seed) for k in range(1, k_cap + 1)]
    curve = tuple(r.inertia for r in runs)
    k = 1 if matrix.n < 3 else elbow_k(np.array(curve))
    chosen = runs[k - 1]

    exemplars = []
    for c in range(k):
        member_idx = np.flatnonzero(chosen.labels == c)
        if member_idx.size == 0:
            continue
        d2 = ((x[member_idx] - chosen.centers[c]) ** 2).sum(axis=1)
        best = min((float(d2[i]), matrix.ids[member_idx[i]]) for i in range(len(member_idx)))
        exemplars.append(best[1])
    assignments = {traj_id: int(lbl) for traj_id, lbl in zip(matrix.ids, chosen.labels)}
    return ExemplarResult(k, tuple(exemplars), assignments, curve)
