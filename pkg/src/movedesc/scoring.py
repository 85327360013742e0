"""Distance-based outlier scores per taxonomy node.

Scores live in [0, 1]: an instance with no neighbor inside the radius
scores 1, an instance whose radius covers everyone scores 0, and the
in-between cases interpolate linearly on the neighbor count. The radius
is the mean pairwise Euclidean distance of the (standardized) feature
matrix, so no hand-picked cutoff enters the method.

The pairwise core is the hot path: it runs cache-blocked over row-block
pairs and spreads the blocks across a thread pool. Per-block partial
sums are reduced in a fixed order, so results are bit-identical for any
thread count.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .features import REGISTRY, FeatureVector, TaxonomyNode

ZERO_TOL = 1e-12
BLOCK = 128  # rows per block; fixed so the block grid never depends on threads


class ScoringError(Exception):
    pass


@dataclass(frozen=True)
class FeatureMatrix:
    """N instances by M selected variables, plus the column indices used."""

    ids: tuple[str, ...]
    columns: tuple[int, ...]
    data: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=np.float64)
        if arr.ndim != 2 or arr.shape != (len(self.ids), len(self.columns)):
            raise ValueError("data shape does not match ids/columns")
        if not np.all(np.isfinite(arr)):
            raise ValueError("feature matrix contains non-finite entries")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def n(self) -> int:
        return len(self.ids)

    def restrict(self, indices) -> "FeatureMatrix":
        """Column subset, by registry index."""
        col_pos = {c: i for i, c in enumerate(self.columns)}
        take = [col_pos[i] for i in indices]
        return FeatureMatrix(self.ids, tuple(indices), self.data[:, take])


@dataclass(frozen=True)
class StandardizationParams:
    mean: np.ndarray
    sd: np.ndarray
    constant: np.ndarray  # bool per column, sd <= 1e-12


@dataclass(frozen=True)
class OutlierScoreTable:
    node: str
    radius: float
    scores: dict[str, float]


def matrix_from_vectors(vectors: list[FeatureVector]) -> FeatureMatrix:
    if not vectors:
        raise ScoringError("no feature vectors")
    ids = tuple(v.trajectory_id for v in vectors)
    data = np.vstack([v.values for v in vectors])
    return FeatureMatrix(ids, tuple(range(len(REGISTRY))), data)


def standardize(matrix: FeatureMatrix) -> tuple[FeatureMatrix, StandardizationParams]:
    """Per-column z-scores with sample sd; constant columns become zero."""
    if matrix.n < 2:
        raise ScoringError("too_few_instances")
    mean = matrix.data.mean(axis=0)
    sd = matrix.data.std(axis=0, ddof=1)
    constant = sd <= ZERO_TOL
    safe_sd = np.where(constant, 1.0, sd)
    z = (matrix.data - mean) / safe_sd
    z[:, constant] = 0.0
    return (FeatureMatrix(matrix.ids, matrix.columns, z),
            StandardizationParams(mean, sd, constant))


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = os.cpu_count() or 1
    return max(1, int(threads))


def _block_starts(n: int) -> list[int]:
    return list(range(0, n, BLOCK))


def _block_tasks(n: int) -> list[tuple[int, int]]:
    starts = _block_starts(n)
    return [(i, j) for i in starts for j in starts if j >= i]


def _distance_block(x: np.ndarray, i0: int, j0: int) -> np.ndarray:
    a = x[i0:i0 + BLOCK]
    b = x[j0:j0 + BLOCK]
    diff = a[:, None, :] - b[None, :, :]
    np.square(diff, out=diff)
    d2 = diff.sum(axis=2)
    return np.sqrt(d2, out=d2)


def _pairwise_sum(x: np.ndarray, threads: int) -> float:
    """Sum of Euclidean distances over unordered row pairs.

    Partial sums are produced per block task and reduced in task order,
    independent of how the pool schedules them.
    """
    n = x.shape[0]
    tasks = _block_tasks(n)

    def run(task):
        i0, j0 = task
        d = _distance_block(x, i0, j0)
        if i0 == j0:
            return float(np.triu(d, k=1).sum())
        return float(d.sum())

    if threads == 1 or len(tasks) == 1:
        partials = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run, tasks))
    return float(np.sum(np.array(partials)))


def _neighbor_counts(x: np.ndarray, radius: float, threads: int) -> np.ndarray:
    """Per row, how many OTHER rows sit at distance <= radius (inclusive)."""
    n = x.shape[0]
    tasks = _block_tasks(n)

    def run(task):
        i0, j0 = task
        d = _distance_block(x, i0, j0)
        within = d <= radius
        if i0 == j0:
            np.fill_diagonal(within, False)
            return i0, within.sum(axis=1), None, None
        return i0, within.sum(axis=1), j0, within.sum(axis=0)

    counts = np.zeros(n, dtype=np.int64)
    if threads == 1 or len(tasks) == 1:
        results = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))
    for i0, row_counts, j0, col_counts in results:
        counts[i0:i0 + len(row_counts)] += row_counts
        if j0 is not None:
            counts[j0:j0 + len(col_counts)] += col_counts
    return counts


def mean_pairwise_distance(matrix: FeatureMatrix, threads: int | None = None) -> float:
    """Arithmetic mean Euclidean distance over all N(N-1)/2 pairs."""
    n = matrix.n
    if n < 2:
        raise ScoringError("too_few_instances")
    total = _pairwise_sum(matrix.data, _resolve_threads(threads))
    return total / (n * (n - 1) / 2)


def outlier_scores(matrix: FeatureMatrix, radius: float, node: str = "",
                   threads: int | None = None) -> OutlierScoreTable:
    """Score every instance against the given radius.

    score = 1 - (neighbors within radius) / (N - 1); the comparison is
    <=-inclusive, so identical instances with radius 0 all score 0.
    """
    n = matrix.n
    if n < 2:
        raise ScoringError("too_few_instances")
    if radius < 0:
        raise ScoringError("negative radius")
    counts = _neighbor_counts(matrix.data, radius, _resolve_threads(threads))
    scores = 1.0 - counts / (n - 1)
    return OutlierScoreTable(node, float(radius),
                             {i: float(s) for i, s in zip(matrix.ids, scores)})


def score_node(vectors: list[FeatureVector], node: TaxonomyNode,
               threads: int | None = None) -> OutlierScoreTable:
    """Standardize the full corpus, restrict to the node, score.

    Radius and scores always cover the whole corpus, even when a later
    pass classifies only a subset.
    """
    full = matrix_from_vectors(vectors)
    standardized, _ = standardize(full)
    return score_standardized_node(standardized, node, threads)


def score_standardized_node(standardized: FeatureMatrix, node: TaxonomyNode,
                            threads: int | None = None) -> OutlierScoreTable:
    """Node scoring over an already-standardized full matrix."""
    sub = standardized.restrict(node.indices)
    radius = mean_pairwise_distance(sub, threads)
    table = outlier_scores(sub, radius, node.name, threads)
    return table


def write_feature_matrix(matrix: FeatureMatrix, sink, delimiter: str = ",") -> None:
    """Delimited export: header of variable names, one row per instance."""
    if isinstance(sink, (str, Path)):
        with open(sink, "w", newline="") as fh:
            write_feature_matrix(matrix, fh, delimiter)
            return
    writer = csv.writer(sink, delimiter=delimiter, lineterminator="\n")
    writer.writerow(["id"] + [REGISTRY.names[c] for c in matrix.columns])
    for i, traj_id in enumerate(matrix.ids):
        writer.writerow([traj_id] + [repr(float(v)) for v in matrix.data[i]])


def read_feature_matrix(source, delimiter: str = ",") -> FeatureMatrix:
    """Read a feature-matrix export back; columns are mapped via the registry."""
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="") as fh:
            return read_feature_matrix(fh, delimiter)
    reader = csv.reader(source, delimiter=delimiter)
    header = next(reader)
    if not header or header[0] != "id":
        raise ScoringError("feature matrix must start with an 'id' column")
    try:
        columns = tuple(REGISTRY.index_of(name) for name in header[1:])
    except KeyError as exc:
        raise ScoringError(f"unknown variable name in header: {exc}") from None
    ids = []
    rows = []
    for row in reader:
        if not row:
            continue
        ids.append(row[0])
        rows.append([float(v) for v in row[1:]])
    return FeatureMatrix(tuple(ids), columns, np.array(rows))


def write_score_table(tables, sink, delimiter: str = ",") -> None:
    """Delimited score rows: id, node, score, radius."""
    if isinstance(sink, (str, Path)):
        with open(sink, "w", newline="") as fh:
            write_score_table(tables, fh, delimiter)
            return
    writer = csv.writer(sink, delimiter=delimiter, lineterminator="\n")
    writer.writerow(["id", "node", "score", "radius"])
    for table in tables:
        for traj_id, score in table.scores.items():
            writer.writerow([traj_id, table.node, repr(float(score)), repr(table.radius)])
