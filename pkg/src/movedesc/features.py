"""Trajectory vectorization and the movement-variable taxonomy.

Each trajectory becomes a 72-variable vector laid out in four fixed
blocks:

* Curvature (15): straightness ratios ``dg_s{k}_{j}`` for signature
  k = 1..5, part j = 1..k. Each signature splits the path into k
  sub-segments of equal arc length; the variable is endpoint distance
  over arc length, so 1 means perfectly straight.
* Indentation (19): ``ind_*`` summary statistics of the turning-angle
  series.
* Speed (19): ``spd_*`` summary statistics of the speed series.
* Acceleration (19): ``acc_*`` summary statistics of the
  acceleration-magnitude series.

The taxonomy groups these indices into named nodes: the root covers all
72, Kinematic = Speed + Acceleration, Geometric = Curvature +
Indentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kinematics
from .ingest import Trajectory

ZERO_TOL = 1e-12
DEGENERATE_LENGTH_M = 1e-9

STAT_SUFFIXES = (
    "distinct", "zeros", "mean", "sem",
    "q05", "q10", "q25", "q50", "q75", "q90", "q95",
    "sd", "cv", "mad", "iqr", "skew", "kurt", "min", "max",
)
QUANTILE_PROBS = (0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95)

N_SIGNATURES = 5
N_CURVATURE = N_SIGNATURES * (N_SIGNATURES + 1) // 2  # 15
N_VARIABLES = N_CURVATURE + 3 * len(STAT_SUFFIXES)  # 72

ROOT = "All"
KINEMATIC = "Kinematic"
GEOMETRIC = "Geometric"
SPEED = "Speed"
ACCELERATION = "Acceleration"
CURVATURE = "Curvature"
INDENTATION = "Indentation"


class EmptySeriesError(Exception):
    pass


def _dg_names() -> list[str]:
    return [f"dg_s{k}_{j}" for k in range(1, N_SIGNATURES + 1) for j in range(1, k + 1)]


@dataclass(frozen=True)
class VariableRegistry:
    """Fixed, documented ordering of the 72 variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def index_of(self, name: str) -> int:
        return self._index[name]

    def __len__(self) -> int:
        return len(self.names)


def default_registry() -> VariableRegistry:
    names = _dg_names()
    for prefix in ("ind", "spd", "acc"):
        names.extend(f"{prefix}_{s}" for s in STAT_SUFFIXES)
    return VariableRegistry(tuple(names))


REGISTRY = default_registry()

_CURV_IDX = tuple(range(0, N_CURVATURE))
_IND_IDX = tuple(range(N_CURVATURE, N_CURVATURE + 19))
_SPD_IDX = tuple(range(N_CURVATURE + 19, N_CURVATURE + 38))
_ACC_IDX = tuple(range(N_CURVATURE + 38, N_VARIABLES))


@dataclass(frozen=True)
class FeatureVector:
    trajectory_id: str
    values: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.values, dtype=np.float64)
        if arr.shape != (N_VARIABLES,):
            raise ValueError(f"expected {N_VARIABLES} values, got {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)


@dataclass(frozen=True)
class TaxonomyNode:
    name: str
    indices: tuple[int, ...]
    children: tuple[str, ...] = ()


class Taxonomy:
    """Tree of named variable groups over the registry indices.

    Leaves partition the 72 indices; internal nodes carry the union of
    their children. Custom taxonomies may regroup the same variables but
    every node must keep at least one variable.
    """

    def __init__(self, nodes: dict[str, TaxonomyNode], root: str = ROOT,
                 registry: VariableRegistry = REGISTRY):
        self.registry = registry
        self.root = root
        self.nodes = dict(nodes)
        self._check()

    def _check(self):
        if self.root not in self.nodes:
            raise ValueError(f"root node {self.root!r} missing")
        leaf_union: list[int] = []
        for node in self.nodes.values():
            if not node.indices:
                raise ValueError(f"taxonomy node {node.name!r} has no variables")
            for child in node.children:
                if child not in self.nodes:
                    raise ValueError(f"unknown child node {child!r}")
                if not set(self.nodes[child].indices) <= set(node.indices):
                    raise ValueError(f"node {node.name!r} does not cover child {child!r}")
            if not node.children:
                leaf_union.extend(node.indices)
        if len(leaf_union) != len(set(leaf_union)):
            raise ValueError("leaf index sets overlap")

    def node(self, name: str) -> TaxonomyNode:
        try:
            return self.nodes[name]
        except KeyError:
            raise KeyError(f"unknown taxonomy node {name!r}") from None

    def indices(self, name: str) -> tuple[int, ...]:
        return self.node(name).indices

    def leaves(self) -> list[str]:
        return [n.name for n in self.nodes.values() if not n.children]

    def names(self) -> list[str]:
        return list(self.nodes)

    @classmethod
    def from_name_lists(cls, mapping: dict[str, list[str]],
                        registry: VariableRegistry = REGISTRY) -> "Taxonomy":
        """Build a flat two-level taxonomy from node -> variable-name lists.

        A root node covering the union of all listed variables is added on
        top; the named nodes become its leaves.
        """
        nodes: dict[str, TaxonomyNode] = {}
        union: list[int] = []
        for name, var_names in mapping.items():
            idx = tuple(sorted(registry.index_of(v) for v in var_names))
            nodes[name] = TaxonomyNode(name, idx)
            union.extend(idx)
        nodes[ROOT] = TaxonomyNode(ROOT, tuple(sorted(set(union))), tuple(mapping))
        return cls(nodes, registry=registry)


def default_taxonomy() -> Taxonomy:
    """The stock two-level tree: Kinematic/Geometric over four leaves."""
    nodes = {
        ROOT: TaxonomyNode(ROOT, tuple(range(N_VARIABLES)), (KINEMATIC, GEOMETRIC)),
        KINEMATIC: TaxonomyNode(KINEMATIC, _SPD_IDX + _ACC_IDX, (SPEED, ACCELERATION)),
        GEOMETRIC: TaxonomyNode(GEOMETRIC, _CURV_IDX + _IND_IDX, (CURVATURE, INDENTATION)),
        SPEED: TaxonomyNode(SPEED, _SPD_IDX),
        ACCELERATION: TaxonomyNode(ACCELERATION, _ACC_IDX),
        CURVATURE: TaxonomyNode(CURVATURE, _CURV_IDX),
        INDENTATION: TaxonomyNode(INDENTATION, _IND_IDX),
    }
    return Taxonomy(nodes)


def summarize_distribution(values, prefix: str) -> dict[str, float]:
    """The 19 summary statistics of a series, keyed ``{prefix}_{stat}``.

    Order and conventions are fixed: distinct count (1e-12 tolerance),
    zero count (|v| <= 1e-12), mean, standard error, quantiles at
    5/10/25/50/75/90/95% (linear interpolation), sample sd, coefficient
    of variation, median absolute deviation, interquartile range,
    adjusted Fisher-Pearson skewness, sample excess kurtosis, min, max.
    Degenerate cases collapse to 0 (sem/sd for N=1, cv for mean ~ 0,
    skew for N<3, kurtosis for N<4, and all of sd/cv/skew/kurt for a
    constant series) so downstream distances stay finite.
    """
    v = np.asarray(values, dtype=np.float64).ravel()
    n = v.size
    if n == 0:
        raise EmptySeriesError("empty_series")
    svals = np.sort(v)
    constant = svals[0] == svals[-1]

    distinct = 1.0 + np.count_nonzero(np.diff(svals) > ZERO_TOL)
    zeros = float(np.count_nonzero(np.abs(v) <= ZERO_TOL))
    mean = float(v.mean())
    if n == 1 or constant:
        sd = 0.0
    else:
        sd = float(v.std(ddof=1))
    sem = sd / math.sqrt(n) if n > 1 else 0.0
    qs = [float(q) for q in np.quantile(svals, QUANTILE_PROBS)]
    cv = sd / mean if abs(mean) > ZERO_TOL else 0.0
    med = float(np.median(svals))
    mad = float(np.median(np.abs(v - med)))
    iqr = qs[4] - qs[2]

    # moment ratios on standardized deviations: identical algebra to
    # m3 / m2^1.5 and m4 / m2^2 but immune to underflow on tiny-magnitude data
    dev = v - mean
    m2 = float(np.mean(dev * dev))
    z = dev / math.sqrt(m2) if m2 > 0.0 else dev
    if n >= 3 and not constant and m2 > 0.0:
        g1 = float(np.mean(z ** 3))
        skew = g1 * math.sqrt(n * (n - 1)) / (n - 2)
    else:
        skew = 0.0
    if n >= 4 and not constant and m2 > 0.0:
        g2 = float(np.mean(z ** 4)) - 3.0
        kurt = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    else:
        kurt = 0.0

    stats = [distinct, zeros, mean, sem, *qs, sd, cv, mad, iqr,
             skew, kurt, float(svals[0]), float(svals[-1])]
    return {f"{prefix}_{s}": float(val) for s, val in zip(STAT_SUFFIXES, stats)}


def distance_geometry_signatures(traj: Trajectory) -> np.ndarray:
    """The 15 straightness ratios, signature-major order.

    Signature k splits the polyline into k sub-segments of equal arc
    length (endpoints linearly interpolated along the path); part j is
    the ground distance between sub-segment j's endpoints divided by its
    arc length. A stationary trajectory (total length <= 1e-9 m) is
    defined as perfectly straight: all ones.
    """
    seg = kinematics.step_distances(traj)
    cum = np.concatenate(([0.0], np.cumsum(seg)))
    total = float(cum[-1])
    if total <= DEGENERATE_LENGTH_M:
        return np.ones(N_CURVATURE)

    out = np.empty(N_CURVATURE)
    pos = 0
    for k in range(1, N_SIGNATURES + 1):
        marks = np.linspace(0.0, total, k + 1)
        px = np.interp(marks, cum, traj.x)
        py = np.interp(marks, cum, traj.y)
        chords = kinematics.path_distances(px, py, traj.mode)
        ratios = np.clip(chords / (total / k), 0.0, 1.0)
        out[pos:pos + k] = ratios
        pos += k
    return out


def build_feature_vector(traj: Trajectory) -> FeatureVector:
    """Vectorize one admitted trajectory (needs at least 3 fixes)."""
    values = np.empty(N_VARIABLES)
    values[list(_CURV_IDX)] = distance_geometry_signatures(traj)
    ind = summarize_distribution(kinematics.turning_angle_series(traj).values, "ind")
    spd = summarize_distribution(kinematics.speed_series(traj).values, "spd")
    acc = summarize_distribution(kinematics.acceleration_series(traj).values, "acc")
    values[list(_IND_IDX)] = list(ind.values())
    values[list(_SPD_IDX)] = list(spd.values())
    values[list(_ACC_IDX)] = list(acc.values())
    return FeatureVector(traj.id, values)


def build_feature_vectors(trajectories) -> list[FeatureVector]:
    return [build_feature_vector(t) for t in trajectories]
