"""Two-pass behavior description of a trajectory corpus.

Pass 1 scores every instance against two top-level taxonomy nodes
(Kinematic on x, Geometric on y by default) and classifies each into a
quadrant of the score plane. Instances that are uncommon on exactly one
axis ("pure" behaviors) are re-examined in pass 2 one taxonomy level
deeper: pure-Geometric against Curvature/Indentation, pure-Kinematic
against Speed/Acceleration. Hybrid instances are not refined.

Zone numbering follows the quadrant convention: 0 = common (both scores
under the threshold), 1 = uncommon on y only, 2 = uncommon on x only,
3 = hybrid. Reports should prefer the node-named labels from
``zone_label`` over bare numbers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import Config
from .features import (FeatureVector, Taxonomy, build_feature_vectors,
                       default_taxonomy)
from .ingest import Trajectory
from .scoring import (ScoringError, matrix_from_vectors,
                      score_standardized_node, standardize)

DEFAULT_THRESHOLD = 0.5


class Zone(enum.IntEnum):
    COMMON = 0
    UNCOMMON_Y = 1
    UNCOMMON_X = 2
    HYBRID = 3


def classify_zone(x_score: float, y_score: float,
                  threshold: float = DEFAULT_THRESHOLD) -> Zone:
    """Quadrant of the (x, y) score plane; ties count as uncommon."""
    x_hot = x_score >= threshold
    y_hot = y_score >= threshold
    if x_hot and y_hot:
        return Zone.HYBRID
    if x_hot:
        return Zone.UNCOMMON_X
    if y_hot:
        return Zone.UNCOMMON_Y
    return Zone.COMMON


def zone_label(zone: Zone, x_node: str, y_node: str) -> str:
    """Node-named display label for a zone in a given pass."""
    if zone == Zone.COMMON:
        return "common"
    if zone == Zone.UNCOMMON_X:
        return f"pure {x_node}"
    if zone == Zone.UNCOMMON_Y:
        return f"pure {y_node}"
    return f"hybrid {x_node}/{y_node}"


@dataclass(frozen=True)
class PassRecord:
    id: str
    x_score: float
    y_score: float
    zone: Zone | None  # set only for instances classified in this pass


@dataclass(frozen=True)
class PassResult:
    x_node: str
    y_node: str
    threshold: float
    radius_x: float
    radius_y: float
    records: tuple[PassRecord, ...]       # every corpus instance, corpus order
    classified_ids: tuple[str, ...]

    @property
    def zone_counts(self) -> dict[Zone, int]:
        counts = {z: 0 for z in Zone}
        for rec in self.records:
            if rec.zone is not None:
                counts[rec.zone] += 1
        return counts

    def ids_in_zone(self, zone: Zone) -> list[str]:
        return [r.id for r in self.records if r.zone == zone]

    def record_for(self, traj_id: str) -> PassRecord:
        for rec in self.records:
            if rec.id == traj_id:
                return rec
        raise KeyError(traj_id)


@dataclass(frozen=True)
class BreakdownSegment:
    label: str
    count: int
    percent: float
    children: tuple["BreakdownSegment", ...] = ()


@dataclass(frozen=True)
class DatasetDescription:
    ids: tuple[str, ...]
    pass1: PassResult
    pass2_geometric: PassResult
    pass2_kinematic: PassResult
    breakdown: tuple[BreakdownSegment, ...]

    @property
    def n_instances(self) -> int:
        return len(self.ids)

    @property
    def radii(self) -> dict[str, float]:
        return {
            self.pass1.x_node: self.pass1.radius_x,
            self.pass1.y_node: self.pass1.radius_y,
            self.pass2_geometric.x_node: self.pass2_geometric.radius_x,
            self.pass2_geometric.y_node: self.pass2_geometric.radius_y,
            self.pass2_kinematic.x_node: self.pass2_kinematic.radius_x,
            self.pass2_kinematic.y_node: self.pass2_kinematic.radius_y,
        }


@dataclass(frozen=True)
class EffectivenessReport:
    pass1_effective: bool
    pass2_kinematic_successful: bool
    pass2_geometric_successful: bool
    pass2_effective: bool
    overall_effective: bool
    pass1_outside_fraction: float
    kinematic_refined_fraction: float
    geometric_refined_fraction: float


def run_pass(vectors: Sequence[FeatureVector], x_node_name: str, y_node_name: str,
             classify_subset: Iterable[str] | None = None,
             taxonomy: Taxonomy | None = None, threshold: float = DEFAULT_THRESHOLD,
             threads: int | None = None,
             standardized=None) -> PassResult:
    """Score two nodes over the full corpus, classify a subset.

    Scores and radii always come from every instance; ``classify_subset``
    (default: everyone) controls which instances get a zone.
    """
    taxonomy = taxonomy or default_taxonomy()
    if standardized is None:
        standardized, _ = standardize(matrix_from_vectors(list(vectors)))
    subset = set(standardized.ids if classify_subset is None else classify_subset)
    unknown = subset - set(standardized.ids)
    if unknown:
        raise ScoringError(f"classify subset contains unknown ids: {sorted(unknown)[:3]}")

    tx = score_standardized_node(standardized, taxonomy.node(x_node_name), threads)
    ty = score_standardized_node(standardized, taxonomy.node(y_node_name), threads)
    records = []
    classified = []
    for traj_id in standardized.ids:
        xs = tx.scores[traj_id]
        ys = ty.scores[traj_id]
        zone = None
        if traj_id in subset:
            zone = classify_zone(xs, ys, threshold)
            classified.append(traj_id)
        records.append(PassRecord(traj_id, xs, ys, zone))
    return PassResult(x_node_name, y_node_name, threshold, tx.radius, ty.radius,
                      tuple(records), tuple(classified))


def _axis_of(pass_result: PassResult, node_name: str) -> Zone:
    """Zone meaning 'uncommon on node_name only' for this pass's axes."""
    if pass_result.x_node == node_name:
        return Zone.UNCOMMON_X
    if pass_result.y_node == node_name:
        return Zone.UNCOMMON_Y
    raise ValueError(f"node {node_name!r} is on neither axis of this pass")


def _inner_breakdown(pass2: PassResult, total: int) -> tuple[BreakdownSegment, ...]:
    counts = pass2.zone_counts
    labels = (
        (zone_label(Zone.UNCOMMON_X, pass2.x_node, pass2.y_node), counts[Zone.UNCOMMON_X]),
        (zone_label(Zone.UNCOMMON_Y, pass2.x_node, pass2.y_node), counts[Zone.UNCOMMON_Y]),
        (zone_label(Zone.HYBRID, pass2.x_node, pass2.y_node), counts[Zone.HYBRID]),
        (f"common within {pass2.x_node}/{pass2.y_node}", counts[Zone.COMMON]),
    )
    return tuple(BreakdownSegment(label, c, 100.0 * c / total)
                 for label, c in labels if c > 0)


def build_breakdown(pass1: PassResult, pass2_geometric: PassResult,
                    pass2_kinematic: PassResult, kinematic_node: str,
                    geometric_node: str) -> tuple[BreakdownSegment, ...]:
    """Two-level percentage tree over the whole corpus (outer/inner rings)."""
    total = len(pass1.records)
    counts = pass1.zone_counts
    pure_kin_zone = _axis_of(pass1, kinematic_node)
    pure_geo_zone = _axis_of(pass1, geometric_node)
    segments = [
        BreakdownSegment("common", counts[Zone.COMMON],
                         100.0 * counts[Zone.COMMON] / total),
        BreakdownSegment(f"pure {kinematic_node}", counts[pure_kin_zone],
                         100.0 * counts[pure_kin_zone] / total,
                         _inner_breakdown(pass2_kinematic, total)),
        BreakdownSegment(f"pure {geometric_node}", counts[pure_geo_zone],
                         100.0 * counts[pure_geo_zone] / total,
                         _inner_breakdown(pass2_geometric, total)),
        BreakdownSegment(f"hybrid {pass1.x_node}/{pass1.y_node}", counts[Zone.HYBRID],
                         100.0 * counts[Zone.HYBRID] / total),
    ]
    return tuple(segments)


def describe_vectors(vectors: Sequence[FeatureVector], taxonomy: Taxonomy | None = None,
                     config: Config | None = None) -> DatasetDescription:
    """Run both passes over pre-built feature vectors."""
    cfg = config or Config()
    taxonomy = taxonomy or cfg.taxonomy_object()
    if len(vectors) < 2:
        raise ScoringError("too_few_instances")
    standardized, _ = standardize(matrix_from_vectors(list(vectors)))

    pass1 = run_pass(vectors, cfg.pass1_x, cfg.pass1_y, None, taxonomy,
                     cfg.threshold, cfg.threads, standardized)
    pure_kin = pass1.ids_in_zone(_axis_of(pass1, cfg.pass2_kinematic_source))
    pure_geo = pass1.ids_in_zone(_axis_of(pass1, cfg.pass2_geometric_source))
    if not cfg.refine:
        pure_kin, pure_geo = [], []
    pass2_geo = run_pass(vectors, cfg.pass2_geometric_x, cfg.pass2_geometric_y,
                         pure_geo, taxonomy, cfg.threshold, cfg.threads, standardized)
    pass2_kin = run_pass(vectors, cfg.pass2_kinematic_x, cfg.pass2_kinematic_y,
                         pure_kin, taxonomy, cfg.threshold, cfg.threads, standardized)
    breakdown = build_breakdown(pass1, pass2_geo, pass2_kin,
                                cfg.pass2_kinematic_source, cfg.pass2_geometric_source)
    return DatasetDescription(standardized.ids, pass1, pass2_geo, pass2_kin, breakdown)


def describe_corpus(trajectories: Sequence[Trajectory], taxonomy: Taxonomy | None = None,
                    config: Config | None = None) -> DatasetDescription:
    """Vectorize admitted trajectories and run the two-pass description."""
    if len(trajectories) < 2:
        raise ScoringError("too_few_instances")
    return describe_vectors(build_feature_vectors(trajectories), taxonomy, config)


def evaluate_effectiveness(desc: DatasetDescription) -> EffectivenessReport:
    """Majority criteria: pass 1 must pull >50% of instances out of the
    common zone; a pass-2 branch succeeds when >50% of its parent's pure
    instances refine to a single leaf behavior. Empty branches fail
    quietly rather than erroring.
    """
    n = desc.n_instances
    common = desc.pass1.zone_counts[Zone.COMMON]
    outside = 1.0 - common / n
    pass1_effective = outside > 0.5

    def branch(pass2: PassResult) -> tuple[bool, float]:
        denom = len(pass2.classified_ids)
        if denom == 0:
            return False, 0.0
        counts = pass2.zone_counts
        refined = counts[Zone.UNCOMMON_X] + counts[Zone.UNCOMMON_Y]
        frac = refined / denom
        return frac > 0.5, frac

    kin_ok, kin_frac = branch(desc.pass2_kinematic)
    geo_ok, geo_frac = branch(desc.pass2_geometric)
    pass2_effective = kin_ok or geo_ok
    return EffectivenessReport(
        pass1_effective=pass1_effective,
        pass2_kinematic_successful=kin_ok,
        pass2_geometric_successful=geo_ok,
        pass2_effective=pass2_effective,
        overall_effective=pass1_effective and pass2_effective,
        pass1_outside_fraction=outside,
        kinematic_refined_fraction=kin_frac,
        geometric_refined_fraction=geo_frac,
    )
