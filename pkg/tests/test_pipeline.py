import numpy as np
import pytest

import helpers
from movedesc.config import Config
from movedesc.features import build_feature_vectors
from movedesc.ingest import Trajectory
from movedesc.pipeline import (Zone, classify_zone, describe_corpus,
                               describe_vectors,
                               evaluate_effectiveness, run_pass, zone_label)
from movedesc.scoring import ScoringError
from movedesc.synth import CorpusSpec, generate_synthetic_corpus


# -------------------------------------------------------------------- zones

def test_zone_quadrants():
    assert classify_zone(0.3, 0.3) == Zone.COMMON
    assert classify_zone(0.2, 0.8) == Zone.UNCOMMON_Y
    assert classify_zone(0.9, 0.1) == Zone.UNCOMMON_X
    assert classify_zone(0.7, 0.7) == Zone.HYBRID


def test_zone_threshold_ties_count_as_uncommon():
    assert classify_zone(0.5, 0.5) == Zone.HYBRID
    assert classify_zone(0.5, 0.2) == Zone.UNCOMMON_X
    assert classify_zone(0.2, 0.5) == Zone.UNCOMMON_Y


def test_zone_custom_threshold():
    assert classify_zone(0.6, 0.6, threshold=0.7) == Zone.COMMON
    assert classify_zone(0.6, 0.8, threshold=0.7) == Zone.UNCOMMON_Y


def test_zone_partition_on_grid():
    for x in np.linspace(0, 1, 21):
        for y in np.linspace(0, 1, 21):
            zone = classify_zone(x, y)
            expected = (Zone.HYBRID if x >= 0.5 and y >= 0.5 else
                        Zone.UNCOMMON_X if x >= 0.5 else
                        Zone.UNCOMMON_Y if y >= 0.5 else Zone.COMMON)
            assert zone == expected


def test_threshold_monotonicity():
    grid = np.linspace(0, 1, 21)
    for t1, t2 in ((0.3, 0.5), (0.5, 0.7), (0.3, 0.7)):
        for x in grid:
            for y in grid:
                if classify_zone(x, y, t1) == Zone.COMMON:
                    assert classify_zone(x, y, t2) == Zone.COMMON


def test_zone_labels_are_node_named():
    assert zone_label(Zone.COMMON, "Kinematic", "Geometric") == "common"
    assert zone_label(Zone.UNCOMMON_X, "Kinematic", "Geometric") == "pure Kinematic"
    assert zone_label(Zone.UNCOMMON_Y, "Kinematic", "Geometric") == "pure Geometric"
    assert zone_label(Zone.HYBRID, "Speed", "Acceleration") == "hybrid Speed/Acceleration"


# -------------------------------------------------------------------- passes

def mixed_corpus(seed=0):
    spec = CorpusSpec(n_baseline=30, n_speed_burst=5, n_zigzag=5, seed=seed,
                      n_fixes=40)
    trajectories, truth = generate_synthetic_corpus(spec)
    return build_feature_vectors(trajectories), truth


def test_pass1_classifies_everyone():
    vectors, _ = mixed_corpus()
    result = run_pass(vectors, "Kinematic", "Geometric")
    assert len(result.records) == len(vectors)
    assert len(result.classified_ids) == len(vectors)
    assert sum(result.zone_counts.values()) == len(vectors)
    for rec in result.records:
        assert rec.zone is not None
        assert 0.0 <= rec.x_score <= 1.0 and 0.0 <= rec.y_score <= 1.0


def test_pass_with_subset_scores_all_classifies_some():
    vectors, _ = mixed_corpus()
    subset = [v.trajectory_id for v in vectors[:7]]
    result = run_pass(vectors, "Curvature", "Indentation", subset)
    assert len(result.records) == len(vectors)
    assert set(result.classified_ids) == set(subset)
    classified = [r for r in result.records if r.zone is not None]
    assert len(classified) == len(subset)
    assert sum(result.zone_counts.values()) == len(subset)


def test_pass_with_empty_subset():
    vectors, _ = mixed_corpus()
    result = run_pass(vectors, "Speed", "Acceleration", [])
    assert result.classified_ids == ()
    assert all(r.zone is None for r in result.records)
    assert sum(result.zone_counts.values()) == 0


def test_pass_rejects_unknown_subset_ids():
    vectors, _ = mixed_corpus()
    with pytest.raises(ScoringError):
        run_pass(vectors, "Speed", "Acceleration", ["not-a-real-id"])


# -------------------------------------------------------------- description

def test_describe_pass2_subset_containment():
    vectors, _ = mixed_corpus()
    desc = describe_vectors(vectors)
    pure_geo = set(desc.pass1.ids_in_zone(Zone.UNCOMMON_Y))
    pure_kin = set(desc.pass1.ids_in_zone(Zone.UNCOMMON_X))
    hybrid = set(desc.pass1.ids_in_zone(Zone.HYBRID))
    assert set(desc.pass2_geometric.classified_ids) == pure_geo
    assert set(desc.pass2_kinematic.classified_ids) == pure_kin
    assert not hybrid & set(desc.pass2_geometric.classified_ids)
    assert not hybrid & set(desc.pass2_kinematic.classified_ids)


def test_describe_breakdown_sums():
    vectors, _ = mixed_corpus()
    desc = describe_vectors(vectors)
    outer_total = sum(seg.percent for seg in desc.breakdown)
    assert outer_total == pytest.approx(100.0, abs=0.5)
    assert sum(seg.count for seg in desc.breakdown) == len(vectors)
    for seg in desc.breakdown:
        if seg.children:
            assert sum(c.count for c in seg.children) == seg.count
            assert sum(c.percent for c in seg.children) == pytest.approx(seg.percent, abs=0.5)


def test_describe_deterministic_across_runs_and_threads():
    vectors, _ = mixed_corpus()
    desc1 = describe_vectors(vectors, config=Config(threads=1))
    desc8 = describe_vectors(vectors, config=Config(threads=8))
    assert desc1 == desc8
    again = describe_vectors(vectors, config=Config(threads=1))
    assert desc1 == again


def test_identical_corpus_all_common():
    t = np.arange(12.0)
    vectors = build_feature_vectors(
        [Trajectory(f"c{i}", t, 3 * t, t) for i in range(8)])
    desc = describe_vectors(vectors)
    assert desc.pass1.zone_counts[Zone.COMMON] == 8
    outer = {seg.label: seg for seg in desc.breakdown}
    assert outer["common"].percent == pytest.approx(100.0)
    for seg in desc.breakdown:
        if seg.label != "common":
            assert seg.count == 0 and not seg.children


def test_describe_needs_two_instances():
    t = np.arange(12.0)
    vectors = build_feature_vectors([Trajectory("solo", t, t, t)])
    with pytest.raises(ScoringError):
        describe_vectors(vectors)


def test_describe_corpus_from_trajectories():
    trajectories, _ = generate_synthetic_corpus(
        CorpusSpec(n_baseline=15, n_speed_burst=3, seed=1, n_fixes=25))
    desc = describe_corpus(trajectories)
    assert desc.n_instances == 18
    assert desc.ids == tuple(t.id for t in trajectories)
    vectors = build_feature_vectors(trajectories)
    assert desc == describe_vectors(vectors)


def test_custom_axis_assignment():
    vectors, _ = mixed_corpus()
    cfg = Config(pass1_x="Geometric", pass1_y="Kinematic")
    desc = describe_vectors(vectors, config=cfg)
    assert desc.pass1.x_node == "Geometric"
    # pure kinematic now lives on the y axis
    assert set(desc.pass2_kinematic.classified_ids) == set(
        desc.pass1.ids_in_zone(Zone.UNCOMMON_Y))


def test_refine_disabled():
    vectors, _ = mixed_corpus()
    desc = describe_vectors(vectors, config=Config(refine=False))
    assert desc.pass2_geometric.classified_ids == ()
    assert desc.pass2_kinematic.classified_ids == ()


# ------------------------------------------------------------ effectiveness

def test_effectiveness_on_ships_shaped_counts():
    desc = helpers.description_from_counts(28, 19, 17, 36,
                                           kin_inner=(6, 4, 9, 0),
                                           geo_inner=(0, 11, 6, 0))
    eff = evaluate_effectiveness(desc)
    assert eff.pass1_effective
    assert eff.pass2_kinematic_successful      # 10 of 19
    assert eff.pass2_geometric_successful      # 11 of 17
    assert eff.pass2_effective and eff.overall_effective
    assert eff.kinematic_refined_fraction == pytest.approx(10 / 19)


def test_effectiveness_on_foxes_shaped_counts():
    desc = helpers.description_from_counts(43, 21, 12, 24,
                                           kin_inner=(1, 7, 13, 0),
                                           geo_inner=(0, 4, 8, 0))
    eff = evaluate_effectiveness(desc)
    assert eff.pass1_effective                 # 57% outside the common zone
    assert not eff.pass2_kinematic_successful  # 8 of 21
    assert not eff.pass2_geometric_successful  # 4 of 12
    assert not eff.pass2_effective and not eff.overall_effective


def test_effectiveness_all_common():
    desc = helpers.description_from_counts(50, 0, 0, 0)
    eff = evaluate_effectiveness(desc)
    assert not eff.pass1_effective
    assert not eff.pass2_effective
    assert not eff.overall_effective
    assert eff.kinematic_refined_fraction == 0.0


def test_effectiveness_strict_majority():
    # exactly 50% outside the common zone is NOT effective
    desc = helpers.description_from_counts(50, 25, 25, 0)
    assert not evaluate_effectiveness(desc).pass1_effective
    desc = helpers.description_from_counts(49, 25, 25, 1)
    assert evaluate_effectiveness(desc).pass1_effective
