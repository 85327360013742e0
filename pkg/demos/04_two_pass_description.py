#!/usr/bin/env python3
"""The two-pass description: zones, refinement, and the effectiveness call.

Pass 1 separates common, pure-Kinematic, pure-Geometric, and hybrid
instances. Pass 2 re-scores the corpus one taxonomy level deeper and
classifies only the pure groups; hybrids stay as they are.
"""

from movedesc import (CorpusSpec, build_feature_vectors, describe_vectors,
                      evaluate_effectiveness, generate_synthetic_corpus,
                      zone_label)

trajectories, truth = generate_synthetic_corpus(CorpusSpec(
    n_baseline=70, n_speed_burst=10, n_zigzag=10, n_stop_and_go=5, n_loop=5,
    seed=0))
vectors = build_feature_vectors(trajectories)
desc = describe_vectors(vectors)

print("outer breakdown:")
for seg in desc.breakdown:
    print(f"  {seg.label}: {seg.count} ({seg.percent:.1f}%)")
    for child in seg.children:
        print(f"    {child.label}: {child.count} ({child.percent:.1f}%)")

# how well did the zones recover the planted archetypes?
pass1 = {rec.id: rec.zone for rec in desc.pass1.records}
print("\npass-1 zone by planted archetype:")
for archetype in ("baseline", "speed_burst", "zigzag", "stop_and_go", "loop"):
    ids = [i for i, a in truth.items() if a == archetype]
    labels = [zone_label(pass1[i], "Kinematic", "Geometric") for i in ids]
    counts = {lbl: labels.count(lbl) for lbl in sorted(set(labels))}
    print(f"  {archetype:12s} {counts}")

# pass 2 re-scores everyone but only the pure groups get refined zones
print("\npass-2 refinement by archetype (pure instances only):")
for pass2 in (desc.pass2_kinematic, desc.pass2_geometric):
    refined = {rec.id: rec.zone for rec in pass2.records if rec.zone is not None}
    for archetype in ("speed_burst", "zigzag", "stop_and_go", "loop"):
        labels = [zone_label(z, pass2.x_node, pass2.y_node)
                  for i, z in refined.items() if truth[i] == archetype]
        if labels:
            counts = {lbl: labels.count(lbl) for lbl in sorted(set(labels))}
            print(f"  {archetype:12s} {counts}")

effectiveness = evaluate_effectiveness(desc)
print(f"\npass 1 effective:  {effectiveness.pass1_effective} "
      f"({effectiveness.pass1_outside_fraction:.0%} outside the common zone)")
print(f"pass 2 kinematic:  {effectiveness.pass2_kinematic_successful} "
      f"({effectiveness.kinematic_refined_fraction:.0%} refined)")
print(f"pass 2 geometric:  {effectiveness.pass2_geometric_successful} "
      f"({effectiveness.geometric_refined_fraction:.0%} refined)")
print(f"overall effective: {effectiveness.overall_effective}")
