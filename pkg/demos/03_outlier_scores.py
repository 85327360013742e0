#!/usr/bin/env python3
"""Distance-based outlier scores, from the toy case to taxonomy nodes.

The score of an instance is 1 - (neighbors within the radius) / (N - 1),
with the radius fixed at the mean pairwise distance, so a score of 1
means nothing else is nearby and 0 means everything is.
"""

import numpy as np

from movedesc import (CorpusSpec, FeatureMatrix, build_feature_vectors,
                      default_taxonomy, generate_synthetic_corpus,
                      mean_pairwise_distance, outlier_scores, score_node)

# toy: three points on a line; the far one scores 1
matrix = FeatureMatrix(("near_0", "near_1", "far"), (0,),
                       np.array([[0.0], [1.0], [10.0]]))
radius = mean_pairwise_distance(matrix)
table = outlier_scores(matrix, radius)
print(f"toy points 0, 1, 10 -> radius {radius:.4f}")
for name, score in table.scores.items():
    print(f"  {name}: {score}")

# node-level scoring on a corpus with ten deliberate speeders
trajectories, truth = generate_synthetic_corpus(
    CorpusSpec(n_baseline=60, n_speed_burst=10, seed=0))
vectors = build_feature_vectors(trajectories)
taxonomy = default_taxonomy()

for node in ("Kinematic", "Geometric", "Speed"):
    table = score_node(vectors, taxonomy.node(node))
    scores = np.array(list(table.scores.values()))
    burst = [table.scores[i] for i, a in truth.items() if a == "speed_burst"]
    print(f"\n{node}: radius {table.radius:.2f}, "
          f"corpus mean score {scores.mean():.2f}, "
          f"speed-burst mean score {np.mean(burst):.2f}")
