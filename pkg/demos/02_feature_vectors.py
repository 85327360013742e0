#!/usr/bin/env python3
"""From one trajectory to its 72-variable feature vector.

Shows the three derived parameter series, the distance-geometry
straightness signatures, and how the taxonomy groups the variables.
"""

import numpy as np

from movedesc import (REGISTRY, Trajectory, acceleration_series,
                      build_feature_vector, default_taxonomy,
                      distance_geometry_signatures, speed_series,
                      turning_angle_series)

# a dogleg: east at 1 m/s, then north at 2 m/s
t = np.arange(11, dtype=float) * 10.0
x = np.concatenate([np.arange(6) * 10.0, np.full(5, 50.0)])
y = np.concatenate([np.zeros(6), np.arange(1, 6) * 20.0])
traj = Trajectory("dogleg", t, x, y)

print("speed (m/s):       ", speed_series(traj).values.round(2).tolist())
print("acceleration:      ", acceleration_series(traj).values.round(3).tolist())
print("turning angle (°): ", turning_angle_series(traj).values.round(1).tolist())

# straightness ratios: signature k cuts the path into k equal-length pieces;
# 1.0 means that piece is perfectly straight
dg = distance_geometry_signatures(traj)
pos = 0
print("\nstraightness signatures:")
for k in range(1, 6):
    print(f"  k={k}: {dg[pos:pos + k].round(3).tolist()}")
    pos += k

vector = build_feature_vector(traj)
print(f"\nfull vector has {vector.values.size} variables; first few by name:")
for name, value in list(zip(REGISTRY.names, vector.values))[:5]:
    print(f"  {name} = {value:.4f}")

taxonomy = default_taxonomy()
print("\ntaxonomy nodes (name: variable count):")
for name in taxonomy.names():
    print(f"  {name}: {len(taxonomy.indices(name))}")
