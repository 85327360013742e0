#!/usr/bin/env python3
"""Emitting the description: text report, plot data, SVG, exemplars, densities.

Writes everything under demos/output/.
"""

from pathlib import Path

import numpy as np

from movedesc import (CorpusSpec, Zone, build_feature_vectors, density_data,
                      describe_vectors, donut_data, emit_report,
                      evaluate_effectiveness, generate_synthetic_corpus,
                      scatter_data, speed_series, zone0_exemplars)
from movedesc.svg import donut_svg, scatter_svg

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

trajectories, truth = generate_synthetic_corpus(CorpusSpec(
    n_baseline=60, n_speed_burst=8, n_zigzag=8, seed=0))
vectors = build_feature_vectors(trajectories)
desc = describe_vectors(vectors)
effectiveness = evaluate_effectiveness(desc)

# the structured text report (stable, versioned) and the per-instance table
(OUT / "report.txt").write_text(emit_report(desc, effectiveness))
(OUT / "instances.csv").write_text(emit_report(desc, effectiveness, "delimited"))

# scatter + donut as standalone vector graphics
(OUT / "scatter_pass1.svg").write_text(scatter_svg(scatter_data(desc.pass1)))
(OUT / "donut.svg").write_text(donut_svg(donut_data(desc)))

# exemplars: the most central members of the common zone's clusters
by_id = {v.trajectory_id: v for v in vectors}
zone0 = [by_id[i] for i in desc.pass1.ids_in_zone(Zone.COMMON)]
exemplars = zone0_exemplars(zone0, k_max=10, seed=0)
print(f"common zone: {len(zone0)} instances in {exemplars.k} cluster(s)")
print(f"exemplar ids: {list(exemplars.exemplar_ids)}")

# density of per-instance mean speeds, with and without the power transform
mean_speeds = np.array([speed_series(t).values.mean() for t in trajectories])
for tag, transform in (("raw", False), ("transformed", True)):
    plot = density_data(mean_speeds, power_transform=transform,
                        x_label="mean speed")
    width = plot.bin_edges[1] - plot.bin_edges[0]
    note = f" (lambda = {plot.transform_lambda[0]:.2f})" if transform else ""
    print(f"{tag} density: {len(plot.densities)} bins, "
          f"sum*width = {sum(plot.densities) * width:.6f}{note}")

print(f"\nwrote report + plots to {OUT}")
