"""Synthetic planar corpora with known-odd members, for tests and demos.

The baseline population cruises at roughly 1 m/s along gently curving
paths. Four anomaly archetypes deviate in one nameable way each:

* ``speed_burst``   - same shapes, ten times the speed
* ``stop_and_go``   - speed flips between crawl and sprint (acceleration spikes)
* ``zigzag``        - heading alternates sharply every step (high turning angles)
* ``loop``          - closes a full circle back to its start (low whole-path
  straightness)

Generation is fully determined by the seed; ids encode the archetype and
a separate label map is returned as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ingest import PLANAR, Trajectory

BASELINE = "baseline"
SPEED_BURST = "speed_burst"
STOP_AND_GO = "stop_and_go"
ZIGZAG = "zigzag"
LOOP = "loop"

DT_SECONDS = 10.0


@dataclass(frozen=True)
class CorpusSpec:
    n_baseline: int = 80
    n_speed_burst: int = 0
    n_stop_and_go: int = 0
    n_zigzag: int = 0
    n_loop: int = 0
    n_fixes: int = 60
    seed: int = 0


def _walk(rng: np.random.Generator, n_fixes: int, speeds: np.ndarray,
          turn_degrees: np.ndarray, origin_scale: float = 10_000.0):
    """Integrate per-step speed and heading-change series into a path."""
    heading = np.cumsum(np.concatenate(([rng.uniform(0.0, 360.0)], turn_degrees)))
    rad = np.radians(heading)
    steps = speeds * DT_SECONDS
    x = np.concatenate(([rng.uniform(0.0, origin_scale)], steps * np.cos(rad)))
    y = np.concatenate(([rng.uniform(0.0, origin_scale)], steps * np.sin(rad)))
    t = np.arange(n_fixes) * DT_SECONDS
    return t, np.cumsum(x), np.cumsum(y)


def _baseline_profile(rng: np.random.Generator, n_steps: int):
    speeds = rng.normal(1.0, 0.05, n_steps).clip(0.05)
    drift = rng.uniform(-0.5, 0.5)
    turns = drift + rng.normal(0.0, 0.2, n_steps - 1)
    return speeds, turns


def _make(rng: np.random.Generator, archetype: str, traj_id: str, n_fixes: int) -> Trajectory:
    n_steps = n_fixes - 1
    if archetype == BASELINE:
        speeds, turns = _baseline_profile(rng, n_steps)
    elif archetype == SPEED_BURST:
        speeds, turns = _baseline_profile(rng, n_steps)
        speeds = speeds * 10.0
    elif archetype == STOP_AND_GO:
        _, turns = _baseline_profile(rng, n_steps)
        phase = (np.arange(n_steps) // 5) % 2
        speeds = np.where(phase == 0, 0.2, 3.0) + rng.normal(0.0, 0.02, n_steps)
        speeds = speeds.clip(0.05)
    elif archetype == ZIGZAG:
        speeds = rng.normal(1.0, 0.05, n_steps).clip(0.05)
        signs = np.where(np.arange(n_steps - 1) % 2 == 0, 1.0, -1.0)
        turns = signs * (72.0 + rng.normal(0.0, 2.0, n_steps - 1))
    elif archetype == LOOP:
        speeds = rng.normal(1.0, 0.05, n_steps).clip(0.05)
        turns = np.full(n_steps - 1, 360.0 / n_steps) + rng.normal(0.0, 0.05, n_steps - 1)
    else:
        raise ValueError(f"unknown archetype {archetype!r}")
    t, x, y = _walk(rng, n_fixes, speeds, turns)
    return Trajectory(traj_id, t, x, y, PLANAR)


def generate_synthetic_corpus(spec: CorpusSpec) -> tuple[list[Trajectory], dict[str, str]]:
    """Build the corpus described by ``spec``.

    Returns the trajectories plus a ground-truth map id -> archetype.
    """
    if spec.n_baseline < 2:
        raise ValueError("need at least 2 baseline trajectories")
    rng = np.random.default_rng(spec.seed)
    plan = [
        (BASELINE, spec.n_baseline),
        (SPEED_BURST, spec.n_speed_burst),
        (STOP_AND_GO, spec.n_stop_and_go),
        (ZIGZAG, spec.n_zigzag),
        (LOOP, spec.n_loop),
    ]
    trajectories: list[Trajectory] = []
    truth: dict[str, str] = {}
    for archetype, count in plan:
        for i in range(count):
            traj_id = f"{archetype}_{i:03d}"
            trajectories.append(_make(rng, archetype, traj_id, spec.n_fixes))
            truth[traj_id] = archetype
    return trajectories, truth
