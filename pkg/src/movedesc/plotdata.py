"""Plot-ready payloads: score scatters, breakdown donut rings, densities.

These are plain data (no rendering); the CLI serializes them as
delimited text or hands them to the SVG writer. Densities optionally go
through a Box-Cox power transform with the shape parameter picked by
maximum likelihood on a fixed grid, which keeps the fit deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pipeline import DatasetDescription, PassResult, Zone

SCATTER = "scatter"
DONUT = "donut"
DENSITY_1D = "density1d"
DENSITY_2D = "density2d"

LAMBDA_GRID_SCALE = 100  # grid is i/100 for i in [-200, 200]
MIN_BINS = 10
GRID_2D = 50
POSITIVE_SHIFT_EPS = 1e-9


@dataclass(frozen=True)
class ScatterPoint:
    id: str
    x_score: float
    y_score: float
    zone: Zone | None
    highlighted: bool


@dataclass(frozen=True)
class DonutSegment:
    ring: int            # 0 = outer, 1 = inner
    label: str | None    # None marks an inner spacer under an unsubdivided parent
    count: int
    percent: float
    parent: str | None = None


@dataclass(frozen=True)
class PlotData:
    kind: str
    x_label: str = ""
    y_label: str = ""
    points: tuple[ScatterPoint, ...] = ()
    threshold: float | None = None
    segments: tuple[DonutSegment, ...] = ()
    bin_edges: tuple = ()          # 1d: edges; 2d: (x_edges, y_edges)
    densities: tuple = ()
    transform_lambda: tuple[float, ...] = ()
    degenerate: bool = False


def scatter_data(pass_result: PassResult) -> PlotData:
    """One point per corpus instance; classified instances are highlighted."""
    classified = set(pass_result.classified_ids)
    points = tuple(
        ScatterPoint(rec.id, rec.x_score, rec.y_score, rec.zone, rec.id in classified)
        for rec in pass_result.records
    )
    return PlotData(SCATTER, x_label=pass_result.x_node, y_label=pass_result.y_node,
                    points=points, threshold=pass_result.threshold)


def donut_data(desc: DatasetDescription) -> PlotData:
    """Outer ring = first-level behaviors, inner ring = refinements.

    Inner spacer segments (label None) sit under the unsubdivided outer
    segments so every ring sums to 100%.
    """
    segments: list[DonutSegment] = []
    for seg in desc.breakdown:
        segments.append(DonutSegment(0, seg.label, seg.count, seg.percent))
    for seg in desc.breakdown:
        if seg.children:
            for child in seg.children:
                segments.append(DonutSegment(1, child.label, child.count,
                                             child.percent, parent=seg.label))
            covered = sum(c.count for c in seg.children)
            if covered < seg.count:
                segments.append(DonutSegment(1, f"unrefined {seg.label}",
                                             seg.count - covered,
                                             seg.percent - 100.0 * covered / max(1, desc.n_instances),
                                             parent=seg.label))
        elif seg.count > 0:
            segments.append(DonutSegment(1, None, seg.count, seg.percent, parent=seg.label))
    return PlotData(DONUT, segments=tuple(segments))


def boxcox_transform(values: np.ndarray, lam: float) -> np.ndarray:
    if lam == 0.0:
        return np.log(values)
    return (values ** lam - 1.0) / lam


def boxcox_loglik(lam: float, values: np.ndarray, log_sum: float) -> float:
    y = boxcox_transform(values, lam)
    var = float(y.var())
    if var <= 0.0:
        return -math.inf
    return -0.5 * values.size * math.log(var) + (lam - 1.0) * log_sum


def fit_boxcox_lambda(values: np.ndarray) -> float:
    """Grid maximum-likelihood shape on [-2, 2] in 0.01 steps.

    Values must be strictly positive. Ties break toward the smallest
    lambda on the grid.
    """
    v = np.asarray(values, dtype=np.float64)
    if np.any(v <= 0.0):
        raise ValueError("power transform needs strictly positive data")
    log_sum = float(np.log(v).sum())
    best_lam = -2.0
    best_ll = -math.inf
    for i in range(-2 * LAMBDA_GRID_SCALE, 2 * LAMBDA_GRID_SCALE + 1):
        lam = i / LAMBDA_GRID_SCALE
        ll = boxcox_loglik(lam, v, log_sum)
        if ll > best_ll:
            best_ll = ll
            best_lam = lam
    return best_lam


def _positive_shift(v: np.ndarray) -> np.ndarray:
    lo = float(v.min())
    if lo <= 0.0:
        return v + (POSITIVE_SHIFT_EPS - lo)
    return v


def _fd_bin_count(v: np.ndarray) -> int:
    q75, q25 = np.quantile(v, [0.75, 0.25])
    width = 2.0 * (q75 - q25) / v.size ** (1.0 / 3.0)
    span = float(v.max() - v.min())
    if width <= 0.0 or span <= 0.0:
        return MIN_BINS
    return max(MIN_BINS, int(math.ceil(span / width)))


def density_data(values, power_transform: bool = False,
                 x_label: str = "value", y_label: str = "") -> PlotData:
    """Normalized histogram densities for a 1-D series or 2-D pairs.

    1-D uses Freedman-Diaconis bin widths (at least 10 bins); 2-D bins on
    a 50x50 grid over the bounding box. Constant input collapses to a
    single flagged bin. ``sum(density) * binwidth == 1`` for every
    non-degenerate 1-D emission.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim == 2 and arr.shape[1] == 2:
        return _density_2d(arr, power_transform, x_label, y_label or "value2")
    v = arr.ravel()
    if v.size < 2:
        raise ValueError("need at least 2 values for a density")

    lam: tuple[float, ...] = ()
    if v.max() == v.min():
        return PlotData(DENSITY_1D, x_label=x_label,
                        bin_edges=(float(v[0]), float(v[0])),
                        densities=(1.0,), degenerate=True)
    if power_transform:
        shifted = _positive_shift(v)
        fitted = fit_boxcox_lambda(shifted)
        v = boxcox_transform(shifted, fitted)
        lam = (fitted,)
        if v.max() == v.min():
            return PlotData(DENSITY_1D, x_label=x_label,
                            bin_edges=(float(v[0]), float(v[0])),
                            densities=(1.0,), transform_lambda=lam, degenerate=True)

    bins = _fd_bin_count(v)
    counts, edges = np.histogram(v, bins=bins)
    width = edges[1] - edges[0]
    dens = counts / (v.size * width)
    return PlotData(DENSITY_1D, x_label=x_label,
                    bin_edges=tuple(float(e) for e in edges),
                    densities=tuple(float(d) for d in dens),
                    transform_lambda=lam)


def _density_2d(pairs: np.ndarray, power_transform: bool,
                x_label: str, y_label: str) -> PlotData:
    cols = [pairs[:, 0].copy(), pairs[:, 1].copy()]
    lams: list[float] = []
    degenerate = False
    for i, col in enumerate(cols):
        if col.max() == col.min():
            degenerate = True
            continue
        if power_transform:
            shifted = _positive_shift(col)
            lam = fit_boxcox_lambda(shifted)
            cols[i] = boxcox_transform(shifted, lam)
            lams.append(lam)
    x, y = cols
    if degenerate or x.max() == x.min() or y.max() == y.min():
        return PlotData(DENSITY_2D, x_label=x_label, y_label=y_label,
                        bin_edges=((float(x.min()), float(x.max())),
                                   (float(y.min()), float(y.max()))),
                        densities=((1.0,),), degenerate=True,
                        transform_lambda=tuple(lams))
    counts, xe, ye = np.histogram2d(x, y, bins=GRID_2D)
    area = (xe[1] - xe[0]) * (ye[1] - ye[0])
    dens = counts / (pairs.shape[0] * area)
    return PlotData(DENSITY_2D, x_label=x_label, y_label=y_label,
                    bin_edges=(tuple(float(e) for e in xe), tuple(float(e) for e in ye)),
                    densities=tuple(tuple(float(d) for d in row) for row in dens),
                    transform_lambda=tuple(lams))
