"""Run configuration: a flat key-value document plus CLI overrides.

The config file is JSON holding one flat object; keys are dotted
(``section.option``). Unknown keys are rejected so typos fail loudly.
Every tunable of the method is here: the taxonomy and its variable
groups, the decision boundary, the pass axes (start/feedback), and the
summarization outputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path

from . import features
from .features import Taxonomy


@dataclass
class Config:
    # ingest
    id_col: str = "id"
    t_col: str = "t"
    x_col: str = "x"
    y_col: str = "y"
    mode: str = "planar"
    min_fixes: int = 10
    delimiter: str = ","
    # scoring
    method: str = "distance-count"
    threads: int | None = None
    # pipeline
    threshold: float = 0.5
    pass1_x: str = features.KINEMATIC
    pass1_y: str = features.GEOMETRIC
    pass2_kinematic_source: str = features.KINEMATIC
    pass2_kinematic_x: str = features.SPEED
    pass2_kinematic_y: str = features.ACCELERATION
    pass2_geometric_source: str = features.GEOMETRIC
    pass2_geometric_x: str = features.CURVATURE
    pass2_geometric_y: str = features.INDENTATION
    refine: bool = True
    taxonomy: dict | None = None  # node name -> list of variable names
    # report
    seed: int = 0
    k_max: int = 10
    plots: str = "data"

    def taxonomy_object(self) -> Taxonomy:
        if self.taxonomy:
            return Taxonomy.from_name_lists(self.taxonomy)
        return features.default_taxonomy()

    def schema(self) -> dict[str, str]:
        return {"id": self.id_col, "t": self.t_col, "x": self.x_col, "y": self.y_col}


_KEY_MAP = {
    "ingest.id_col": "id_col",
    "ingest.t_col": "t_col",
    "ingest.x_col": "x_col",
    "ingest.y_col": "y_col",
    "ingest.mode": "mode",
    "ingest.min_fixes": "min_fixes",
    "ingest.delimiter": "delimiter",
    "scoring.method": "method",
    "scoring.threads": "threads",
    "pipeline.threshold": "threshold",
    "pipeline.pass1_x": "pass1_x",
    "pipeline.pass1_y": "pass1_y",
    "pipeline.pass2_kinematic_source": "pass2_kinematic_source",
    "pipeline.pass2_kinematic_x": "pass2_kinematic_x",
    "pipeline.pass2_kinematic_y": "pass2_kinematic_y",
    "pipeline.pass2_geometric_source": "pass2_geometric_source",
    "pipeline.pass2_geometric_x": "pass2_geometric_x",
    "pipeline.pass2_geometric_y": "pass2_geometric_y",
    "pipeline.refine": "refine",
    "pipeline.taxonomy": "taxonomy",
    "report.seed": "seed",
    "report.k_max": "k_max",
    "report.plots": "plots",
}
_ATTR_MAP = {attr: key for key, attr in _KEY_MAP.items()}
_INT_ATTRS = {"min_fixes", "threads", "seed", "k_max"}
_FLOAT_ATTRS = {"threshold"}


class ConfigError(Exception):
    pass


def config_from_flat(flat: dict) -> Config:
    cfg = Config()
    for key, value in flat.items():
        attr = _KEY_MAP.get(key)
        if attr is None:
            raise ConfigError(f"unknown config key {key!r}")
        if value is not None:
            if attr in _INT_ATTRS:
                value = int(value)
            elif attr in _FLOAT_ATTRS:
                value = float(value)
            elif attr == "refine" and not isinstance(value, bool):
                value = str(value).strip().lower() in ("1", "true", "yes", "on")
        setattr(cfg, attr, value)
    return cfg


# execution knobs that do not change results; left out of report echoes so
# the same corpus + method config yields byte-identical reports at any
# thread count
_EXECUTION_ONLY = {"threads"}


def config_to_flat(cfg: Config) -> dict:
    """Flat echo of the method settings, key-sorted for stable serialization."""
    out = {}
    for f in fields(Config):
        if f.name in _EXECUTION_ONLY:
            continue
        out[_ATTR_MAP[f.name]] = getattr(cfg, f.name)
    return dict(sorted(out.items()))


def load_config(path) -> Config:
    text = Path(path).read_text()
    try:
        flat = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(flat, dict):
        raise ConfigError("config file must hold a single flat JSON object")
    return config_from_flat(flat)
