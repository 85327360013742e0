"""movedesc: behavior descriptions for unlabeled trajectory corpora.

The library turns raw (x, y, t) trajectories into 72-variable feature
vectors, scores each instance's oddity per movement-taxonomy node with a
distance-based outlier detector, and classifies instances into
common / pure / hybrid behavior zones over two refinement passes. The
``report`` and ``plotdata`` modules emit the resulting description as
structured text, delimited tables, and plot payloads; ``cli`` wraps it
all into a batch tool.
"""

from .cluster import ExemplarResult, zone0_exemplars
from .config import Config, ConfigError, load_config
from .features import (FeatureVector, Taxonomy, TaxonomyNode, VariableRegistry,
                       REGISTRY, build_feature_vector, build_feature_vectors,
                       default_taxonomy, distance_geometry_signatures,
                       summarize_distribution)
from .ingest import (GEOGRAPHIC, PLANAR, Fix, IngestError, IngestReport,
                     Trajectory, parse_trajectories, validate_trajectory,
                     write_trajectories)
from .kinematics import (ParameterSeries, acceleration_series, ground_distance,
                         speed_series, turning_angle_series)
from .pipeline import (DatasetDescription, EffectivenessReport, PassResult,
                       Zone, classify_zone, describe_corpus, describe_vectors,
                       evaluate_effectiveness, run_pass, zone_label)
from .plotdata import PlotData, density_data, donut_data, scatter_data
from .report import build_report, emit_report
from .scoring import (FeatureMatrix, OutlierScoreTable, ScoringError,
                      matrix_from_vectors, mean_pairwise_distance,
                      outlier_scores, score_node, standardize)
from .synth import CorpusSpec, generate_synthetic_corpus

__version__ = "0.1.0"

__all__ = [
    "Config", "ConfigError", "CorpusSpec", "DatasetDescription",
    "EffectivenessReport", "ExemplarResult", "FeatureMatrix", "FeatureVector",
    "Fix", "GEOGRAPHIC", "IngestError", "IngestReport", "OutlierScoreTable",
    "PLANAR", "ParameterSeries", "PassResult", "PlotData", "REGISTRY",
    "ScoringError", "Taxonomy", "TaxonomyNode", "Trajectory",
    "VariableRegistry", "Zone", "build_feature_vector",
    "build_feature_vectors", "build_report", "classify_zone",
    "default_taxonomy", "density_data", "describe_corpus", "describe_vectors",
    "distance_geometry_signatures", "donut_data", "emit_report",
    "evaluate_effectiveness", "generate_synthetic_corpus", "ground_distance",
    "load_config", "matrix_from_vectors", "mean_pairwise_distance",
    "outlier_scores", "parse_trajectories", "run_pass", "scatter_data",
    "score_node", "speed_series", "standardize", "summarize_distribution",
    "turning_angle_series", "acceleration_series", "validate_trajectory",
    "write_trajectories", "zone0_exemplars", "zone_label",
]
