"""Report assembly and serialization.

A report collects everything a reader needs to understand one corpus
run: the configuration echo, per-node radii, per-instance scores and
zone labels, the two-level behavior breakdown, the effectiveness
verdicts, and the common-zone exemplar ids. Two serializations exist: a
structured text document (schema-versioned, field order fixed) and a
delimited per-instance table. Both are deterministic byte for byte.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .config import Config, config_to_flat
from .pipeline import DatasetDescription, EffectivenessReport, zone_label

SCHEMA_VERSION = 1

STRUCTURED_TEXT = "structured-text"
DELIMITED = "delimited"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    if value is None:
        return ""
    return str(value)


@dataclass(frozen=True)
class InstanceRow:
    id: str
    scores: dict[str, float]          # node name -> score, fixed node order
    pass1_zone: str
    pass2_zone: str                   # "" when the instance was not refined


@dataclass(frozen=True)
class ReportDocument:
    corpus_size: int
    config: dict                      # flat config echo, key-sorted
    radii: dict[str, float]
    instances: tuple[InstanceRow, ...]
    breakdown: tuple
    effectiveness: EffectivenessReport
    exemplar_ids: tuple[str, ...] = ()
    schema_version: int = SCHEMA_VERSION


def build_report(desc: DatasetDescription, effectiveness: EffectivenessReport,
                 config: Config | None = None,
                 exemplar_ids: tuple[str, ...] = ()) -> ReportDocument:
    cfg = config or Config()
    node_order = list(desc.radii)
    p1 = desc.pass1
    rows = []
    pass2_lookup = {}
    classified2 = {}
    for pass2 in (desc.pass2_kinematic, desc.pass2_geometric):
        classified = set(pass2.classified_ids)
        for rec in pass2.records:
            pass2_lookup.setdefault(rec.id, {})[pass2.x_node] = rec.x_score
            pass2_lookup[rec.id][pass2.y_node] = rec.y_score
            if rec.id in classified:
                classified2[rec.id] = (pass2, rec.zone)

    for rec in p1.records:
        scores = {p1.x_node: rec.x_score, p1.y_node: rec.y_score}
        scores.update(pass2_lookup.get(rec.id, {}))
        ordered = {node: scores[node] for node in node_order if node in scores}
        z1 = zone_label(rec.zone, p1.x_node, p1.y_node) if rec.zone is not None else ""
        z2 = ""
        hit = classified2.get(rec.id)
        if hit is not None:
            p2, zone2 = hit
            z2 = zone_label(zone2, p2.x_node, p2.y_node)
        rows.append(InstanceRow(rec.id, ordered, z1, z2))

    return ReportDocument(
        corpus_size=desc.n_instances,
        config=config_to_flat(cfg),
        radii=dict(desc.radii),
        instances=tuple(rows),
        breakdown=desc.breakdown,
        effectiveness=effectiveness,
        exemplar_ids=tuple(exemplar_ids),
    )


def render_structured_text(doc: ReportDocument) -> str:
    out = io.StringIO()
    w = out.write
    w(f"schema_version: {doc.schema_version}\n")
    w("kind: movement-behavior-report\n\n")

    w("[metadata]\n")
    w(f"corpus_size: {doc.corpus_size}\n")
    for node, radius in doc.radii.items():
        w(f"radius.{node}: {_fmt(radius)}\n")
    w("\n[config]\n")
    for key, value in doc.config.items():
        w(f"{key}: {_fmt(value)}\n")

    w("\n[breakdown]\n")
    for seg in doc.breakdown:
        w(f"{seg.label}: {seg.count} ({seg.percent:.2f}%)\n")
        for child in seg.children:
            w(f"  {child.label}: {child.count} ({child.percent:.2f}%)\n")

    eff = doc.effectiveness
    w("\n[effectiveness]\n")
    w(f"pass1_effective: {_fmt(eff.pass1_effective)}\n")
    w(f"pass1_outside_fraction: {_fmt(eff.pass1_outside_fraction)}\n")
    w(f"pass2_kinematic_successful: {_fmt(eff.pass2_kinematic_successful)}\n")
    w(f"kinematic_refined_fraction: {_fmt(eff.kinematic_refined_fraction)}\n")
    w(f"pass2_geometric_successful: {_fmt(eff.pass2_geometric_successful)}\n")
    w(f"geometric_refined_fraction: {_fmt(eff.geometric_refined_fraction)}\n")
    w(f"pass2_effective: {_fmt(eff.pass2_effective)}\n")
    w(f"overall_effective: {_fmt(eff.overall_effective)}\n")
    w("\n[summary]\n")
    w(f"pass 1 {'effective' if eff.pass1_effective else 'ineffective'}; ")
    w(f"pass 2 {'effective' if eff.pass2_effective else 'ineffective'}; ")
    w(f"overall {'effective' if eff.overall_effective else 'ineffective'}\n")

    w("\n[exemplars]\n")
    w("common_zone_exemplars: " + (", ".join(doc.exemplar_ids) if doc.exemplar_ids else "(none)") + "\n")

    w("\n[instances]\n")
    nodes = list(doc.radii)
    w("id | " + " | ".join(f"{n}_score" for n in nodes) + " | pass1 | pass2\n")
    for row in doc.instances:
        scores = " | ".join(_fmt(row.scores.get(n)) for n in nodes)
        w(f"{row.id} | {scores} | {row.pass1_zone} | {row.pass2_zone}\n")
    return out.getvalue()


def render_delimited(doc: ReportDocument, delimiter: str = ",") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    nodes = list(doc.radii)
    writer.writerow(["id"] + [f"{n}_score" for n in nodes] + ["pass1_zone", "pass2_zone"])
    for row in doc.instances:
        writer.writerow([row.id]
                        + [_fmt(row.scores.get(n)) for n in nodes]
                        + [row.pass1_zone, row.pass2_zone])
    return buf.getvalue()


def emit_report(desc: DatasetDescription, effectiveness: EffectivenessReport,
                format: str = STRUCTURED_TEXT, config: Config | None = None,
                exemplar_ids: tuple[str, ...] = ()) -> str:
    """Serialize a description; see module docstring for the two formats."""
    doc = build_report(desc, effectiveness, config, exemplar_ids)
    if format == STRUCTURED_TEXT:
        return render_structured_text(doc)
    if format == DELIMITED:
        return render_delimited(doc)
    raise ValueError(f"unknown report format {format!r}")
