"""Command-line front end.

Subcommands:

* ``describe``  - full pipeline: trajectory file in, report plus plot
  data directory out
* ``features``  - emit the feature matrix for a trajectory file
* ``score``     - score an exported feature matrix per taxonomy node
* ``synth``     - emit a synthetic corpus (with ground-truth labels)
* ``validate``  - run ingest checks only and summarize them

Exit codes: 0 success, 1 usage error, 2 data error. All file writes
happen after computation succeeds, so a failed run leaves no partial
output.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import cluster, pipeline, plotdata, report, svg, synth
from .config import Config, ConfigError, load_config
from .features import build_feature_vectors
from .ingest import (GEOGRAPHIC, PLANAR, IngestError, parse_trajectories,
                     validate_trajectory, write_trajectories)
from .pipeline import Zone
from .scoring import (ScoringError, matrix_from_vectors, read_feature_matrix,
                      score_standardized_node, standardize,
                      write_feature_matrix, write_score_table)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; the contract here is exit 1
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="movedesc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="input file")
        p.add_argument("--config", help="flat JSON config file")
        p.add_argument("--mode", choices=[GEOGRAPHIC, PLANAR])
        p.add_argument("--min-fixes", type=int, dest="min_fixes")
        p.add_argument("--delimiter")
        p.add_argument("--id-col", dest="id_col")
        p.add_argument("--t-col", dest="t_col")
        p.add_argument("--x-col", dest="x_col")
        p.add_argument("--y-col", dest="y_col")
        p.add_argument("--threads", type=int)

    p = sub.add_parser("describe", help="run the full two-pass description")
    common(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--threshold", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--plots", choices=["none", "data", "svg"])

    p = sub.add_parser("features", help="emit the feature matrix")
    common(p)
    p.add_argument("--out", required=True, help="output file")

    p = sub.add_parser("score", help="score a feature-matrix file per node")
    p.add_argument("--input", required=True)
    p.add_argument("--config")
    p.add_argument("--delimiter")
    p.add_argument("--threads", type=int)
    p.add_argument("--node", action="append", help="taxonomy node (repeatable; default: all)")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("synth", help="emit a synthetic corpus")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-baseline", type=int, default=80)
    p.add_argument("--n-speed-burst", type=int, default=10)
    p.add_argument("--n-stop-go", type=int, default=0)
    p.add_argument("--n-zigzag", type=int, default=10)
    p.add_argument("--n-loop", type=int, default=0)
    p.add_argument("--n-fixes", type=int, default=60)

    p = sub.add_parser("validate", help="ingest checks only")
    common(p)
    return parser


def _config_from_args(args) -> Config:
    cfg = load_config(args.config) if getattr(args, "config", None) else Config()
    overrides = {
        "mode": "mode", "min_fixes": "min_fixes", "delimiter": "delimiter",
        "id_col": "id_col", "t_col": "t_col", "x_col": "x_col", "y_col": "y_col",
        "threads": "threads", "threshold": "threshold", "seed": "seed",
        "plots": "plots",
    }
    for arg_name, attr in overrides.items():
        value = getattr(args, arg_name, None)
        if value is not None:
            setattr(cfg, attr, value)
    return cfg


def _parse_input(args, cfg: Config):
    path = Path(args.input)
    if not path.exists():
        raise DataError(f"input file not found: {path}")
    try:
        return parse_trajectories(path, cfg.schema(), cfg.mode, cfg.min_fixes,
                                  cfg.delimiter)
    except IngestError as exc:
        raise DataError(str(exc)) from None


def _require_vectorizable(cfg: Config) -> None:
    # speed/turn/acceleration series need 3 fixes minimum
    if cfg.min_fixes < 3:
        raise UsageError("min_fixes must be at least 3 for feature extraction")


def _write_text(path: Path, content: str) -> None:
    try:
        path.write_text(content)
    except OSError as exc:
        raise DataError(f"failed writing {path}: {exc}") from None


def _cmd_describe(args) -> int:
    cfg = _config_from_args(args)
    _require_vectorizable(cfg)
    trajectories, ingest_report = _parse_input(args, cfg)
    if not trajectories:
        raise DataError("no admitted trajectories")
    if len(trajectories) < 2:
        raise DataError("need at least 2 admitted trajectories to describe")

    taxonomy = cfg.taxonomy_object()
    vectors = build_feature_vectors(trajectories)
    desc = pipeline.describe_vectors(vectors, taxonomy, cfg)
    effectiveness = pipeline.evaluate_effectiveness(desc)

    by_id = {v.trajectory_id: v for v in vectors}
    zone0_vectors = [by_id[i] for i in desc.pass1.ids_in_zone(Zone.COMMON)]
    exemplars = cluster.zone0_exemplars(zone0_vectors, cfg.k_max, cfg.seed)

    doc = report.build_report(desc, effectiveness, cfg, exemplars.exemplar_ids)
    text = report.render_structured_text(doc)
    table = report.render_delimited(doc, cfg.delimiter)

    # render every output to a string first; only then touch the filesystem
    files: list[tuple[str, str]] = [("report.txt", text), ("instances.csv", table)]
    if cfg.plots in ("data", "svg"):
        plots = [
            ("scatter_pass1", plotdata.scatter_data(desc.pass1)),
            ("scatter_pass2_geometric", plotdata.scatter_data(desc.pass2_geometric)),
            ("scatter_pass2_kinematic", plotdata.scatter_data(desc.pass2_kinematic)),
            ("donut", plotdata.donut_data(desc)),
        ]
        for name, plot in plots:
            files.append((f"{name}.csv", _plot_csv(plot, cfg.delimiter)))
            if cfg.plots == "svg":
                if plot.kind == plotdata.SCATTER:
                    files.append((f"{name}.svg", svg.scatter_svg(plot)))
                elif plot.kind == plotdata.DONUT:
                    files.append((f"{name}.svg", svg.donut_svg(plot)))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, content in files:
        _write_text(out_dir / name, content)

    print(f"described {desc.n_instances} trajectories "
          f"({ingest_report.admitted} admitted, {len(ingest_report.rejected)} rejected); "
          f"overall {'effective' if effectiveness.overall_effective else 'ineffective'}; "
          f"outputs in {out_dir}")
    return EXIT_OK


def _plot_csv(plot, delimiter: str = ",") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    if plot.kind == plotdata.SCATTER:
        w.writerow(["id", "x_score", "y_score", "zone", "highlighted",
                    "x_node", "y_node", "threshold"])
        for pt in plot.points:
            w.writerow([pt.id, repr(pt.x_score), repr(pt.y_score),
                        "" if pt.zone is None else int(pt.zone),
                        int(pt.highlighted), plot.x_label, plot.y_label,
                        repr(plot.threshold)])
    elif plot.kind == plotdata.DONUT:
        w.writerow(["ring", "label", "count", "percent", "parent"])
        for seg in plot.segments:
            w.writerow([seg.ring, "" if seg.label is None else seg.label,
                        seg.count, format(seg.percent, ".12g"), seg.parent or ""])
    else:
        raise ValueError(f"no delimited form for plot kind {plot.kind!r}")
    return buf.getvalue()


def _cmd_features(args) -> int:
    cfg = _config_from_args(args)
    _require_vectorizable(cfg)
    trajectories, _ = _parse_input(args, cfg)
    if not trajectories:
        raise DataError("no admitted trajectories")
    matrix = matrix_from_vectors(build_feature_vectors(trajectories))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_feature_matrix(matrix, out, cfg.delimiter)
    print(f"wrote {matrix.n} x {len(matrix.columns)} feature matrix to {out}")
    return EXIT_OK


def _cmd_score(args) -> int:
    cfg = _config_from_args(args)
    path = Path(args.input)
    if not path.exists():
        raise DataError(f"input file not found: {path}")
    try:
        matrix = read_feature_matrix(path, cfg.delimiter)
    except (ScoringError, ValueError) as exc:
        raise DataError(f"bad feature matrix: {exc}") from None
    taxonomy = cfg.taxonomy_object()
    node_names = args.node or taxonomy.names()
    try:
        nodes = [taxonomy.node(n) for n in node_names]
    except KeyError as exc:
        raise DataError(str(exc.args[0])) from None
    if matrix.n < 2:
        raise DataError("need at least 2 instances to score")
    missing = [n.name for n in nodes if not set(n.indices) <= set(matrix.columns)]
    if missing:
        raise DataError(f"matrix lacks columns for nodes: {missing}")

    standardized, _ = standardize(matrix)
    tables = [score_standardized_node(standardized, node, cfg.threads)
              for node in nodes]
    if args.out:
        write_score_table(tables, Path(args.out), cfg.delimiter)
        print(f"wrote scores for {len(tables)} node(s) to {args.out}")
    else:
        buf = io.StringIO()
        write_score_table(tables, buf, cfg.delimiter)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _cmd_synth(args) -> int:
    spec = synth.CorpusSpec(
        n_baseline=args.n_baseline, n_speed_burst=args.n_speed_burst,
        n_stop_and_go=args.n_stop_go, n_zigzag=args.n_zigzag,
        n_loop=args.n_loop, n_fixes=args.n_fixes, seed=args.seed,
    )
    try:
        trajectories, truth = synth.generate_synthetic_corpus(spec)
    except ValueError as exc:
        raise DataError(str(exc)) from None
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_trajectories(trajectories, out_dir / "fixes.csv")
    lines = ["id,archetype"] + [f"{i},{a}" for i, a in truth.items()]
    (out_dir / "truth.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(trajectories)} trajectories to {out_dir}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    cfg = _config_from_args(args)
    trajectories, ingest_report = _parse_input(args, cfg)
    print(f"admitted: {ingest_report.admitted}")
    print(f"duplicates_dropped: {ingest_report.duplicates_dropped}")
    print(f"malformed_rows: {ingest_report.malformed_rows}")
    print(f"rejected: {len(ingest_report.rejected)}")
    for traj_id, reason in ingest_report.rejected:
        print(f"  {traj_id}: {reason}")
    clean = True
    for traj in trajectories:
        violations = validate_trajectory(traj, cfg.min_fixes)
        for v in violations:
            clean = False
            print(f"  {traj.id}: {v.invariant} at index {v.index}")
    print("ok" if clean else "invariant violations found")
    return EXIT_OK


_COMMANDS = {
    "describe": _cmd_describe,
    "features": _cmd_features,
    "score": _cmd_score,
    "synth": _cmd_synth,
    "validate": _cmd_validate,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ScoringError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())
