"""Command-line front end.

Subcommands: graph, metrics, fidelity, sweep, reproduce. Parameter errors
exit with status 2, runtime failures with 1.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from . import metrics as metrics_mod
from . import records, sweep
from .errors import CobographError, ParseError, SizeTooSmall
from .graphs import (
    Boundary,
    Family,
    load_graph,
    make_hexagonal_lattice,
    make_square_lattice,
    make_triangular_lattice,
    save_graph,
)
from .hamiltonian import ModelOptions
from .records import InstanceSpec
from .solver import DEFAULT_TOL
from .sweep import fmt

_GRID_FAMILIES = (Family.SQUARE, Family.TRIANGULAR, Family.HEXAGONAL)


def _add_family_flags(parser):
    parser.add_argument("--family", choices=[f.value for f in Family if f is not Family.CUSTOM])
    parser.add_argument("--m", type=int, help="node count (chain/star/complete) or grid columns")
    parser.add_argument("--n", type=int, help="grid rows (defaults to --m)")
    parser.add_argument("--level", type=int, help="construction level for fractals")
    parser.add_argument("--nu", type=int, help="arms of the vicsek fractal")
    parser.add_argument("--boundary", choices=["open", "closed"], default="open")


def _graph_from_args(args):
    if getattr(args, "graph", None):
        return load_graph(args.graph)
    if not args.family:
        raise SizeTooSmall("give --family or --graph")
    family = Family(args.family)
    boundary = Boundary(args.boundary)
    if family in _GRID_FAMILIES:
        cols = args.m or args.n
        rows = args.n or args.m
        if rows is None:
            raise SizeTooSmall(f"{family.value} needs --n/--m")
        builder = {
            Family.SQUARE: make_square_lattice,
            Family.TRIANGULAR: make_triangular_lattice,
            Family.HEXAGONAL: make_hexagonal_lattice,
        }[family]
        return builder(rows, cols, boundary)
    if family in (Family.SIERPINSKI, Family.HANOI, Family.VICSEK):
        if args.level is None:
            raise SizeTooSmall(f"{family.value} needs --level")
        size = args.level
    else:
        if args.m is None:
            raise SizeTooSmall(f"{family.value} needs --m")
        size = args.m
    nu = args.nu if family is Family.VICSEK else None
    if family is Family.VICSEK and nu is None:
        raise SizeTooSmall("vicsek needs --nu")
    return InstanceSpec(family, size, boundary, nu).build()


def _graph_label(graph):
    meta = graph.meta
    bits = [meta.family.value]
    if meta.nu is not None:
        bits.append(f"nu{meta.nu}")
    bits.append(str(meta.level_or_extent))
    bits.append(meta.boundary.value)
    return "_".join(bits)


def _write_metrics_csv(graph, path):
    report = metrics_mod.metrics_report(graph)
    lines = [
        f"# cobograph metrics {_graph_label(graph)}",
        f"# generated: {datetime.now(timezone.utc).isoformat(timespec='seconds')}",
        "node_id,degree,betweenness",
    ]
    for node in range(graph.num_nodes):
        lines.append(f"{node},{graph.degrees[node]},{fmt(float(report.betweenness[node]))}")
    lines.append("# summary")
    lines.append("key,value")
    lines.append(f"M,{graph.num_nodes}")
    lines.append(f"E,{graph.num_edges}")
    lines.append(f"avg_path_length,{fmt(report.avg_path_length)}")
    lines.append(f"circuit_rank,{report.circuit_rank}")
    Path(path).write_text("\n".join(lines) + "\n")


def cmd_graph(args):
    graph = _graph_from_args(args)
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    label = _graph_label(graph)
    edge_path = out_dir / f"{label}.edges"
    save_graph(graph, edge_path)
    _write_metrics_csv(graph, out_dir / f"{label}_metrics.csv")
    print(f"{graph.describe()}: wrote {edge_path}")
    return 0


def cmd_metrics(args):
    graph = _graph_from_args(args)
    if args.out:
        _write_metrics_csv(graph, args.out)
        print(f"{graph.describe()}: wrote {args.out}")
    else:
        report = metrics_mod.metrics_report(graph)
        print(f"{graph.describe()}")
        print(f"avg_path_length = {fmt(report.avg_path_length)}")
        print(f"circuit_rank    = {report.circuit_rank}")
        print(f"degree_histogram = {report.degree_histogram}")
    return 0


_FIDELITY_COLUMNS = sweep._COLUMNS["fidelity"]


def cmd_fidelity(args):
    graph = _graph_from_args(args)
    options = ModelOptions(include_nn_repulsion=not args.no_nn_repulsion)
    record = records.compute_fidelity_record(
        graph, args.pairs, options=options, tol=args.tol, seed=args.seed,
        verbose=args.verbose,
    )
    cells = [sweep.SCHEMA_VERSION, record.family, record.boundary, record.nu,
             record.level_or_extent, record.num_nodes, record.n_pairs,
             record.effective_size, record.purity, record.chi_n,
             record.energy_ground, record.energy_ansatz, record.fidelity,
             record.iterations, record.residual]
    line = ",".join(fmt(c) for c in cells)
    print(",".join(_FIDELITY_COLUMNS))
    print(line)
    if args.out:
        path = Path(args.out)
        if not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(",".join(_FIDELITY_COLUMNS) + "\n")
        with path.open("a") as fh:
            fh.write(line + "\n")
    return 0


def _apply_overrides(config, args):
    if args.workers is not None:
        config = replace(config, workers=args.workers)
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    if args.tol is not None:
        config = replace(config, tol=args.tol)
    if getattr(args, "no_nn_repulsion", False):
        config = replace(config, include_nn_repulsion=False)
    return config


def _run_and_report(config, args):
    out_dir = args.out or "."
    path, failures = sweep.run_sweep(
        config, out_dir, resume=args.resume,
        drop_smallest=getattr(args, "drop_smallest", False),
        max_nodes=args.max_m,
    )
    print(f"wrote {path}")
    for label, n_pairs, error in failures:
        print(f"FAILED {label} N={n_pairs}: {error}", file=sys.stderr)
    return 1 if failures else 0


def cmd_sweep(args):
    config = sweep.parse_config_file(args.config)
    return _run_and_report(_apply_overrides(config, args), args)


def cmd_reproduce(args):
    config = sweep.load_preset(args.figure)
    return _run_and_report(_apply_overrides(config, args), args)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cobograph",
        description="Pair condensation on low-dimensional and fractal graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="generate a graph file plus metrics CSV")
    _add_family_flags(p_graph)
    p_graph.add_argument("--out", help="output directory")
    p_graph.set_defaults(func=cmd_graph)

    p_metrics = sub.add_parser("metrics", help="structural diagnostics of a graph")
    _add_family_flags(p_metrics)
    p_metrics.add_argument("--graph", help="edge-list file to load instead of --family")
    p_metrics.add_argument("--out", help="metrics CSV path (default: print summary)")
    p_metrics.set_defaults(func=cmd_metrics)

    p_fid = sub.add_parser("fidelity", help="condensate fidelity of one instance")
    _add_family_flags(p_fid)
    p_fid.add_argument("--graph", help="edge-list file to load instead of --family")
    p_fid.add_argument("--pairs", type=int, choices=(2, 3), default=2)
    p_fid.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_fid.add_argument("--seed", type=int, default=0)
    p_fid.add_argument("--no-nn-repulsion", action="store_true",
                       help="drop the nearest-neighbour repulsion (hard core only)")
    p_fid.add_argument("--out", help="CSV file to append the record to")
    p_fid.add_argument("--verbose", action="store_true")
    p_fid.set_defaults(func=cmd_fidelity)

    for name, help_text in (("sweep", "run a sweep config"), ("reproduce", "run a packaged preset")):
        p = sub.add_parser(name, help=help_text)
        if name == "sweep":
            p.add_argument("--config", required=True, help="sweep definition (INI)")
            p.set_defaults(func=cmd_sweep)
        else:
            p.add_argument("--figure", required=True,
                           choices=("fig2", "fig3", "fig4", "fig5", "fig6"))
            p.set_defaults(func=cmd_reproduce)
        p.add_argument("--out", help="output directory (default: cwd)")
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--resume", action="store_true",
                       help="keep rows already present in the output CSV")
        p.add_argument("--no-nn-repulsion", action="store_true")
        p.add_argument("--drop-smallest", action="store_true",
                       help="exclude each family's smallest size from dimension fits")
        p.add_argument("--max-m", type=int, default=None,
                       help="skip instances with more than this many nodes")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SizeTooSmall, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CobographError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
