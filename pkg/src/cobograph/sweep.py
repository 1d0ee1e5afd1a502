"""Sweep runner: batches of graph instances -> deterministic CSV datasets.

Dataset rows are kept as formatted strings keyed by their identifying
tuple; files are rewritten sorted and atomically after every completed
instance. A resumed sweep therefore converges to the byte-identical file
an uninterrupted run would have produced (comment lines excepted), and
already-present rows are never recomputed or reformatted.

Dataset kinds and their columns (schema_version 1):

  fidelity        family,boundary,nu,level,M,N,S,purity,chi_n,
                  energy_ground,energy_ansatz,fidelity,iterations,residual
  pathlength      family,boundary,nu,level,M,avg_path_length
                  (plus a companion *_fits.csv: family,boundary,nu,alpha,
                   intercept,r_squared,n_points)
  scatter         family,boundary,nu,level,M,node_id,betweenness,p1
  effective_size  family,boundary,nu,level,M,purity,S

Floats are printed with 12 significant digits, decimal point '.', comma
separator; '#' lines are comments and only the generation timestamp line
varies between otherwise identical runs.
"""
from __future__ import annotations

import configparser
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from math import comb
from pathlib import Path

import numpy as np

from . import metrics, records
from .errors import CobographError
from .graphs import Boundary, Family
from .hamiltonian import ModelOptions
from .records import InstanceSpec
from .solver import DEFAULT_TOL

SCHEMA_VERSION = 1
N3_DIMENSION_CAP = 5_000_000

_COLUMNS = {
    "fidelity": ["schema_version", "family", "boundary", "nu", "level", "M", "N", "S",
                 "purity", "chi_n", "energy_ground", "energy_ansatz", "fidelity",
                 "iterations", "residual"],
    "pathlength": ["schema_version", "family", "boundary", "nu", "level", "M",
                   "avg_path_length"],
    "fits": ["schema_version", "family", "boundary", "nu", "alpha", "intercept",
             "r_squared", "n_points"],
    "scatter": ["schema_version", "family", "boundary", "nu", "level", "M", "node_id",
                "betweenness", "p1"],
    "effective_size": ["schema_version", "family", "boundary", "nu", "level", "M",
                       "purity", "S"],
}


def fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


@dataclass(frozen=True)
class SweepConfig:
    kind: str
    instances: tuple[InstanceSpec, ...]
    pairs: tuple[int, ...] = (2,)
    tol: float = DEFAULT_TOL
    seed: int = 0
    include_nn_repulsion: bool = True
    out_name: str = "sweep.csv"
    workers: int = 0
    name: str = "sweep"

    def resolved_workers(self):
        return self.workers if self.workers > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# config files

_SIZE_KEYS = ("sizes", "levels")


def parse_config(text, name="sweep"):
    parser = configparser.ConfigParser()
    parser.read_string(text)
    sweep = parser["sweep"] if parser.has_section("sweep") else {}
    kind = sweep.get("kind", "fidelity")
    if kind not in ("fidelity", "pathlength", "scatter", "effective_size"):
        raise CobographError(f"unknown sweep kind {kind!r}")
    instances = []
    for section in parser.sections():
        if not section.startswith("group:"):
            continue
        group = parser[section]
        family = Family(group["family"])
        boundary = Boundary(group.get("boundary", "open"))
        nu = int(group["nu"]) if "nu" in group else None
        sizes = None
        for key in _SIZE_KEYS:
            if key in group:
                sizes = [int(tok) for tok in group[key].split()]
        if not sizes:
            raise CobographError(f"[{section}] needs a 'sizes' list")
        for size in sizes:
            instances.append(InstanceSpec(family, size, boundary, nu))
    if not instances:
        raise CobographError("config defines no [group:*] sections")
    pairs = tuple(int(tok) for tok in str(sweep.get("pairs", "2")).replace(",", " ").split())
    if any(n not in (2, 3) for n in pairs):
        raise CobographError("pairs must be a subset of {2, 3}")
    config = SweepConfig(
        kind=kind,
        instances=tuple(instances),
        pairs=pairs,
        tol=float(sweep.get("tol", DEFAULT_TOL)),
        seed=int(sweep.get("seed", 0)),
        include_nn_repulsion=parser.getboolean("sweep", "nn_repulsion", fallback=True)
        if parser.has_section("sweep") else True,
        out_name=sweep.get("out", f"{name}.csv"),
        workers=int(sweep.get("workers", 0)),
        name=name,
    )
    validate_config(config)
    return config


def parse_config_file(path):
    path = Path(path)
    return parse_config(path.read_text(), name=path.stem)


def validate_config(config):
    for spec in config.instances:
        graph = spec.build()  # raises SizeTooSmall and friends eagerly
        if config.kind == "fidelity" and 3 in config.pairs:
            if comb(graph.num_nodes, 3) > N3_DIMENSION_CAP:
                raise CobographError(
                    f"{spec.label()}: three-pair basis {comb(graph.num_nodes, 3)} "
                    f"exceeds cap {N3_DIMENSION_CAP}"
                )


def load_preset(figure):
    """Packaged, version-pinned sweep definition for a dataset id."""
    ref = resources.files("cobograph").joinpath("presets", f"{figure}.ini")
    if not ref.is_file():
        raise CobographError(f"no preset named {figure!r}")
    return parse_config(ref.read_text(), name=figure)


# ---------------------------------------------------------------------------
# CSV IO


def _header_lines(config):
    return [
        f"# cobograph {config.kind} dataset {config.name} schema_version={SCHEMA_VERSION}",
        f"# generated: {datetime.now(timezone.utc).isoformat(timespec='seconds')}",
        f"# seed={config.seed} tol={fmt(config.tol)} nn_repulsion={config.include_nn_repulsion}",
    ]


def write_dataset(path, config, rows, columns_key=None):
    """Atomically (re)write a dataset: comments, header row, sorted rows."""
    columns = _COLUMNS[columns_key or config.kind]
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = _header_lines(config)
    lines.append(",".join(columns))
    lines.extend(rows[key] for key in sorted(rows))
    handle, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(handle, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def read_rows(path, key_fields, columns):
    """Existing data rows as {key tuple: raw line}, for resume."""
    path = Path(path)
    rows = {}
    if not path.exists():
        return rows
    header = None
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split(",")
            if header != columns:
                raise CobographError(
                    f"{path}: existing columns {header} do not match {columns}"
                )
            continue
        cells = dict(zip(header, line.split(",")))
        key = tuple(_key_cell(cells[field]) for field in key_fields)
        rows[key] = line
    return rows


def _key_cell(cell):
    return int(cell) if cell.lstrip("-").isdigit() else (cell or 0)


# ---------------------------------------------------------------------------
# jobs


def _fidelity_job(spec, n_pairs, tol, seed, include_nn_repulsion):
    graph = spec.build()
    record = records.compute_fidelity_record(
        graph, n_pairs, options=ModelOptions(include_nn_repulsion), tol=tol, seed=seed
    )
    cells = [SCHEMA_VERSION, record.family, record.boundary, record.nu,
             record.level_or_extent, record.num_nodes, record.n_pairs,
             record.effective_size, record.purity, record.chi_n,
             record.energy_ground, record.energy_ansatz, record.fidelity,
             record.iterations, record.residual]
    return record.key(), ",".join(fmt(c) for c in cells)


def _meta_cells(graph):
    meta = graph.meta
    return [SCHEMA_VERSION, meta.family.value, meta.boundary.value, meta.nu,
            meta.level_or_extent, graph.num_nodes]


def _instance_key(graph, *extra):
    meta = graph.meta
    return (meta.family.value, meta.boundary.value, meta.nu or 0, graph.num_nodes, *extra)


def run_fidelity_sweep(config, out_dir, resume=False, max_nodes=None, progress=None):
    """Run (or finish) a fidelity sweep; returns (csv path, failures)."""
    out_path = Path(out_dir) / config.out_name
    columns = _COLUMNS["fidelity"]
    rows = read_rows(out_path, ("family", "boundary", "nu", "M", "N"), columns) \
        if resume else {}
    jobs = []
    for spec in config.instances:
        graph = spec.build()
        if max_nodes is not None and graph.num_nodes > max_nodes:
            continue
        for n_pairs in config.pairs:
            if graph.num_nodes < n_pairs or comb(graph.num_nodes, n_pairs) > N3_DIMENSION_CAP:
                continue
            key = _instance_key(graph, n_pairs)
            if key not in rows:
                jobs.append((spec, n_pairs))
    failures = []
    args = (config.tol, config.seed, config.include_nn_repulsion)

    def finish(spec, n_pairs, outcome, error=None):
        if error is not None:
            failures.append((spec.label(), n_pairs, error))
            print(f"[sweep] FAILED {spec.label()} N={n_pairs}: {error}", file=sys.stderr)
            return
        key, line = outcome
        rows[key] = line
        write_dataset(out_path, config, rows)
        if progress:
            progress(spec, n_pairs)

    workers = min(config.resolved_workers(), max(1, len(jobs)))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                pool.submit(_fidelity_job, spec, n_pairs, *args): (spec, n_pairs)
                for spec, n_pairs in jobs
            }
            for future in as_completed(futures):
                spec, n_pairs = futures[future]
                try:
                    finish(spec, n_pairs, future.result())
                except Exception as exc:  # instance failures must not kill the sweep
                    finish(spec, n_pairs, None, error=exc)
    else:
        for spec, n_pairs in jobs:
            try:
                finish(spec, n_pairs, _fidelity_job(spec, n_pairs, *args))
            except Exception as exc:
                finish(spec, n_pairs, None, error=exc)
    if not jobs or failures:
        write_dataset(out_path, config, rows)
    return out_path, failures


def run_pathlength_dataset(config, out_dir, drop_smallest=False, max_nodes=None):
    """Average path length per instance plus per-family dimension fits."""
    out_path = Path(out_dir) / config.out_name
    fits_path = out_path.with_name(out_path.stem + "_fits.csv")
    rows, groups = {}, {}
    for spec in config.instances:
        graph = spec.build()
        if max_nodes is not None and graph.num_nodes > max_nodes:
            continue
        length = metrics.average_path_length(graph)
        rows[_instance_key(graph)] = ",".join(
            fmt(c) for c in _meta_cells(graph) + [length]
        )
        groups.setdefault((spec.family, spec.boundary, spec.nu), []).append(
            (graph.num_nodes, length)
        )
    write_dataset(out_path, config, rows)
    fit_rows = {}
    for (family, boundary, nu), points in groups.items():
        points.sort()
        if drop_smallest:
            points = points[1:]
        if len(points) < 3:
            continue
        fit = metrics.fit_dimension(points)
        # intercept of the log-log fit so plots can draw the line directly
        log_m = np.log([m for m, _ in fit.points])
        log_l = np.log([l for _, l in fit.points])
        intercept = float(log_l.mean() - log_m.mean() / fit.alpha)
        key = (family.value, boundary.value, nu or 0)
        cells = [SCHEMA_VERSION, family.value, boundary.value, nu,
                 fit.alpha, intercept, fit.r_squared, len(points)]
        fit_rows[key] = ",".join(fmt(c) for c in cells)
    write_dataset(fits_path, config, fit_rows, columns_key="fits")
    return out_path, []


def run_scatter_dataset(config, out_dir, max_nodes=None):
    """Per-node betweenness and single-pair occupation probability."""
    out_path = Path(out_dir) / config.out_name
    rows = {}
    for spec in config.instances:
        graph = spec.build()
        if max_nodes is not None and graph.num_nodes > max_nodes:
            continue
        betweenness = metrics.betweenness_centrality(graph)
        state = records.single_pair_ground_state(graph, tol=config.tol, seed=config.seed)
        occupation = state.amplitudes ** 2
        base = _meta_cells(graph)
        for node in range(graph.num_nodes):
            rows[_instance_key(graph, node)] = ",".join(
                fmt(c) for c in base + [node, float(betweenness[node]), float(occupation[node])]
            )
    write_dataset(out_path, config, rows)
    return out_path, []


def run_effective_size_dataset(config, out_dir, max_nodes=None):
    """Effective size S = 1/P of the single-pair ground state per instance."""
    out_path = Path(out_dir) / config.out_name
    rows = {}
    for spec in config.instances:
        graph = spec.build()
        if max_nodes is not None and graph.num_nodes > max_nodes:
            continue
        profile = records.coboson_profile(graph, tol=config.tol, seed=config.seed)
        rows[_instance_key(graph)] = ",".join(
            fmt(c) for c in _meta_cells(graph) + [profile.purity, profile.effective_size]
        )
    write_dataset(out_path, config, rows)
    return out_path, []


_RUNNERS = {
    "fidelity": run_fidelity_sweep,
    "pathlength": run_pathlength_dataset,
    "scatter": run_scatter_dataset,
    "effective_size": run_effective_size_dataset,
}


def run_sweep(config, out_dir, resume=False, drop_smallest=False, max_nodes=None):
    if config.kind == "fidelity":
        return run_fidelity_sweep(config, out_dir, resume=resume, max_nodes=max_nodes)
    if config.kind == "pathlength":
        return run_pathlength_dataset(config, out_dir, drop_smallest=drop_smallest,
                                      max_nodes=max_nodes)
    return _RUNNERS[config.kind](config, out_dir, max_nodes=max_nodes)
