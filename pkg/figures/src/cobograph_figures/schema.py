"""CSV contract of the cobograph datasets (schema_version 1).

This package is a pure consumer: it reads the published column layout and
never recomputes physics; anything beyond log10 axis transforms lives in
the producer.
"""
from __future__ import annotations

import csv
from pathlib import Path

SCHEMA_VERSION = "1"

COLUMNS = {
    "pathlength": ["schema_version", "family", "boundary", "nu", "level", "M",
                   "avg_path_length"],
    "fits": ["schema_version", "family", "boundary", "nu", "alpha", "intercept",
             "r_squared", "n_points"],
    "scatter": ["schema_version", "family", "boundary", "nu", "level", "M",
                "node_id", "betweenness", "p1"],
    "effective_size": ["schema_version", "family", "boundary", "nu", "level", "M",
                       "purity", "S"],
    "fidelity": ["schema_version", "family", "boundary", "nu", "level", "M", "N",
                 "S", "purity", "chi_n", "energy_ground", "energy_ansatz",
                 "fidelity", "iterations", "residual"],
}

DATASET_FILES = {
    "fig2": ("pathlength", "fig2_path_lengths.csv"),
    "fig2_fits": ("fits", "fig2_path_lengths_fits.csv"),
    "fig3": ("scatter", "fig3_scatter.csv"),
    "fig4": ("effective_size", "fig4_effective_size.csv"),
    "fig5": ("fidelity", "fig5_fidelity.csv"),
    "fig6": ("fidelity", "fig6_fidelity.csv"),
}


class SchemaMismatch(Exception):
    """Header or schema_version differs from the published contract."""


class MissingColumn(Exception):
    """A required column (or any data at all) is absent."""


def load_rows(path, kind):
    """Parse a dataset CSV into dicts, validating the column contract."""
    path = Path(path)
    if not path.exists():
        raise MissingColumn(f"{path}: dataset file not found")
    expected = COLUMNS[kind]
    lines = [
        line for line in path.read_text().splitlines()
        if line.strip() and not line.startswith("#")
    ]
    if not lines:
        raise MissingColumn(f"{path}: no header row")
    reader = csv.reader(lines)
    header = next(reader)
    if header != expected:
        missing = [c for c in expected if c not in header]
        if missing:
            raise MissingColumn(f"{path}: missing columns {missing}")
        raise SchemaMismatch(f"{path}: columns {header} != {expected}")
    rows = [dict(zip(header, record)) for record in reader]
    if not rows:
        raise MissingColumn(f"{path}: no data rows")
    bad_version = {row["schema_version"] for row in rows} - {SCHEMA_VERSION}
    if bad_version:
        raise SchemaMismatch(f"{path}: unsupported schema_version {sorted(bad_version)}")
    return rows


def series_key(row):
    """Grouping key for one plotted series."""
    return (row["family"], row["boundary"], row["nu"])


def series_label(key):
    family, boundary, nu = key
    label = family if not nu else f"{family} nu={nu}"
    if boundary == "closed":
        label += " CBC"
    return label
