"""Render the figure analogues from the published CSV datasets.

Every renderer is deterministic (fixed canvas, fonts and hash salt, no
timestamps in the output) so re-rendering the same inputs reproduces the
same bytes. Marker face convention throughout: open boundaries are filled,
closed boundaries are empty.
"""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams.update({
    "figure.figsize": (7.0, 5.0),
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.family": "DejaVu Sans",
    "font.size": 10,
    "svg.hashsalt": "cobograph-figures",
})

import matplotlib.pyplot as plt

from .schema import DATASET_FILES, load_rows, series_key, series_label

_MARKERS = {
    "chain": "o",
    "square": "s",
    "triangular": "^",
    "hexagonal": "h",
    "sierpinski": "v",
    "hanoi": "D",
    "vicsek": "*",
    "star": "P",
    "complete": "X",
    "custom": ".",
}

_COLORS = {
    "chain": "tab:blue",
    "square": "tab:orange",
    "sierpinski": "tab:green",
    "vicsek": "tab:red",
    "hanoi": "tab:purple",
    "triangular": "tab:brown",
    "hexagonal": "tab:pink",
    "star": "tab:gray",
    "complete": "tab:olive",
    "custom": "black",
}


def _style(key):
    family, boundary, nu = key
    color = _COLORS.get(family, "black")
    if family == "vicsek" and nu == "4":
        color = "tab:cyan"
    return {
        "marker": _MARKERS.get(family, "o"),
        "color": color,
        "facecolor": color if boundary != "closed" else "none",
    }


def _grouped(rows, value_fields):
    series = {}
    for row in rows:
        values = tuple(float(row[field]) for field in value_fields)
        series.setdefault(series_key(row), []).append(values)
    return {key: sorted(points) for key, points in series.items()}


def _scatter(ax, key, xs, ys):
    style = _style(key)
    ax.scatter(
        xs, ys, label=series_label(key), marker=style["marker"],
        edgecolors=style["color"], facecolors=style["facecolor"], s=45,
        linewidths=1.2, zorder=3,
    )


def _save(fig, out_dir, name):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for suffix in ("svg", "png"):
        path = out_dir / f"{name}.{suffix}"
        fig.savefig(path, metadata={"Date": None} if suffix == "svg" else None)
        written.append(path)
    plt.close(fig)
    return written


def build_fig2(data_dir):
    rows = load_rows(Path(data_dir) / DATASET_FILES["fig2"][1], "pathlength")
    fits = load_rows(Path(data_dir) / DATASET_FILES["fig2_fits"][1], "fits")
    fig, ax = plt.subplots()
    series = _grouped(rows, ("M", "avg_path_length"))
    for key, points in sorted(series.items()):
        xs = [m for m, _ in points]
        ys = [l for _, l in points]
        _scatter(ax, key, xs, ys)
    for row in fits:
        key = series_key(row)
        if key not in series:
            continue
        alpha = float(row["alpha"])
        intercept = float(row["intercept"])
        xs = [m for m, _ in series[key]]
        grid = [xs[0] * (xs[-1] / xs[0]) ** (t / 40) for t in range(41)]
        line = [math.exp(intercept + math.log(m) / alpha) for m in grid]
        ax.plot(grid, line, linestyle=":", color=_style(key)["color"],
                linewidth=1.2, zorder=2)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("number of sites M")
    ax.set_ylabel("average path length")
    ax.legend(fontsize=8)
    return fig


def build_fig3(data_dir):
    rows = load_rows(Path(data_dir) / DATASET_FILES["fig3"][1], "scatter")
    series = _grouped(rows, ("betweenness", "p1", "M"))
    count = max(1, len(series))
    ncols = 2 if count > 1 else 1
    nrows = (count + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(7.0, 3.0 * nrows), squeeze=False)
    flat = [ax for row in axes for ax in row]
    for ax in flat[count:]:
        ax.set_visible(False)
    for ax, (key, points) in zip(flat, sorted(series.items())):
        xs = [g for g, _, _ in points]
        ys = [p for _, p, _ in points]
        m = points[0][2]
        _scatter(ax, key, xs, ys)
        ax.axhline(1.0 / m, linestyle="--", color="gray", linewidth=1.0,
                   label="uniform 1/M")
        ax.set_title(f"{series_label(key)} (M={int(m)})", fontsize=9)
        ax.set_xlabel("betweenness g")
        ax.set_ylabel("occupation p1")
        ax.legend(fontsize=7)
    fig.tight_layout()
    return fig


def build_fig4(data_dir):
    rows = load_rows(Path(data_dir) / DATASET_FILES["fig4"][1], "effective_size")
    fig, ax = plt.subplots()
    series = _grouped(rows, ("M", "S"))
    lo, hi = math.inf, 0.0
    for key, points in sorted(series.items()):
        xs = [math.log10(m) for m, _ in points]
        ys = [math.log10(s) for _, s in points]
        lo = min(lo, min(xs))
        hi = max(hi, max(xs))
        _scatter(ax, key, xs, ys)
    ax.plot([lo, hi], [lo, hi], linestyle="--", color="black", linewidth=1.0,
            label="identity M = S")
    ax.set_xlabel("log10(M)")
    ax.set_ylabel("log10(S)")
    ax.legend(fontsize=8)
    return fig


def _build_fidelity(data_dir, dataset):
    rows = load_rows(Path(data_dir) / DATASET_FILES[dataset][1], "fidelity")
    n_values = sorted({row["N"] for row in rows})
    fig, ax = plt.subplots()
    series = _grouped(rows, ("S", "fidelity"))
    for key, points in sorted(series.items()):
        xs = [math.log10(s) for s, _ in points]
        ys = [f for _, f in points]
        _scatter(ax, key, xs, ys)
    ax.set_xlabel("log10(S)")
    ax.set_ylabel("fidelity F" + "/".join(n_values))
    ax.set_ylim(0.0, 1.05)
    ax.legend(fontsize=8)
    return fig


def build_fig5(data_dir):
    return _build_fidelity(data_dir, "fig5")


def build_fig6(data_dir):
    return _build_fidelity(data_dir, "fig6")


_BUILDERS = {
    "fig2": build_fig2,
    "fig3": build_fig3,
    "fig4": build_fig4,
    "fig5": build_fig5,
    "fig6": build_fig6,
}


def render(figure, data_dir, out_dir):
    """Build one figure from its CSVs and write SVG + PNG; returns paths."""
    if figure not in _BUILDERS:
        raise KeyError(f"unknown figure id {figure!r}")
    fig = _BUILDERS[figure](data_dir)
    return _save(fig, out_dir, figure)
