"""Synthetic datasets conforming to schema_version 1."""
import math

import pytest


def _write(path, header, rows):
    lines = ["# synthetic dataset", header]
    lines += [",".join(str(c) for c in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


@pytest.fixture
def dataset_dir(tmp_path):
    sizes = [16, 64, 256, 1024]
    path_rows = []
    for family, boundary, alpha in (
        ("chain", "open", 1.0),
        ("chain", "closed", 1.0),
        ("square", "open", 2.0),
        ("vicsek", "open", 1.26),
    ):
        nu = "3" if family == "vicsek" else ""
        for level, m in enumerate(sizes, start=1):
            length = 0.5 * m ** (1 / alpha)
            path_rows.append((1, family, boundary, nu, level, m, f"{length:.6f}"))
    _write(
        tmp_path / "fig2_path_lengths.csv",
        "schema_version,family,boundary,nu,level,M,avg_path_length",
        path_rows,
    )
    fit_rows = []
    for family, boundary, alpha in (
        ("chain", "open", 1.0),
        ("chain", "closed", 1.0),
        ("square", "open", 2.0),
        ("vicsek", "open", 1.26),
    ):
        nu = "3" if family == "vicsek" else ""
        fit_rows.append((1, family, boundary, nu, alpha, math.log(0.5), 0.999, 4))
    _write(
        tmp_path / "fig2_path_lengths_fits.csv",
        "schema_version,family,boundary,nu,alpha,intercept,r_squared,n_points",
        fit_rows,
    )

    scatter_rows = []
    for node in range(16):
        g = node / 16
        scatter_rows.append((1, "vicsek", "open", 3, 2, 16, node, f"{g:.4f}",
                             f"{(1 + node) / 136:.6f}"))
    _write(
        tmp_path / "fig3_scatter.csv",
        "schema_version,family,boundary,nu,level,M,node_id,betweenness,p1",
        scatter_rows,
    )

    size_rows = []
    for family, boundary, factor in (
        ("chain", "closed", 1.0),
        ("chain", "open", 0.67),
        ("vicsek", "open", 0.2),
    ):
        nu = "3" if family == "vicsek" else ""
        for level, m in enumerate(sizes, start=1):
            s = factor * m
            size_rows.append((1, family, boundary, nu, level, m,
                              f"{1 / s:.8f}", f"{s:.6f}"))
    _write(
        tmp_path / "fig4_effective_size.csv",
        "schema_version,family,boundary,nu,level,M,purity,S",
        size_rows,
    )

    for name, n_pairs in (("fig5_fidelity.csv", 2), ("fig6_fidelity.csv", 3)):
        fid_rows = []
        for family, boundary, base in (
            ("chain", "closed", 0.81),
            ("chain", "open", 0.66),
            ("square", "open", 0.92),
            ("vicsek", "open", 0.65),
        ):
            nu = "3" if family == "vicsek" else ""
            for level, m in enumerate(sizes, start=1):
                fid_rows.append((
                    1, family, boundary, nu, level, m, n_pairs,
                    f"{0.8 * m:.4f}", f"{1 / (0.8 * m):.8f}", 0.9,
                    -2.0, -1.9, f"{base + 0.01 * level:.6f}", 120, "1e-12",
                ))
        _write(
            tmp_path / name,
            "schema_version,family,boundary,nu,level,M,N,S,purity,chi_n,"
            "energy_ground,energy_ansatz,fidelity,iterations,residual",
            fid_rows,
        )
    return tmp_path
