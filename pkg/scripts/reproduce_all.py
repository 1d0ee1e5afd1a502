#!/usr/bin/env python3
"""Run every packaged dataset preset and, if available, render the figures.

Full runs take a while (the largest two-pair bases have ~6e5 states); use
--max-m for a quick pass, e.g. `python scripts/reproduce_all.py --max-m 200`.
"""
import argparse
import subprocess
import sys

FIGURES = ("fig2", "fig3", "fig4", "fig5", "fig6")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results")
    parser.add_argument("--max-m", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--skip-render", action="store_true")
    args = parser.parse_args()

    status = 0
    for figure in FIGURES:
        command = [sys.executable, "-m", "cobograph.cli", "reproduce",
                   "--figure", figure, "--out", args.out, "--resume"]
        if args.max_m is not None:
            command += ["--max-m", str(args.max_m)]
        if args.workers is not None:
            command += ["--workers", str(args.workers)]
        print("+", " ".join(command))
        status |= subprocess.call(command)

    if not args.skip_render:
        try:
            import cobograph_figures  # noqa: F401
        except ImportError:
            print("cobograph-figures not installed; skipping rendering "
                  "(pip install -e figures/)")
            return status
        for figure in FIGURES:
            command = [sys.executable, "-m", "cobograph_figures", figure,
                       "--data", args.out, "--out", args.out]
            print("+", " ".join(command))
            status |= subprocess.call(command)
    return status


if __name__ == "__main__":
    sys.exit(main())
