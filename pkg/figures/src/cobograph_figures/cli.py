"""Command line entry point: one invocation renders one figure id."""
from __future__ import annotations

import argparse
import sys

from .render import _BUILDERS, render
from .schema import MissingColumn, SchemaMismatch


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="cobograph-figures",
        description="Render figures from cobograph CSV datasets",
    )
    parser.add_argument("figure", choices=sorted(_BUILDERS))
    parser.add_argument("--data", default=".", help="directory holding the CSV datasets")
    parser.add_argument("--out", default=".", help="directory for SVG/PNG output")
    args = parser.parse_args(argv)
    try:
        paths = render(args.figure, args.data, args.out)
    except (MissingColumn, SchemaMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in paths:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
