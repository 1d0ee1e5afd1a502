#!/usr/bin/env python3
"""Fidelity of the two-pair condensate ansatz on chains vs the analytic limits.

Closed chains approach 8/pi^2, open chains 2^17/(pi^4 45^2); this prints
the convergence table used to sanity-check the solver stack.
"""
import argparse
from math import pi

from cobograph.graphs import Boundary, make_chain
from cobograph.records import compute_fidelity_record

LIMITS = {Boundary.CLOSED: 8 / pi ** 2, Boundary.OPEN: 2 ** 17 / (pi ** 4 * 45 ** 2)}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=256)
    parser.add_argument("--seed", type=int, default=20230428)
    args = parser.parse_args()

    sizes = [m for m in (16, 32, 64, 128, 256, 512, 1024) if m <= args.max_m]
    for boundary, limit in LIMITS.items():
        print(f"# chain {boundary.value}: limit {limit:.10f}")
        for m in sizes:
            record = compute_fidelity_record(make_chain(m, boundary), 2, seed=args.seed)
            print(f"M={m:5d}  F2={record.fidelity:.8f}  "
                  f"gap={abs(record.fidelity - limit):.2e}  S={record.effective_size:8.1f}")


if __name__ == "__main__":
    main()
