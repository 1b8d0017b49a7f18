#!/usr/bin/env python3
"""Convergence study of the discrete radial Rayleigh quotient.

Two sweeps toward the sharp constant (n-1)^2/4: widening the logarithmic
support at fixed spacing (the dominant effect, excess ~ (pi / log-width)^2)
and refining the spacing at fixed support.  The discrete value stays above
the constant throughout and decreases monotonically along each sweep.
"""

import argparse
import math
import sys

from lsv.rayleigh import hardy_target, log_grid, rayleigh_infimum


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    args = ap.parse_args()
    n = args.n
    target = hardy_target(n)
    print(f"target (n-1)^2/4 = {target}\n")

    print("| support decades | cells | infimum | excess | (pi/width)^2 |")
    print("|---|---|---|---|---|")
    ok = True
    prev = math.inf
    for half in (4, 8, 12, 16):
        grid = log_grid((-half, half), 128)
        value = rayleigh_infimum(n, grid)
        width = 2 * half * math.log(10.0)
        print(f"| [-{half}, {half}] | {grid.cells} | {value:.8f} |"
              f" {value - target:.2e} | {(math.pi / width) ** 2:.2e} |")
        ok = ok and target <= value <= prev + 1e-12
        prev = value

    print("\n| cells per decade | cells | infimum | excess |")
    print("|---|---|---|---|")
    prev = math.inf
    for cpd in (16, 32, 64, 128):
        grid = log_grid((-8, 8), cpd)
        value = rayleigh_infimum(n, grid)
        print(f"| {cpd} | {grid.cells} | {value:.8f} | {value - target:.2e} |")
        ok = ok and target <= value <= prev + 1e-12
        prev = value
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
