"""Compare the pure-Python and compiled enumeration kernels.

Usage: python3 benchmarks/bench_kernel.py [--heavy]

The default set covers representative groups up to order 24; --heavy adds
the large-automorphism-group cases (orders 16 and 27) where the compiled
kernel matters most.
"""

from __future__ import annotations

import argparse
import time

from skewbrace.catalog import catalog_groups
from skewbrace.groups import automorphism_group
from skewbrace.holomorph import enumerate_regular_subgroups
from skewbrace.kernel import available_kernels


def bench(group, kernel: str, repeats: int = 1) -> tuple[float, int]:
    aut = automorphism_group(group)
    best = float("inf")
    found = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = enumerate_regular_subgroups(group, aut, threads=1, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
        found = len(result)
    return best, found


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true")
    args = parser.parse_args()

    cases = [("8.5", 3), ("12.3", 3), ("18.4", 2), ("24.4", 1)]
    if args.heavy:
        cases += [("27.1", 1), ("16.1", 1)]

    kernels = available_kernels()
    print(f"kernels available: {', '.join(kernels)}")
    header = f"{'group':>8} {'found':>7}" + "".join(f"{k + ' (s)':>12}" for k in kernels)
    print(header)
    for ident, repeats in cases:
        n = int(ident.split(".")[0])
        group = next(g for g in catalog_groups(n) if g.label == ident)
        times = {}
        found = None
        for k in kernels:
            t, cnt = bench(group, k, repeats)
            times[k] = t
            if found is None:
                found = cnt
            elif found != cnt:
                raise SystemExit(f"kernel disagreement on {ident}: {found} vs {cnt}")
        row = f"{ident:>8} {found:>7}" + "".join(f"{times[k]:>12.3f}" for k in kernels)
        print(row)
    if len(kernels) == 2:
        print("(identical result counts confirm kernel parity on these cases)")


if __name__ == "__main__":
    main()
