#!/usr/bin/env python3
"""Race every independent route and confirm they agree.

Each route computes the same function by genuinely different means, so
their pairwise agreement over a long range is strong evidence against a
bug hiding in any single one.  This prints per-route timings; the point
is not speed but independence.
"""

import argparse
import time

from hofg import (
    MemoTable,
    g_via_decomposition,
    g_via_phi,
    gbar_via_complement,
    gbar_via_flip,
    gbar_via_g_correction,
)


def timed(label, fn):
    started = time.perf_counter()
    result = fn()
    print(f"  {label:<28} {time.perf_counter() - started:6.2f} s")
    return result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=200_000,
                        help="top of the compared range (default 200000)")
    args = parser.parse_args()
    top = args.max

    print(f"g routes over [0, {top}]:")
    runs = {
        "defining equation": timed(
            "defining equation", lambda: MemoTable("g").prefix(top + 1)),
        "difference bits": timed(
            "difference bits",
            lambda: MemoTable("g", rule="delta").prefix(top + 1)),
        "rank shift": timed(
            "rank shift",
            lambda: [g_via_decomposition(n) for n in range(top + 1)]),
        "golden-ratio floor": timed(
            "golden-ratio floor",
            lambda: [g_via_phi(n) for n in range(top + 1)]),
    }
    agree = len({tuple(v) for v in runs.values()}) == 1
    print(f"  all four agree: {agree}")

    print(f"gbar routes over [0, {top}]:")
    runs = {
        "defining equation": timed(
            "defining equation", lambda: MemoTable("gbar").prefix(top + 1)),
        "difference bits": timed(
            "difference bits",
            lambda: MemoTable("gbar", rule="delta").prefix(top + 1)),
        "flip conjugation": timed(
            "flip conjugation",
            lambda: [gbar_via_flip(n) for n in range(top + 1)]),
        "three-odd correction": timed(
            "three-odd correction",
            lambda: [gbar_via_g_correction(n) for n in range(top + 1)]),
        "complement ranks": timed(
            "complement ranks",
            lambda: [gbar_via_complement(n) for n in range(top + 1)]),
    }
    agree = len({tuple(v) for v in runs.values()}) == 1
    print(f"  all five agree: {agree}")


if __name__ == "__main__":
    main()
