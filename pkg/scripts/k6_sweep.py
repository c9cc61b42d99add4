"""Exhaustive sweep of 2-colourings of K_n for monochromatic triangles."""
import argparse
import time

from ramsey_descent.oracle import enumerate_colourings, find_mono_odd_cycle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for n in range(3, args.max_n + 1):
        t0 = time.perf_counter()
        total = free = 0
        for ec in enumerate_colourings(n, 2):
            total += 1
            free += find_mono_odd_cycle(ec, 3) is None
        print(f"n={n} colourings={total} triangle_free={free} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
