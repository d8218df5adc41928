#!/usr/bin/env python3
"""Locate the decision thresholds of the correlated-thermal family V(x).

Sweeps x, prints the margin table, then bisects each sign change:

- the uncertainty-principle margin (min eigenvalue of V + i Omega),
  analytic threshold x = 1/2;
- det V - 1, analytic threshold x = (sqrt(33) - 1)/16;
- the det-form uncertainty inequality margin, which is nonnegative on
  0 < x <= 1/8 and again for x >= 1/2 despite the matrix being unphysical
  below 1/2 - the family exists to exhibit exactly that gap.

Usage: python scripts/vx_thresholds.py [--step 0.01] [--to 1.0]
"""
import argparse
import math

import twomode as tm


def margins(x: float) -> tuple[float, float, float]:
    v = tm.simon_vx(x)
    inv = tm.two_mode_invariants(v)
    _, heis = tm.heisenberg_oracle(v)
    det_form = (inv.det_A * inv.det_B + (1.0 - inv.det_C) ** 2 - inv.I4
                - inv.det_A - inv.det_B)
    return heis, inv.det_V - 1.0, det_form


def bisect(f, lo: float, hi: float, iters: int = 80) -> float:
    f_lo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (f(mid) >= 0.0) == (f_lo >= 0.0):
            lo, f_lo = mid, f(mid)
        else:
            hi = mid
    return 0.5 * (lo + hi)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--step", type=float, default=0.01)
    parser.add_argument("--to", dest="stop", type=float, default=1.0)
    args = parser.parse_args()

    print(f"{'x':>6}  {'heis margin':>13}  {'det V - 1':>13}  "
          f"{'det-form margin':>16}  tag")
    grid = []
    k = 1
    while k * args.step <= args.stop + 1e-12:
        grid.append(k * args.step)
        k += 1
    for x in grid:
        heis, detv, det_form = margins(x)
        tag = tm.classify_global(tm.simon_vx(x)).tag.value
        print(f"{x:6.3f}  {heis:13.6f}  {detv:13.6f}  {det_form:16.6f}  {tag}")

    print()
    named = (
        ("uncertainty principle", lambda x: margins(x)[0], 0.3, 0.7, 0.5),
        ("det V = 1", lambda x: margins(x)[1], 0.2, 0.4,
         (math.sqrt(33.0) - 1.0) / 16.0),
        ("det-form margin (upper)", lambda x: margins(x)[2], 0.3, 0.7, 0.5),
        ("det-form margin (lower)", lambda x: margins(x)[2], 0.05, 0.2, 0.125),
    )
    for name, f, lo, hi, exact in named:
        root = bisect(f, lo, hi)
        print(f"{name}: crossing at x = {root:.12f} "
              f"(analytic {exact:.12f}, |err| = {abs(root - exact):.2e})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
