#!/usr/bin/env python3
"""Residual statistics for the Williamson decomposition on random SPD input.

Draws random symmetric positive definite matrices per mode count, decomposes
each, and reports max/median of the two defect norms
|S Omega S^T - Omega|_max and |S V S^T - W|_max (the latter scale-relative),
plus the worst spectrum deviation from the |i Omega V| eigenvalues.

Usage: python scripts/williamson_residuals.py [--draws 1000] [--max-modes 4]
       [--seed 7]
"""
import argparse
import warnings

import numpy as np

import twomode as tm


def run_size(n_modes: int, draws: int, seed: int) -> tuple[dict, dict, float]:
    rng = np.random.default_rng(seed)
    om = tm.omega(n_modes)
    sympl, form, worst_spec = [], [], 0.0
    for _ in range(draws):
        g = rng.normal(size=(2 * n_modes, 2 * n_modes))
        q, _ = np.linalg.qr(g)
        v = q @ np.diag(rng.uniform(0.2, 5.0, size=2 * n_modes)) @ q.T
        v = (v + v.T) / 2.0
        dec = tm.williamson_decompose(v)
        s, w = dec.transform, dec.normal_form
        scale = max(1.0, float(np.max(np.abs(v))))
        sympl.append(float(np.max(np.abs(s @ om @ s.T - om))))
        form.append(float(np.max(np.abs(s @ v @ s.T - w))) / scale)
        target = np.sort(np.abs(np.linalg.eigvals(1j * om @ v).real))
        worst_spec = max(worst_spec, float(np.max(np.abs(
            np.repeat(dec.spectrum, 2) - target))) / max(1.0, target[-1]))
    stats = lambda xs: {"max": max(xs), "median": float(np.median(xs))}  # noqa: E731
    return stats(sympl), stats(form), worst_spec


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--draws", type=int, default=1000)
    parser.add_argument("--max-modes", type=int, default=4)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    print(f"{'n':>3}  {'sympl max':>11}  {'sympl med':>11}  "
          f"{'form max':>11}  {'form med':>11}  {'spectrum dev':>13}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", tm.DegeneracyWarning)
        for n in range(1, args.max_modes + 1):
            sympl, form, spec = run_size(n, args.draws, args.seed + n)
            print(f"{n:3d}  {sympl['max']:11.3e}  {sympl['median']:11.3e}  "
                  f"{form['max']:11.3e}  {form['median']:11.3e}  {spec:13.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
