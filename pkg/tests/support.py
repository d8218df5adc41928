"""Shared generators and helpers for the test suite.

Everything is deterministic given a seed; the acceptance suite leans on
these to build boundary-biased populations (matrices engineered to sit near
the physicality / separability thresholds, where disagreement between
equivalent formulations would show up first).
"""
from __future__ import annotations

import numpy as np

import twomode as tm


def random_orthogonal(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish proper rotation via QR with sign fixing."""
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_spd(rng: np.random.Generator, dim: int, lo: float = 0.2,
               hi: float = 5.0) -> np.ndarray:
    """Random symmetric positive definite matrix with spectrum in [lo, hi]."""
    q = random_orthogonal(rng, dim)
    m = (q * rng.uniform(lo, hi, size=dim)) @ q.T
    return (m + m.T) / 2.0


def random_local_symplectic(rng: np.random.Generator) -> np.ndarray:
    """Block-diagonal symplectic: rotation-squeeze-rotation on each mode."""
    blocks_ = []
    for _ in range(2):
        blocks_.append(tm.rotation(rng.uniform(0.0, 2.0 * np.pi))
                       @ tm.squeeze(np.exp(rng.uniform(-0.7, 0.7)))
                       @ tm.rotation(rng.uniform(0.0, 2.0 * np.pi)))
    return tm.direct_sum(*blocks_)


def random_symplectic(rng: np.random.Generator, layers: int = 3) -> np.ndarray:
    """Generic (non-local) two-mode symplectic: local layers + balanced mixer."""
    s = np.eye(4)
    mixer = tm.balanced_mixer()
    for _ in range(layers):
        s = mixer @ random_local_symplectic(rng) @ s
    return s


def random_block_positive(rng: np.random.Generator) -> np.ndarray:
    """Symmetric 4x4 with positive definite diagonal blocks, arbitrary C.

    The whole matrix need not be positive definite — this is exactly the
    domain of the standard-form reduction.
    """
    a = random_spd(rng, 2, 0.3, 4.0)
    b = random_spd(rng, 2, 0.3, 4.0)
    c = rng.uniform(-2.0, 2.0, size=(2, 2))
    return np.block([[a, c], [c.T, b]])


def random_symmetric(rng: np.random.Generator, scale: float = 2.0) -> np.ndarray:
    """Symmetric 4x4 with entries uniform in [-scale, scale]."""
    m = np.zeros((4, 4))
    upper = np.triu_indices(4)
    m[upper] = rng.uniform(-scale, scale, size=len(upper[0]))
    return m + np.triu(m, 1).T


def random_physical_cm(rng: np.random.Generator) -> np.ndarray:
    """A bona fide two-mode CM: thermal normal form moved by a random
    symplectic, driven by the caller's generator."""
    nus = rng.uniform(1.0, 3.0, size=2)
    w = np.diag(np.repeat(nus, 2))
    return tm.congruence(w, random_symplectic(rng))


def _rescaled_to_boundary(rng: np.random.Generator) -> np.ndarray:
    """A physical CM scaled so nu_- (or nu~_-) lands within ~1e-6 of 1."""
    v = tm.random_physical(int(rng.integers(2 ** 31)))
    if rng.uniform() < 0.5:
        nu = tm.symplectic_spectrum_2mode(v).nu_minus
    else:
        nu = tm.ppt_spectrum_2mode(v).nu_minus
    return v * ((1.0 + rng.uniform(-1e-6, 1e-6)) / nu)


def _family_near_threshold(rng: np.random.Generator) -> np.ndarray:
    """Family members jittered around the analytic thresholds, then moved
    off the standard form by a random local symplectic (tags invariant)."""
    kind = rng.integers(4)
    if kind == 0:
        v = tm.simon_vx(0.125 + rng.uniform(-0.02, 0.02))
    elif kind == 1:
        v = tm.simon_vx((np.sqrt(33.0) - 1.0) / 16.0 + rng.uniform(-0.02, 0.02))
    elif kind == 2:
        v = tm.simon_vx(0.5 + rng.uniform(-0.02, 0.02))
    else:
        v = tm.two_mode_squeezed(abs(rng.uniform(-0.05, 0.05)))
    return tm.congruence(v, random_local_symplectic(rng))


def boundary_biased(count: int, seed: int):
    """Yield `count` symmetric 4x4 matrices biased toward decision boundaries.

    Mix: plain random symmetric (mostly unphysical), Wishart-like positive
    semidefinite-ish, physical CMs rescaled onto the nu_- / nu~_-
    boundaries, and family members jittered around their thresholds.
    """
    rng = np.random.default_rng(seed)
    for i in range(count):
        kind = i % 4
        if kind == 0:
            yield random_symmetric(rng)
        elif kind == 1:
            g = rng.normal(size=(4, 4))
            m = g @ g.T / 2.0
            yield (m + m.T) / 2.0
        elif kind == 2:
            yield _rescaled_to_boundary(rng)
        else:
            yield _family_near_threshold(rng)


def near_boundary(v: np.ndarray, tol: tm.Tolerance = tm.DEFAULT_TOL,
                  factor: float = 10.0) -> bool:
    """True when any decision margin sits within `factor` tolerance bands of 0.

    Mirrors the margins (and their bands) used by the physicality and
    classification routes; matrices flagged here are legitimately allowed to
    receive different verdicts from equivalent formulations.
    """
    v = tm.as_matrix(v)
    blk = tm.blocks(v, tol)
    inv = tm.two_mode_invariants(v, tol)
    _, heis = tm.heisenberg_oracle(v, tol)
    checks = [
        (heis, tol.threshold(v)),
        (float(np.linalg.eigvalsh(v)[0]), tol.threshold(v)),
        (float(np.linalg.eigvalsh(blk.a)[0]), tol.threshold(blk.a)),
        (float(np.linalg.eigvalsh(blk.b)[0]), tol.threshold(blk.b)),
        (inv.det_V - 1.0, tol.band(inv.det_V)),
        ((1.0 + inv.det_V) - inv.delta, tol.band(inv.delta, 1.0 + inv.det_V)),
        ((1.0 + inv.det_V) - inv.delta_tilde,
         tol.band(inv.delta_tilde, 1.0 + inv.det_V)),
        ((1.0 + inv.det_V) - inv.gamma_sep,
         tol.band(inv.gamma_sep, 1.0 + inv.det_V)),
        ((inv.det_V + inv.det_A * inv.det_B)
         - (2.0 * np.sqrt(max(inv.det_A * inv.det_B, 0.0)) + inv.det_C ** 2),
         tol.band(inv.det_V, inv.det_A * inv.det_B, inv.det_C ** 2)),
    ]
    if float(np.linalg.eigvalsh(v)[0]) > tol.threshold(v):
        checks.append((tm.symplectic_spectrum_2mode(v, tol).nu_minus - 1.0,
                       tol.band(1.0)))
        checks.append((tm.ppt_spectrum_2mode(v, tol).nu_minus - 1.0,
                       tol.band(1.0)))
    return any(abs(margin) <= factor * band for margin, band in checks)


def swap_modes(v: np.ndarray) -> np.ndarray:
    """Exchange the two modes: blocks A and B swap, C transposes."""
    perm = [2, 3, 0, 1]
    return v[np.ix_(perm, perm)]
