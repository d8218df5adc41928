r"""Symplectic invariants and spectra of two-mode correlation matrices.

The local invariants of V = [[A, C], [C^T, B]] are det A, det B, det C and
I4 = Tr(A w C w B w C^T w) with w the single-mode symplectic form; they
combine into the global invariants

    Delta       = det A + det B + 2 det C
    Delta~      = det A + det B - 2 det C   (partial transpose)
    Gamma_sep   = det A + det B + 2 |det C| = max(Delta, Delta~)

and satisfy det V = det A det B + det C^2 - I4 for every symmetric V.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InternalInconsistency,
    NotPositiveDefinite,
    NumericalError,
    PairingError,
)
from .symplectic import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    blocks,
    omega,
    partial_transpose,
    require_symmetric,
)

__all__ = [
    "TwoModeInvariants",
    "SymplecticSpectrum2",
    "two_mode_invariants",
    "symplectic_spectrum_2mode",
    "ppt_spectrum_2mode",
    "symplectic_spectrum_general",
]

_W2 = omega(1)

# Ambient cap for the general spectrum; everything here is desk-scale.
MAX_MODES = 8

# The det V identity holds for every symmetric 4x4, so a violation beyond
# this (relative) band means the determinant or trace arithmetic went wrong.
_IDENTITY_BAND = 1e-8


@dataclass(frozen=True)
class TwoModeInvariants:
    """Local and global symplectic invariants of a two-mode matrix."""

    det_A: float
    det_B: float
    det_C: float
    det_V: float
    I4: float
    delta: float
    delta_tilde: float
    gamma_sep: float


@dataclass(frozen=True)
class SymplecticSpectrum2:
    """Two-mode symplectic spectrum, nu_minus <= nu_plus."""

    nu_minus: float
    nu_plus: float


def _det2(m: np.ndarray) -> float:
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def two_mode_invariants(v, tol: Tolerance = DEFAULT_TOL) -> TwoModeInvariants:
    """Compute all eight invariants of a symmetric 4x4 matrix.

    I4 is evaluated from its trace definition, independently of the
    determinants; the identity det V = det A det B + det C^2 - I4 is then
    asserted as a free self-test (InternalInconsistency on failure).
    """
    v = as_matrix(v)
    blk = blocks(v, tol)
    det_a = _det2(blk.a)
    det_b = _det2(blk.b)
    det_c = _det2(blk.c)
    det_v = float(np.linalg.det(v))
    i4 = float(np.trace(blk.a @ _W2 @ blk.c @ _W2 @ blk.b @ _W2 @ blk.c.T @ _W2))
    residual = det_v - (det_a * det_b + det_c**2 - i4)
    scale = 1.0 + abs(det_a * det_b) + det_c**2 + abs(i4) + abs(det_v)
    if abs(residual) > _IDENTITY_BAND * scale:
        raise InternalInconsistency(
            f"det V identity violated: residual {residual:.3e} at scale {scale:.3e}")
    return TwoModeInvariants(
        det_A=det_a,
        det_B=det_b,
        det_C=det_c,
        det_V=det_v,
        I4=i4,
        delta=det_a + det_b + 2 * det_c,
        delta_tilde=det_a + det_b - 2 * det_c,
        gamma_sep=det_a + det_b + 2 * abs(det_c),
    )


def _spectrum_from_delta(delta: float, det_v: float, tol: Tolerance) -> SymplecticSpectrum2:
    # nu_-^2, nu_+^2 are the roots of z^2 - Delta z + det V = 0.
    rad = delta * delta - 4.0 * det_v
    band = tol.band(delta * delta, 4.0 * det_v)
    if rad < -band:
        raise NumericalError(
            f"Delta^2 - 4 det V = {rad:.3e} is negative beyond tolerance")
    rad = max(rad, 0.0)
    root = np.sqrt(rad)
    out = []
    for sq in ((delta - root) / 2.0, (delta + root) / 2.0):
        if sq < -band:
            raise NumericalError(f"squared symplectic eigenvalue {sq:.3e} < 0")
        out.append(float(np.sqrt(max(sq, 0.0))))
    return SymplecticSpectrum2(nu_minus=out[0], nu_plus=out[1])


def _require_positive_definite(v: np.ndarray, tol: Tolerance) -> None:
    min_eig = float(np.linalg.eigvalsh(v)[0])
    if min_eig <= tol.threshold(v):
        raise NotPositiveDefinite(
            f"matrix is not positive definite (min eigenvalue {min_eig:.3e})",
            min_eig=min_eig)


def symplectic_spectrum_2mode(v, tol: Tolerance = DEFAULT_TOL) -> SymplecticSpectrum2:
    """Two-mode symplectic spectrum via nu_-+ = sqrt((Delta -+ sqrt(Delta^2 - 4 det V))/2).

    Requires positive definite input (the closed form presumes a Williamson
    decomposition exists). The radicand is clamped to 0 when within tolerance
    (degenerate spectrum); larger violations raise NumericalError.
    """
    v = as_matrix(v)
    inv = two_mode_invariants(v, tol)
    _require_positive_definite(v, tol)
    return _spectrum_from_delta(inv.delta, inv.det_V, tol)


def ppt_spectrum_2mode(v, tol: Tolerance = DEFAULT_TOL) -> SymplecticSpectrum2:
    """Symplectic spectrum of the partial transpose, same code path on Lambda V Lambda."""
    return symplectic_spectrum_2mode(partial_transpose(v), tol)


def symplectic_spectrum_general(v, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Symplectic eigenvalues of a 2n x 2n positive definite matrix, ascending.

    Computed as the absolute values of the eigenvalues of i Omega V, which
    come in +-nu_k pairs; each adjacent pair of sorted moduli is collapsed to
    its mean. PairingError if a pair gap exceeds tolerance.
    """
    v = as_matrix(v)
    n = v.shape[0] // 2
    if v.shape[0] % 2:
        raise DimensionError(f"dimension must be even, got {v.shape[0]}")
    if n > MAX_MODES:
        raise DimensionError(f"supported up to {MAX_MODES} modes, got {n}")
    require_symmetric(v, tol)
    _require_positive_definite(v, tol)
    mods = np.sort(np.abs(np.linalg.eigvals(omega(n) @ v)))
    nus = np.empty(n)
    for k in range(n):
        lo, hi = mods[2 * k], mods[2 * k + 1]
        if hi - lo > tol.band(hi):
            raise PairingError(
                f"eigenvalue moduli {lo!r} and {hi!r} fail to pair")
        nus[k] = (lo + hi) / 2.0
    return nus
