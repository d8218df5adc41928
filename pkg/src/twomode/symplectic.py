r"""Symplectic-form primitives for two-mode correlation matrices.

Conventions used throughout the package:

* mode-major quadrature ordering (q1, p1, q2, p2, ...);
* hbar-scaled units in which the vacuum correlation matrix is the identity;
* the symplectic form is Omega = omega (+) omega (+) ... with
  omega = [[0, 1], [-1, 0]].

All public operations take and return plain float64 ndarrays and validate
shape, finiteness and (where required) symmetry at the boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NonFiniteError, SymmetryError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "TwoModeBlocks",
    "omega",
    "rotation",
    "squeeze",
    "direct_sum",
    "is_symplectic",
    "congruence",
    "blocks",
    "partial_transpose",
    "as_matrix",
    "require_symmetric",
    "symmetric_part",
]


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerances, applied as ``abs + rel * scale``.

    ``scale`` is the largest absolute element of the operand (a cheap proxy
    for its spectral scale, adequate at the 4x4 sizes this package targets).
    """

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if self.rel < 0 or self.abs < 0:
            raise ValueError("tolerances must be nonnegative")

    def threshold(self, *operands: np.ndarray) -> float:
        """Absolute comparison threshold for the given matrix operands."""
        scale = 0.0
        for m in operands:
            m = np.asarray(m)
            if m.size:
                scale = max(scale, float(np.max(np.abs(m))))
        return self.abs + self.rel * scale

    def band(self, *values: float) -> float:
        """Threshold for scalar margin comparisons; scale floor of 1."""
        scale = 1.0
        for v in values:
            if np.isfinite(v):
                scale = max(scale, abs(float(v)))
        return self.abs + self.rel * scale


DEFAULT_TOL = Tolerance()

_OMEGA2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def as_matrix(m) -> np.ndarray:
    """Validate and return ``m`` as a square float64 matrix.

    Raises DimensionError for anything that is not a square 2D array and
    NonFiniteError if any entry is NaN or infinite.
    """
    arr = np.array(m, dtype=float, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("matrix contains NaN or infinite entries")
    return arr


def symmetric_part(m: np.ndarray) -> np.ndarray:
    return (m + m.T) / 2


def require_symmetric(m: np.ndarray, tol: Tolerance = DEFAULT_TOL, what: str = "matrix") -> None:
    gap = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    if gap > tol.threshold(m):
        raise SymmetryError(f"{what} is not symmetric: max |M - M^T| = {gap:.3e}")


def _require_even(m: np.ndarray) -> int:
    dim = m.shape[0]
    if dim % 2:
        raise DimensionError(f"dimension must be even, got {dim}")
    return dim // 2


def omega(n_modes: int) -> np.ndarray:
    """Symplectic form for ``n_modes`` modes in mode-major ordering.

    Parameters
    ----------
    n_modes : int
        Number of modes, at least 1.

    Returns
    -------
    ndarray
        The 2n x 2n block-diagonal antisymmetric matrix (+)_k omega with
        omega = [[0, 1], [-1, 0]]; satisfies Omega^2 = -I and det Omega = 1.
    """
    if n_modes < 1:
        raise DimensionError("n_modes must be a positive integer")
    return np.kron(np.eye(n_modes), _OMEGA2)


def rotation(angle: float) -> np.ndarray:
    """Single-mode phase rotation [[cos, -sin], [sin, cos]]."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def squeeze(xi: float) -> np.ndarray:
    """Single-mode squeezing matrix diag(sqrt(xi), 1/sqrt(xi)), xi > 0."""
    if xi <= 0:
        raise ValueError("squeezing parameter must be positive")
    r = np.sqrt(xi)
    return np.diag([r, 1.0 / r])


def direct_sum(*mats: np.ndarray) -> np.ndarray:
    """Block-diagonal direct sum of square matrices."""
    dims = [m.shape[0] for m in mats]
    out = np.zeros((sum(dims), sum(dims)))
    pos = 0
    for m, d in zip(mats, dims):
        out[pos:pos + d, pos:pos + d] = m
        pos += d
    return out


def is_symplectic(s, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether ``s`` preserves the symplectic form, S Omega S^T = Omega.

    In the 2x2 case this is equivalent to det S = 1.
    """
    s = as_matrix(s)
    n = _require_even(s)
    form = omega(n)
    product = s @ form @ s.T
    return float(np.max(np.abs(product - form))) <= tol.threshold(product)


def congruence(v, s) -> np.ndarray:
    """Transport of a correlation matrix, V -> S V S^T.

    The result is explicitly re-symmetrized as (M + M^T)/2 so that chained
    congruences cannot drift away from symmetry; callers transporting
    non-symmetric matrices should form the product themselves.
    """
    v = as_matrix(v)
    s = as_matrix(s)
    if v.shape != s.shape:
        raise DimensionError(
            f"incompatible shapes {v.shape} and {s.shape} for congruence")
    return symmetric_part(s @ v @ s.T)


@dataclass(frozen=True)
class TwoModeBlocks:
    """2x2 blocks of a two-mode correlation matrix [[A, C], [C^T, B]]."""

    a: np.ndarray  # mode-1 diagonal block
    b: np.ndarray  # mode-2 diagonal block
    c: np.ndarray  # cross-correlation block (mode-1 rows, mode-2 columns)

    def matrix(self) -> np.ndarray:
        """Reassemble the 4x4 matrix [[A, C], [C^T, B]]."""
        return np.block([[self.a, self.c], [self.c.T, self.b]])


def blocks(v, tol: Tolerance = DEFAULT_TOL) -> TwoModeBlocks:
    """Split a symmetric 4x4 matrix into its two-mode blocks.

    For exactly symmetric input ``TwoModeBlocks.matrix`` reproduces the
    source bit for bit.
    """
    v = as_matrix(v)
    if v.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 matrix, got shape {v.shape}")
    require_symmetric(v, tol)
    return TwoModeBlocks(v[:2, :2].copy(), v[2:, 2:].copy(), v[:2, 2:].copy())


def partial_transpose(v) -> np.ndarray:
    """Partial transpose of the second mode: V -> Lambda V Lambda.

    Lambda = diag(1, 1, 1, -1) flips the second mode's momentum (phase-space
    time reversal of that mode). Applying it twice returns the input exactly,
    and det V is unchanged.
    """
    v = as_matrix(v)
    if v.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 matrix, got shape {v.shape}")
    out = v.copy()
    out[3, :] *= -1.0
    out[:, 3] *= -1.0
    return out
