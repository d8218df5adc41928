r"""Williamson normal form of positive definite matrices on 2n modes.

Every symmetric positive definite V of even dimension admits a symplectic S
with S V S^T = W = diag(nu_1, nu_1, ..., nu_n, nu_n); the nu_k are the
symplectic eigenvalues. The constructive route used here:

1. form the inverse square root V^{-1/2} (orthogonal diagonalization),
2. build the antisymmetric X = V^{-1/2} Omega V^{-1/2},
3. find a proper rotation O block-rotating X into (+)_k a_k omega by pairing
   conjugate eigenvectors of X (equivalently of the Hermitian iX),
4. assemble S = W^{1/2} R V^{-1/2} with nu_k = 1/a_k.

S is symplectic by construction: S Omega S^T = W^{1/2} (R X R^T) W^{1/2}
= (+)_k nu_k a_k omega = Omega. R itself is orthogonal with det +1 but not
in general symplectic; only the product is.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneracyWarning,
    DimensionError,
    InternalInconsistency,
    NotPositiveDefinite,
    PairingError,
    SingularInput,
    SymmetryError,
)
from .invariants import MAX_MODES, symplectic_spectrum_general
from .symplectic import DEFAULT_TOL, Tolerance, as_matrix, omega, require_symmetric

__all__ = [
    "WilliamsonDecomposition",
    "inv_sqrt",
    "build_x",
    "skew_block_rotation",
    "williamson_decompose",
]


@dataclass(frozen=True)
class WilliamsonDecomposition:
    """Normal form W, the symplectic S achieving it, and the pieces.

    normal_form: diagonal with paired entries (nu_1, nu_1, ..., nu_n, nu_n),
        nu ascending.
    transform: symplectic S with S V S^T = normal_form.
    rotation: the proper rotation R in S = W^(1/2) R V^(-1/2).
    skew: cached V^(-1/2) Omega V^(-1/2) (antisymmetric).
    spectrum: the nu_k, ascending, one entry per mode.
    degenerate: true when two symplectic eigenvalues coincide within
        tolerance (the decomposition is then valid but not unique up to
        local rotations only).
    """

    normal_form: np.ndarray
    transform: np.ndarray
    rotation: np.ndarray
    skew: np.ndarray
    spectrum: np.ndarray
    degenerate: bool


def inv_sqrt(v, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Symmetric M with M V M = I for symmetric positive definite V."""
    v = as_matrix(v)
    require_symmetric(v, tol)
    evals, q = np.linalg.eigh(v)
    if evals[0] <= tol.threshold(v):
        raise NotPositiveDefinite(
            f"matrix is not positive definite (min eigenvalue {evals[0]:.3e})",
            min_eig=float(evals[0]))
    m = (q / np.sqrt(evals)) @ q.T
    return (m + m.T) / 2.0


def _skew_kernel(inv_root: np.ndarray) -> np.ndarray:
    """Antisymmetric part of M Omega M (exact antisymmetrization)."""
    n_modes = inv_root.shape[0] // 2
    x = inv_root @ omega(n_modes) @ inv_root
    return (x - x.T) / 2.0


def build_x(v, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The antisymmetric V^(-1/2) Omega V^(-1/2) for positive definite V."""
    v = as_matrix(v)
    if v.shape[0] % 2:
        raise DimensionError(f"dimension must be even, got {v.shape[0]}")
    return _skew_kernel(inv_sqrt(v, tol))


def _pair_basis(n_modes: int) -> np.ndarray:
    """Unitary mapping each conjugate eigenvector pair to a real 2x2 plane.

    Block diagonal with blocks (1/sqrt 2) [[i, -i], [1, 1]]; unitarity is
    what makes the assembled rotation orthogonal for every choice of
    diagonalizing eigenbasis.
    """
    gamma_block = np.array([[1j, -1j], [1.0, 1.0]]) / np.sqrt(2.0)
    out = np.zeros((2 * n_modes, 2 * n_modes), dtype=complex)
    for k in range(n_modes):
        out[2 * k:2 * k + 2, 2 * k:2 * k + 2] = gamma_block
    return out


def skew_block_rotation(xs, tol: Tolerance = DEFAULT_TOL, *,
                        phases=None) -> tuple[np.ndarray, np.ndarray]:
    """Proper-rotation block-diagonalization of a nonsingular antisymmetric Xs.

    Returns (o, a) with o @ Xs @ o.T = (+)_k a_k omega, the a_k positive and
    ascending. The eigenvectors of Xs come in conjugate pairs (v, conj(v))
    with eigenvalues (+i a, -i a); each pair is rotated onto a real
    coordinate plane by the unitary pair basis, which yields a real
    orthogonal o for any eigenbasis.

    phases, when given, multiplies the k-th pair by e^{+-i phases[k]} before
    assembly; the result is another valid rotation (used to exercise the
    eigenbasis freedom in tests).
    """
    xs = as_matrix(xs)
    dim = xs.shape[0]
    if dim % 2:
        raise DimensionError(f"dimension must be even, got {dim}")
    anti_residual = float(np.max(np.abs(xs + xs.T)))
    if anti_residual > tol.threshold(xs):
        raise SymmetryError(
            f"matrix is not antisymmetric (max |X + X^T| = {anti_residual:.3e})")
    n_modes = dim // 2

    # i*Xs is Hermitian; its eigenvalue -a pairs with the Xs eigenvalue +ia.
    evals, vecs = np.linalg.eigh(1j * xs)
    neg, pos = evals[:n_modes], evals[n_modes:]
    band = tol.band(*np.abs(evals))
    if float(np.max(np.abs(neg[::-1] + pos))) > 16.0 * band:
        raise PairingError(
            f"eigenvalues do not split into conjugate pairs: {evals}")
    a_desc = -neg  # descending since eigh sorts ascending
    if a_desc[-1] <= tol.threshold(xs):
        raise SingularInput(
            f"antisymmetric matrix is singular to tolerance "
            f"(smallest pair magnitude {a_desc[-1]:.3e})")

    a_asc = a_desc[::-1]
    if phases is not None and len(phases) != n_modes:
        raise ValueError(f"expected {n_modes} phases, got {len(phases)}")
    u = np.zeros((dim, dim), dtype=complex)
    for k in range(n_modes):
        vec = vecs[:, n_modes - 1 - k]  # +i a_asc[k] eigenvector of Xs
        if phases is not None:
            vec = vec * np.exp(1j * phases[k])
        # Conjugate partner (eigenvalue -i a_k) sits in the odd slot of the
        # pair; it is defined as the entrywise conjugate rather than taken
        # from the solver, which guarantees the pairing under degeneracy.
        u[:, 2 * k] = np.conj(vec)
        u[:, 2 * k + 1] = vec
    o = _pair_basis(n_modes) @ u.conj().T

    imag_residual = float(np.max(np.abs(o.imag)))
    if imag_residual > 10.0 * tol.band(1.0):
        raise InternalInconsistency(
            f"assembled rotation has imaginary residue {imag_residual:.3e}")
    o = o.real
    ortho_residual = float(np.max(np.abs(o @ o.T - np.eye(dim))))
    if ortho_residual > 10.0 * tol.band(1.0):
        raise InternalInconsistency(
            f"assembled rotation departs from orthogonality by {ortho_residual:.3e}")
    return o, np.asarray(a_asc, dtype=float)


def williamson_decompose(v, tol: Tolerance = DEFAULT_TOL, *,
                         phases=None) -> WilliamsonDecomposition:
    """Full Williamson decomposition of a symmetric positive definite V.

    Computes W, the symplectic S with S V S^T = W and S Omega S^T = Omega,
    and the proper rotation R with S = W^(1/2) R V^(-1/2). Issues a
    DegeneracyWarning (and flags the result) when two symplectic eigenvalues
    coincide within tolerance; the decomposition itself remains valid.
    """
    v = as_matrix(v)
    dim = v.shape[0]
    if dim % 2:
        raise DimensionError(f"dimension must be even, got {dim}")
    n_modes = dim // 2
    if n_modes > MAX_MODES:
        raise DimensionError(
            f"supported up to {MAX_MODES} modes, got {n_modes}")
    require_symmetric(v, tol)

    inv_root = inv_sqrt(v, tol)
    skew = _skew_kernel(inv_root)
    o, a_asc = skew_block_rotation(skew, tol, phases=phases)

    # Ascending nu = 1/a means descending a: reverse the block order with a
    # block-reversal permutation (even, hence still a proper rotation).
    reversal = np.kron(np.eye(n_modes)[::-1], np.eye(2))
    r = reversal @ o
    nus = 1.0 / a_asc[::-1]
    w = np.diag(np.repeat(nus, 2))
    s = np.repeat(np.sqrt(nus), 2)[:, None] * (r @ inv_root)

    det_r = float(np.linalg.det(r))
    if abs(det_r - 1.0) > 100.0 * tol.band(1.0):
        raise InternalInconsistency(f"rotation determinant {det_r!r} is not +1")
    reference = symplectic_spectrum_general(v, tol)
    if float(np.max(np.abs(nus - reference))) > 1e-8 * float(np.max(reference)):
        raise InternalInconsistency(
            f"eigenvector route spectrum {nus} disagrees with "
            f"product-eigenvalue route {reference}")

    degenerate = bool(np.any(np.diff(nus) <= tol.band(*nus))) if n_modes > 1 else False
    if degenerate:
        warnings.warn(DegeneracyWarning(
            "symplectic spectrum is degenerate within tolerance; the "
            "decomposition is valid but the rotation is not unique"),
            stacklevel=2)
    return WilliamsonDecomposition(normal_form=w, transform=s, rotation=r,
                                   skew=skew, spectrum=nus,
                                   degenerate=degenerate)
