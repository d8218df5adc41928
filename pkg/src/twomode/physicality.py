r"""Bona fide tests: is a symmetric 4x4 matrix a physical two-mode CM?

Three independent routes are provided and must agree:

* ``heisenberg_oracle``: smallest eigenvalue of the Hermitian matrix
  V + i Omega (the uncertainty principle, works for any mode number);
* ``check_global``: V > 0, det V >= 1 and Delta <= 1 + det V;
* ``check_local``: A > 0, B > 0, Delta <= 1 + det V and
  2 sqrt(det A det B) + det C^2 <= det V + det A det B,
  evaluated directly on the blocks, never via the standard-form reduction.

Verdict policy: inequality margins are inclusive (>= -tol); strict
positive definiteness uses > +tol, with near-zero margins flagged as
borderline in the report.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError
from .invariants import symplectic_spectrum_2mode, two_mode_invariants
from .symplectic import DEFAULT_TOL, Tolerance, as_matrix, blocks, omega, require_symmetric

__all__ = [
    "BonaFideReport",
    "StandardFormEigs",
    "is_positive_definite",
    "heisenberg_oracle",
    "check_global",
    "check_local",
    "standard_form_hermitian_eigs",
]


@dataclass(frozen=True)
class BonaFideReport:
    """Physicality verdict with per-condition margins.

    ``margins`` maps condition names to signed distances from the boundary
    (nonnegative means satisfied). ``nu_minus`` carries the equivalent
    spectral form when the matrix is positive definite (global route only).
    ``borderline`` is set when some margin sits within tolerance of 0.
    """

    verdict: bool
    route: str  # "global" or "local"
    margins: dict[str, float] = field(default_factory=dict)
    nu_minus: float | None = None
    borderline: bool = False


@dataclass(frozen=True)
class StandardFormEigs:
    """Closed-form eigenvalues of V + i Omega for a standard-form matrix.

    Subscript (first sign) selects the inner square root, superscript
    (second sign) the outer one: lambda_pm is the minimum eigenvalue.
    """

    lambda_pp: float
    lambda_mp: float
    lambda_pm: float
    lambda_mm: float
    mu_aux: float
    nu_aux: float

    def ordered(self) -> np.ndarray:
        """The four eigenvalues in ascending order."""
        return np.sort([self.lambda_pp, self.lambda_mp, self.lambda_pm, self.lambda_mm])


def is_positive_definite(m, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Strict positive definiteness via the smallest eigenvalue.

    Decided by eigenvalue rather than a factorization success flag so the
    margin is always available; values within tolerance of 0 count as not
    positive definite.
    """
    m = as_matrix(m)
    require_symmetric(m, tol)
    return float(np.linalg.eigvalsh(m)[0]) > tol.threshold(m)


def heisenberg_oracle(v, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Uncertainty-principle test V + i Omega >= 0 for any mode number.

    Returns ``(verdict, min_eig)`` where ``min_eig`` is the smallest
    eigenvalue of the Hermitian matrix V + i Omega; the verdict is inclusive
    at the boundary (min_eig >= -tol).
    """
    v = as_matrix(v)
    if v.shape[0] % 2:
        raise DimensionError(f"dimension must be even, got {v.shape[0]}")
    require_symmetric(v, tol)
    h = v + 1j * omega(v.shape[0] // 2)
    min_eig = float(np.linalg.eigvalsh(h)[0])
    return min_eig >= -tol.threshold(v), min_eig


def check_global(v, tol: Tolerance = DEFAULT_TOL) -> BonaFideReport:
    """Global bona fide conditions: V > 0, det V >= 1, Delta <= 1 + det V."""
    v = as_matrix(v)
    inv = two_mode_invariants(v, tol)
    min_eig_v = float(np.linalg.eigvalsh(v)[0])
    margins = {
        "min_eig_V": min_eig_v,
        "det_V_minus_1": inv.det_V - 1.0,
        "delta_margin": (1.0 + inv.det_V) - inv.delta,
    }
    eig_thr = tol.threshold(v)
    det_band = tol.band(inv.det_V)
    delta_band = tol.band(inv.delta, 1.0 + inv.det_V)
    positive = min_eig_v > eig_thr
    verdict = (positive
               and margins["det_V_minus_1"] >= -det_band
               and margins["delta_margin"] >= -delta_band)
    nu_minus = None
    if positive:
        nu_minus = symplectic_spectrum_2mode(v, tol).nu_minus
    borderline = (abs(min_eig_v) <= eig_thr
                  or abs(margins["det_V_minus_1"]) <= det_band
                  or abs(margins["delta_margin"]) <= delta_band)
    return BonaFideReport(verdict=verdict, route="global", margins=margins,
                          nu_minus=nu_minus, borderline=borderline)


def check_local(v, tol: Tolerance = DEFAULT_TOL) -> BonaFideReport:
    """Local bona fide conditions evaluated on the blocks of V.

    A > 0, B > 0, Delta <= 1 + det V and the block inequality
    2 sqrt(det A det B) + det C^2 <= det V + det A det B. Equivalent to the
    global conditions; kept free of any standard-form reduction so the two
    routes stay independent.
    """
    v = as_matrix(v)
    blk = blocks(v, tol)
    inv = two_mode_invariants(v, tol)
    min_eig_a = float(np.linalg.eigvalsh(blk.a)[0])
    min_eig_b = float(np.linalg.eigvalsh(blk.b)[0])
    # det A det B >= 0 whenever both blocks pass positivity; the clamp only
    # keeps the margin finite on inputs that already failed.
    prod = max(inv.det_A * inv.det_B, 0.0)
    block_margin = (inv.det_V + inv.det_A * inv.det_B) - (2.0 * np.sqrt(prod) + inv.det_C**2)
    margins = {
        "min_eig_A": min_eig_a,
        "min_eig_B": min_eig_b,
        "delta_margin": (1.0 + inv.det_V) - inv.delta,
        "block_margin": block_margin,
    }
    eig_thr = tol.threshold(blk.a)
    eig_thr_b = tol.threshold(blk.b)
    delta_band = tol.band(inv.delta, 1.0 + inv.det_V)
    block_band = tol.band(inv.det_V, inv.det_A * inv.det_B, inv.det_C**2)
    verdict = (min_eig_a > eig_thr
               and min_eig_b > eig_thr_b
               and margins["delta_margin"] >= -delta_band
               and block_margin >= -block_band)
    borderline = (abs(min_eig_a) <= eig_thr
                  or abs(min_eig_b) <= eig_thr_b
                  or abs(margins["delta_margin"]) <= delta_band
                  or abs(block_margin) <= block_band)
    return BonaFideReport(verdict=verdict, route="local", margins=margins,
                          borderline=borderline)


def standard_form_hermitian_eigs(a: float, b: float, c_plus: float,
                                 c_minus: float) -> StandardFormEigs:
    r"""Closed-form spectrum of V + i Omega for a standard-form matrix.

    With mu = 4 + (a-b)^2 + 2(c+^2 + c-^2) and
    nu = 4(a-b)^2 + (c+ + c-)^2 [4 + (c+ - c-)^2], the four eigenvalues are

        2 lambda_(+-)^(+) = a + b + sqrt(mu +- 2 sqrt(nu))
        2 lambda_(+-)^(-) = a + b - sqrt(mu +- 2 sqrt(nu))

    mu >= 4 and nu >= 0 for every real quadruple; tiny negative radicands
    from roundoff are clamped to 0.
    """
    mu = 4.0 + (a - b) ** 2 + 2.0 * (c_plus**2 + c_minus**2)
    nu = 4.0 * (a - b) ** 2 + (c_plus + c_minus) ** 2 * (4.0 + (c_plus - c_minus) ** 2)
    outer_p = np.sqrt(max(mu + 2.0 * np.sqrt(max(nu, 0.0)), 0.0))
    outer_m = np.sqrt(max(mu - 2.0 * np.sqrt(max(nu, 0.0)), 0.0))
    s = a + b
    return StandardFormEigs(
        lambda_pp=(s + outer_p) / 2.0,
        lambda_mp=(s + outer_m) / 2.0,
        lambda_pm=(s - outer_p) / 2.0,
        lambda_mm=(s - outer_m) / 2.0,
        mu_aux=float(mu),
        nu_aux=float(nu),
    )
