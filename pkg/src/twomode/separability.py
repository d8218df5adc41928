r"""Separability classification of two-mode Gaussian correlation matrices.

A physical CM is separable as a Gaussian state iff its partial transpose is
again physical, which reduces to nu~_- >= 1 for the PPT symplectic spectrum
or, in determinant form, Delta~ <= 1 + det V (equivalently
Gamma = det A + det B + 2|det C| <= 1 + det V once Delta <= 1 + det V holds).

Both the spectrum route and the determinant route are evaluated and cross
checked; the production verdict comes from the determinant route, which is
better conditioned near the boundary. Disagreement beyond the tolerance band
raises InternalInconsistency and indicates a bug, never bad input.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InternalInconsistency, NotPositiveDefinite, PreconditionViolated
from .invariants import (
    ppt_spectrum_2mode,
    symplectic_spectrum_2mode,
    two_mode_invariants,
)
from .physicality import check_global, check_local
from .symplectic import DEFAULT_TOL, Tolerance, as_matrix, blocks

__all__ = [
    "Tag",
    "Classification",
    "classify_global",
    "classify_local",
    "simon_criterion",
    "posdef_criterion",
]


class Tag(enum.Enum):
    """Classification outcome for a symmetric 4x4 matrix."""

    UNPHYSICAL = "Unphysical"
    SEPARABLE = "SeparableGaussianCM"
    ENTANGLED = "EntangledGaussianCM"


@dataclass(frozen=True)
class Classification:
    """Tag plus the margins that led to it and a human-readable reason."""

    tag: Tag
    reason: str
    margins: dict[str, float] = field(default_factory=dict)


# Cross-assertions between equivalent formulations tolerate disagreement
# only when some deciding margin sits within this many tolerance bands of 0.
_BOUNDARY_FACTOR = 10.0


def _near(margin: float, band: float) -> bool:
    return abs(margin) <= _BOUNDARY_FACTOR * band


def classify_global(v, tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Classify via the global route: V > 0, nu_- >= 1, then nu~_- vs 1.

    The determinant forms (det V >= 1, Delta <= 1 + det V for physicality;
    Delta~ <= 1 + det V for separability) are evaluated alongside the
    spectral forms and the two must agree away from the boundary band.
    """
    v = as_matrix(v)
    report = check_global(v, tol)
    inv = two_mode_invariants(v, tol)
    margins = dict(report.margins)
    dt_band = tol.band(inv.delta_tilde, 1.0 + inv.det_V)
    margins["delta_tilde_margin"] = (1.0 + inv.det_V) - inv.delta_tilde

    positive = margins["min_eig_V"] > tol.threshold(v)
    nu_band = tol.band(1.0)
    if positive:
        spec = symplectic_spectrum_2mode(v, tol)
        ppt = ppt_spectrum_2mode(v, tol)
        margins["nu_minus_minus_1"] = spec.nu_minus - 1.0
        margins["nu_tilde_minus_minus_1"] = ppt.nu_minus - 1.0
        # Physicality, spectral form: nu_- >= 1. Must match the verdict of
        # the determinant form except within the boundary band.
        phys_spec = margins["nu_minus_minus_1"] >= -nu_band
        if phys_spec != report.verdict and not (
                _near(margins["nu_minus_minus_1"], nu_band)
                or _near(margins["det_V_minus_1"], tol.band(inv.det_V))
                or _near(margins["delta_margin"], tol.band(inv.delta, 1.0 + inv.det_V))):
            raise InternalInconsistency(
                "spectral and determinant physicality forms disagree: "
                f"nu_- - 1 = {margins['nu_minus_minus_1']:.3e}, margins {margins}")

    if not report.verdict:
        if not positive:
            reason = "V is not positive definite"
        elif margins["det_V_minus_1"] < 0:
            reason = "det V < 1"
        else:
            reason = "Delta > 1 + det V"
        return Classification(Tag.UNPHYSICAL, reason, margins)

    # Physical from here on; det V~ = det V >= 1 already holds, so the PPT
    # stage is decided by Delta~ alone.
    if margins["det_V_minus_1"] < -_BOUNDARY_FACTOR * tol.band(inv.det_V):
        raise InternalInconsistency("physical verdict with det V < 1")

    sep_det = margins["delta_tilde_margin"] >= -dt_band
    sep_spec = margins["nu_tilde_minus_minus_1"] >= -nu_band
    if sep_det != sep_spec and not (
            _near(margins["delta_tilde_margin"], dt_band)
            or _near(margins["nu_tilde_minus_minus_1"], nu_band)):
        raise InternalInconsistency(
            "spectral and determinant separability forms disagree: "
            f"nu~_- - 1 = {margins['nu_tilde_minus_minus_1']:.3e}, "
            f"Delta~ margin = {margins['delta_tilde_margin']:.3e}")
    if sep_det:
        return Classification(
            Tag.SEPARABLE, "partial transpose is physical (nu~_- >= 1)", margins)
    return Classification(
        Tag.ENTANGLED, "partial transpose violates the uncertainty principle "
        "(nu~_- < 1, Delta~ > 1 + det V)", margins)


def classify_local(v, tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Classify purely from block-determinant inequalities (no spectra).

    Physicality per the local conditions (A, B > 0, Delta <= 1 + det V and
    the block inequality), then Gamma = det A + det B + 2|det C| vs
    1 + det V for separability. Agrees with classify_global everywhere; the
    two implementations share no intermediate quantities beyond the raw
    invariants.
    """
    v = as_matrix(v)
    report = check_local(v, tol)
    inv = two_mode_invariants(v, tol)
    margins = dict(report.margins)
    margins["gamma_margin"] = (1.0 + inv.det_V) - inv.gamma_sep
    margins["delta_tilde_margin"] = (1.0 + inv.det_V) - inv.delta_tilde

    if not report.verdict:
        blk = blocks(v, tol)
        delta_band = tol.band(inv.delta, 1.0 + inv.det_V)
        if margins["min_eig_A"] <= tol.threshold(blk.a):
            reason = "block A is not positive definite"
        elif margins["min_eig_B"] <= tol.threshold(blk.b):
            reason = "block B is not positive definite"
        elif margins["delta_margin"] < -delta_band:
            reason = "Delta > 1 + det V"
        else:
            reason = "2 sqrt(det A det B) + det C^2 > det V + det A det B"
        return Classification(Tag.UNPHYSICAL, reason, margins)

    gamma_band = tol.band(inv.gamma_sep, 1.0 + inv.det_V)
    if margins["gamma_margin"] >= -gamma_band:
        return Classification(
            Tag.SEPARABLE, "Gamma <= 1 + det V (PPT holds)", margins)
    return Classification(
        Tag.ENTANGLED, "Gamma > 1 + det V with Delta <= 1 + det V "
        "(PPT violated)", margins)


def simon_criterion(v, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Separability inequality for matrices already known to be physical.

    Returns true iff det A det B + (1 + det C)^2 - I4 >= det A + det B,
    equivalently Delta~ <= 1 + det V; for a Gaussian state this is exactly
    separability. The bona fide precondition is enforced as a hard error:
    consulted on an unphysical matrix the inequality is meaningless (it can
    hold for matrices that are not CMs at all), so callers must classify
    instead.
    """
    v = as_matrix(v)
    report = check_global(v, tol)
    if not report.verdict:
        raise PreconditionViolated(
            "simon_criterion requires a bona fide CM; margins "
            f"{report.margins} (classify the matrix instead)")
    inv = two_mode_invariants(v, tol)
    lhs = inv.det_A * inv.det_B + (1.0 + inv.det_C) ** 2 - inv.I4
    rhs = inv.det_A + inv.det_B
    return lhs - rhs >= -tol.band(lhs, rhs)


def posdef_criterion(v, tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Three-way classification specialized to positive definite input.

    separable iff det V >= 1 and det A det B + (1 - |det C|)^2 - I4 >=
    det A + det B; entangled iff det V >= 1 and
    (1 + det C)^2 < det A + det B - det A det B + I4 <= (1 - det C)^2;
    otherwise unphysical. Raises NotPositiveDefinite outside its domain.
    """
    v = as_matrix(v)
    inv = two_mode_invariants(v, tol)
    min_eig = float(np.linalg.eigvalsh(v)[0])
    if min_eig <= tol.threshold(v):
        raise NotPositiveDefinite(
            f"posdef_criterion requires positive definite input "
            f"(min eigenvalue {min_eig:.3e})", min_eig=min_eig)

    # s_mid is the middle member of the entangled-branch chain; the bounds
    # (1 -+ det C)^2 translate to the Delta~ / Delta margins.
    s_mid = inv.det_A + inv.det_B - inv.det_A * inv.det_B + inv.I4
    margins = {
        "det_V_minus_1": inv.det_V - 1.0,
        "gamma_margin": inv.det_A * inv.det_B + (1.0 - abs(inv.det_C)) ** 2
                        - inv.I4 - inv.det_A - inv.det_B,
        "delta_margin": (1.0 - inv.det_C) ** 2 - s_mid,
        "delta_tilde_margin": (1.0 + inv.det_C) ** 2 - s_mid,
    }
    det_band = tol.band(inv.det_V)
    delta_band = tol.band(s_mid, (1.0 - inv.det_C) ** 2)
    gamma_band = tol.band(s_mid, (1.0 + inv.det_C) ** 2)
    physical = (margins["det_V_minus_1"] >= -det_band
                and margins["delta_margin"] >= -delta_band)
    if not physical:
        reason = ("det V < 1" if margins["det_V_minus_1"] < -det_band
                  else "Delta > 1 + det V")
        return Classification(Tag.UNPHYSICAL, reason + " (neither branch applies)",
                              margins)
    if margins["gamma_margin"] >= -gamma_band:
        return Classification(
            Tag.SEPARABLE, "det V >= 1 and Gamma <= 1 + det V", margins)
    return Classification(
        Tag.ENTANGLED, "det V >= 1 and Delta <= 1 + det V < Delta~", margins)
