r"""Command-line front end.

Subcommands:

- classify       tag a matrix Unphysical / SeparableGaussianCM /
                 EntangledGaussianCM with all margins and invariants
- invariants     print the symplectic invariants and spectra
- standard-form  reduce to standard form, printing the parameters and the
                 local symplectic that achieves them
- williamson     full Williamson decomposition with residuals
- gen            emit a named family member as a matrix document
- sweep          tabulate margins along a one-parameter family (CSV)

Matrix documents are JSON ({"matrix": [[...]], "label": ..., "tolerance":
{"rel": ..., "abs": ...}}, or a bare 2D JSON array) or whitespace-delimited
numeric text. Matrices must be square, even-dimensional and symmetric within
tolerance.

Exit codes: 0 success (a verdict, even Unphysical, is payload — never an
error); 2 parse or parameter error; 3 dimension/symmetry error; 4 failed
positivity precondition.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import (
    BlockNotPositiveDefinite,
    DimensionError,
    NonFiniteError,
    NotPositiveDefinite,
    PreconditionViolated,
    SymmetryError,
)
from .families import FAMILY_NAMES, FamilySpec, generate
from .invariants import (
    ppt_spectrum_2mode,
    symplectic_spectrum_2mode,
    two_mode_invariants,
)
from .physicality import check_global, heisenberg_oracle
from .separability import classify_global
from .standard_form import reduce_to_standard_form
from .symplectic import DEFAULT_TOL, Tolerance, as_matrix, congruence, omega, require_symmetric
from .williamson import williamson_decompose

__all__ = ["main", "build_parser", "parse_document", "MatrixDocument"]

_SWEEP_PARAMS = {"simon_vx": "x", "two_mode_squeezed": "r", "thermal": "nu"}
_SWEEP_HEADER = ("x", "det_V", "delta", "delta_tilde", "nu_minus",
                 "nu_tilde_minus", "heisenberg_margin", "simon_margin", "tag")


class _DocumentError(Exception):
    """Unparseable matrix document (exit code 2)."""


@dataclass(frozen=True)
class MatrixDocument:
    """A validated input matrix plus optional metadata."""

    matrix: np.ndarray
    label: str | None = None
    tol_rel: float | None = None
    tol_abs: float | None = None


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _payload(text: str):
    """Raw (nested-list matrix, label, tol overrides) from document text."""
    stripped = text.strip()
    if not stripped:
        raise _DocumentError("empty input document")
    if stripped[0] in "[{":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise _DocumentError(f"invalid JSON document: {exc}") from exc
        if isinstance(data, dict):
            if "matrix" not in data:
                raise _DocumentError('JSON document lacks a "matrix" key')
            tol = data.get("tolerance") or {}
            if not isinstance(tol, dict):
                raise _DocumentError('"tolerance" must be an object')
            return data["matrix"], data.get("label"), tol.get("rel"), tol.get("abs")
        return data, None, None, None
    rows = []
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([float(token) for token in line.split()])
        except ValueError as exc:
            raise _DocumentError(f"non-numeric entry in row {line!r}") from exc
    if not rows:
        raise _DocumentError("no numeric rows found")
    if len({len(r) for r in rows}) != 1:
        raise _DocumentError("rows have unequal lengths")
    return rows, None, None, None


def _validated(raw, label, rel, abs_, tol: Tolerance) -> MatrixDocument:
    try:
        matrix = as_matrix(raw)
    except (DimensionError, NonFiniteError):
        raise
    except (TypeError, ValueError) as exc:
        raise _DocumentError(f"matrix entries are not numeric: {exc}") from exc
    if matrix.shape[0] % 2:
        raise DimensionError(
            f"matrix dimension must be even, got {matrix.shape[0]}")
    require_symmetric(matrix, tol, what="input matrix")
    return MatrixDocument(matrix=matrix, label=label, tol_rel=rel, tol_abs=abs_)


def _resolve_tol(rel, abs_) -> Tolerance:
    return Tolerance(rel=DEFAULT_TOL.rel if rel is None else float(rel),
                     abs=DEFAULT_TOL.abs if abs_ is None else float(abs_))


def parse_document(text: str, tol: Tolerance | None = None) -> MatrixDocument:
    """Parse and validate a matrix document.

    Raises _DocumentError for malformed documents and
    DimensionError/SymmetryError/NonFiniteError for matrices that parse but
    are not square, even-dimensional, finite and symmetric. When the
    document carries tolerance overrides they are applied (unless tol is
    given, which wins).
    """
    raw, label, rel, abs_ = _payload(text)
    if tol is None:
        tol = _resolve_tol(rel, abs_)
    return _validated(raw, label, rel, abs_, tol)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _DocumentError(f"cannot read {path}: {exc}") from exc


def _load(args) -> tuple[MatrixDocument, Tolerance]:
    """Read, parse and validate the input; resolve the effective tolerance.

    Precedence: command-line flags, then document overrides, then defaults.
    """
    raw, label, rel, abs_ = _payload(_read_text(args.input))
    tol = _resolve_tol(args.tol_rel if args.tol_rel is not None else rel,
                       args.tol_abs if args.tol_abs is not None else abs_)
    return _validated(raw, label, rel, abs_, tol), tol


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise RuntimeError(f"cannot write {path}: {exc}") from exc


def _spectra_fields(v: np.ndarray, tol: Tolerance) -> dict:
    """Both symplectic spectra, or None entries when V is not positive definite."""
    try:
        spec = symplectic_spectrum_2mode(v, tol)
        ppt = ppt_spectrum_2mode(v, tol)
    except NotPositiveDefinite:
        return {"nu_minus": None, "nu_plus": None,
                "nu_tilde_minus": None, "nu_tilde_plus": None}
    return {"nu_minus": spec.nu_minus, "nu_plus": spec.nu_plus,
            "nu_tilde_minus": ppt.nu_minus, "nu_tilde_plus": ppt.nu_plus}


def _invariant_fields(inv) -> dict:
    return {"det_A": inv.det_A, "det_B": inv.det_B, "det_C": inv.det_C,
            "det_V": inv.det_V, "I4": inv.I4, "delta": inv.delta,
            "delta_tilde": inv.delta_tilde, "gamma_sep": inv.gamma_sep}


def _print_mapping(title: str, mapping: dict) -> None:
    print(f"{title}:")
    for key, value in mapping.items():
        if isinstance(value, float):
            print(f"  {key}: {_fmt(value)}")
        else:
            print(f"  {key}: {value}")


def _matrix_lines(name: str, m: np.ndarray) -> str:
    rows = ["  " + "  ".join(_fmt(x) for x in row) for row in m]
    return f"{name}:\n" + "\n".join(rows)


def cmd_classify(args) -> int:
    doc, tol = _load(args)
    v = doc.matrix
    result = classify_global(v, tol)
    inv = two_mode_invariants(v, tol)
    report = check_global(v, tol)
    record = {
        "label": doc.label,
        "tag": result.tag.value,
        "reason": result.reason,
        "margins": dict(result.margins),
        "invariants": _invariant_fields(inv),
        "report": {"verdict": report.verdict, "route": report.route,
                   "margins": dict(report.margins),
                   "nu_minus": report.nu_minus,
                   "borderline": report.borderline},
        **_spectra_fields(v, tol),
        "matrix": v.tolist(),
    }
    if args.format == "machine":
        print(json.dumps(record))
        return 0
    if doc.label:
        print(f"label: {doc.label}")
    print(f"tag: {record['tag']}")
    print(f"reason: {record['reason']}")
    for key in ("nu_minus", "nu_plus", "nu_tilde_minus", "nu_tilde_plus"):
        value = record[key]
        print(f"{key}: {_fmt(value) if value is not None else 'undefined (V not > 0)'}")
    _print_mapping("margins", record["margins"])
    _print_mapping("invariants", record["invariants"])
    print(f"borderline: {report.borderline}")
    return 0


def cmd_invariants(args) -> int:
    doc, tol = _load(args)
    v = doc.matrix
    inv = two_mode_invariants(v, tol)
    physical, min_eig = heisenberg_oracle(v, tol)
    record = {
        "label": doc.label,
        "invariants": _invariant_fields(inv),
        **_spectra_fields(v, tol),
        "heisenberg_margin": min_eig,
        "heisenberg_ok": physical,
        "matrix": v.tolist(),
    }
    if args.format == "machine":
        print(json.dumps(record))
        return 0
    if doc.label:
        print(f"label: {doc.label}")
    _print_mapping("invariants", record["invariants"])
    for key in ("nu_minus", "nu_plus", "nu_tilde_minus", "nu_tilde_plus"):
        value = record[key]
        print(f"{key}: {_fmt(value) if value is not None else 'undefined (V not > 0)'}")
    print(f"heisenberg_margin: {_fmt(min_eig)} (satisfied: {physical})")
    return 0


def cmd_standard_form(args) -> int:
    doc, tol = _load(args)
    v = doc.matrix
    params = reduce_to_standard_form(v, tol)
    residual = float(np.max(np.abs(congruence(v, params.s_local)
                                   - params.matrix())))
    record = {
        "label": doc.label,
        "a": params.a, "b": params.b,
        "c_plus": params.c_plus, "c_minus": params.c_minus,
        "s_local": params.s_local.tolist(),
        "residual": residual,
        "matrix": v.tolist(),
    }
    if args.format == "machine":
        print(json.dumps(record))
        return 0
    if doc.label:
        print(f"label: {doc.label}")
    for key in ("a", "b", "c_plus", "c_minus"):
        print(f"{key}: {_fmt(record[key])}")
    print(_matrix_lines("s_local", params.s_local))
    print(f"residual: {_fmt(residual)}")
    return 0


def cmd_williamson(args) -> int:
    doc, tol = _load(args)
    v = doc.matrix
    dec = williamson_decompose(v, tol)
    n_modes = v.shape[0] // 2
    resid_sympl = float(np.max(np.abs(
        dec.transform @ omega(n_modes) @ dec.transform.T - omega(n_modes))))
    resid_form = float(np.max(np.abs(
        dec.transform @ v @ dec.transform.T - dec.normal_form)))
    record = {
        "label": doc.label,
        "spectrum": dec.spectrum.tolist(),
        "normal_form": dec.normal_form.tolist(),
        "transform": dec.transform.tolist(),
        "rotation": dec.rotation.tolist(),
        "degenerate": dec.degenerate,
        "residual_symplectic": resid_sympl,
        "residual_normal_form": resid_form,
        "matrix": v.tolist(),
    }
    if args.format == "machine":
        print(json.dumps(record))
        return 0
    if doc.label:
        print(f"label: {doc.label}")
    print("spectrum: " + "  ".join(_fmt(nu) for nu in dec.spectrum))
    print(_matrix_lines("normal_form", dec.normal_form))
    print(_matrix_lines("transform", dec.transform))
    print(f"residual_symplectic: {_fmt(resid_sympl)}")
    print(f"residual_normal_form: {_fmt(resid_form)}")
    print(f"degenerate: {dec.degenerate}")
    return 0


def _parse_params(pairs) -> dict[str, float]:
    params: dict[str, float] = {}
    for item in pairs:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ValueError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            params[name] = float(value)
        except ValueError:
            raise ValueError(f"--param {name}: {value!r} is not a number") from None
    return params


def cmd_gen(args) -> int:
    params = _parse_params(args.param)
    if args.seed is not None:
        params["seed"] = args.seed
    spec = FamilySpec(args.family, params)
    matrix = generate(spec)
    shown = ", ".join(f"{k}={params[k]:g}" for k in sorted(params))
    label = args.label or (f"{args.family}({shown})" if shown else args.family)
    document = {"label": label, "matrix": matrix.tolist()}
    _write_text(args.out, json.dumps(document) + "\n")
    return 0


def _sweep_values(start: float, stop: float, step: float) -> np.ndarray:
    if step <= 0:
        raise ValueError(f"--step must be > 0, got {step}")
    if stop < start:
        raise ValueError(f"--to {stop} is below --from {start}")
    count = int(math.floor((stop - start) / step + 0.5)) + 1
    values = start + step * np.arange(count)
    return values[values <= stop + step * 1e-9]


def cmd_sweep(args) -> int:
    if args.family not in _SWEEP_PARAMS:
        raise ValueError(
            f"family {args.family!r} is not sweepable; choose from "
            f"{sorted(_SWEEP_PARAMS)}")
    param = _SWEEP_PARAMS[args.family]
    tol = Tolerance(
        rel=DEFAULT_TOL.rel if args.tol_rel is None else args.tol_rel,
        abs=DEFAULT_TOL.abs if args.tol_abs is None else args.tol_abs)
    rows = []
    for value in _sweep_values(args.start, args.stop, args.step):
        v = generate(FamilySpec(args.family, {param: float(value)}))
        inv = two_mode_invariants(v, tol)
        spectra = _spectra_fields(v, tol)
        _, heis = heisenberg_oracle(v, tol)
        simon_margin = (inv.det_A * inv.det_B + (1.0 - inv.det_C) ** 2
                        - inv.I4 - inv.det_A - inv.det_B)
        tag = classify_global(v, tol).tag.value
        rows.append((float(value), inv.det_V, inv.delta, inv.delta_tilde,
                     spectra["nu_minus"], spectra["nu_tilde_minus"],
                     heis, simon_margin, tag))

    def cell(x) -> str:
        if x is None:
            return "nan"
        return x if isinstance(x, str) else _fmt(x)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_SWEEP_HEADER)
    for row in rows:
        writer.writerow([cell(x) for x in row])
    _write_text(args.out, buffer.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomode",
        description="Decide whether 4x4 symmetric matrices are bona fide "
                    "two-mode quantum correlation matrices, classify them as "
                    "separable or entangled Gaussian CMs, and construct "
                    "symplectic normal forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    matrix_io = argparse.ArgumentParser(add_help=False)
    matrix_io.add_argument("--input", default="-", metavar="PATH",
                           help="matrix document (JSON or whitespace grid); "
                                "'-' reads stdin (default)")
    matrix_io.add_argument("--format", choices=("text", "machine"),
                           default="text",
                           help="report style: human text or one-line JSON")
    matrix_io.add_argument("--tol-rel", type=float, default=None, metavar="X",
                           help="relative tolerance override")
    matrix_io.add_argument("--tol-abs", type=float, default=None, metavar="X",
                           help="absolute tolerance override")

    commands = (
        ("classify", cmd_classify,
         "tag the matrix Unphysical / SeparableGaussianCM / EntangledGaussianCM"),
        ("invariants", cmd_invariants,
         "print symplectic invariants, spectra and the uncertainty margin"),
        ("standard-form", cmd_standard_form,
         "reduce to standard form via a local symplectic"),
        ("williamson", cmd_williamson,
         "Williamson normal form W, symplectic S and residuals"),
    )
    for name, func, help_text in commands:
        sp = sub.add_parser(name, parents=[matrix_io], help=help_text)
        sp.set_defaults(func=func)

    gen = sub.add_parser(
        "gen", help="generate a named family member as a matrix document",
        epilog="Families: vacuum; thermal (nu, or nu1/nu2, each >= 1); "
               "two_mode_squeezed (r >= 0); simon_vx (x > 0); "
               "random_physical (seed; a random thermal form conjugated by "
               "alternating random local rotation+squeeze layers and a fixed "
               "balanced two-mode mixer [[cI, cI], [-cI, cI]], c = 1/sqrt 2); "
               "random_symmetric (seed; entries uniform in [-2, 2]). "
               "Same seed, same matrix, bit for bit.")
    gen.add_argument("--family", required=True, choices=FAMILY_NAMES)
    gen.add_argument("--param", action="append", default=[],
                     metavar="NAME=VALUE", help="family parameter (repeatable)")
    gen.add_argument("--seed", type=int, default=None,
                     help="seed for the random families")
    gen.add_argument("--label", default=None, help="document label override")
    gen.add_argument("--out", default="-", metavar="PATH",
                     help="output path ('-' = stdout)")
    gen.set_defaults(func=cmd_gen)

    sweep = sub.add_parser(
        "sweep", help="tabulate margins along a one-parameter family (CSV)",
        epilog="Columns: x (the swept parameter), det_V, delta, delta_tilde, "
               "nu_minus, nu_tilde_minus, heisenberg_margin (min eigenvalue "
               "of V + i Omega), simon_margin (det-form uncertainty "
               "inequality, left minus right), tag. Reals carry 17 "
               "significant digits.")
    sweep.add_argument("--family", required=True,
                       choices=tuple(sorted(_SWEEP_PARAMS)))
    sweep.add_argument("--from", dest="start", type=float, required=True)
    sweep.add_argument("--to", dest="stop", type=float, required=True)
    sweep.add_argument("--step", type=float, required=True)
    sweep.add_argument("--out", default="-", metavar="PATH",
                       help="output CSV path ('-' = stdout)")
    sweep.add_argument("--tol-rel", type=float, default=None, metavar="X")
    sweep.add_argument("--tol-abs", type=float, default=None, metavar="X")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotPositiveDefinite, PreconditionViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DimensionError, SymmetryError, NonFiniteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
