"""Command-line harness: certification runs, figure data, convergence studies,
kernel evaluation, and sampling, with CSV/JSON output.

Exit codes: 0 success, 1 quantitative-threshold failure, 2 argument or
invariant error, 3 numerical-tolerance failure (including scaled points
leaving the annulus).
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .asymptotic import (
    INTERVAL_EDGE_PARITY,
    EdgeScaling,
    IntervalScaling,
    bessel_kernel,
    edge_kernel_universal,
    edge_scaled_configuration,
    interval_bulk_kernel,
    interval_edge_kernel,
    interval_scaled_configuration,
    kernel_r,
    lambda_corr,
    sigma_density,
)
from .errors import DomainError, ToleranceNotMet
from .geometry import AnnulusSpec
from .kernels import kernel_elliptic, kernel_elliptic_omega
from .models import ModelKind, norm_constant
from .quadrature import QuadratureSpec, kernel_trace, orthogonality_matrix
from .reporting import write_csv, write_json
from .sampler import SampleConfig, sample_batch

_MODEL_NAMES = {m.name: m for m in ModelKind}


def _model(name: str) -> ModelKind:
    try:
        return _MODEL_NAMES[name.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"model must be one of {list(_MODEL_NAMES)}")


def _complex_pair(text: str) -> complex:
    try:
        x, y = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'x,y'")
    return complex(x, y)


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _common_flags(p: argparse.ArgumentParser, seed: bool = False) -> None:
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--tol", type=float, default=1e-8, help="quantitative threshold")
    p.add_argument("--threads", type=int, default=1, help="worker threads for row sweeps")
    if seed:
        p.add_argument("--seed", type=int, default=0)


def _meta(args, command: str, skip=("out", "threads", "func")) -> list[str]:
    def show(v):
        if isinstance(v, ModelKind):
            return v.name
        if isinstance(v, list):
            return "[" + ",".join(show(x) for x in v) + "]"
        return str(v)

    params = " ".join(f"{k}={show(v)}" for k, v in sorted(vars(args).items())
                      if k not in skip and v is not None)
    return [f"command: {command}", f"version: {__version__}", f"parameters: {params}"]


# -- subcommands ---------------------------------------------------------------

def cmd_verify_orthogonality(args) -> int:
    spec = AnnulusSpec(args.R, args.v)
    q = QuadratureSpec(target_tol=args.quad_tol)
    report = orthogonality_matrix(args.model, args.nmax, spec, q)
    h = report.reference
    diag = np.diag(report.gram)
    payload = {
        "command": "verify-orthogonality",
        "version": __version__,
        "model": args.model.name,
        "nmax": args.nmax,
        "R": args.R,
        "v": args.v,
        "threshold": args.tol,
        "max_offdiag": report.max_offdiag,
        "max_diag_relerr": report.max_diag_relerr,
        "n": list(range(args.nmax + 1)),
        "h_closed_form": [float(x) for x in h],
        "h_quadrature": [float(x) for x in diag],
        "diag_relerr": [float(abs(d - r) / r) for d, r in zip(diag, h)],
    }
    write_json(args.out, payload)
    ok = (report.max_offdiag <= args.tol * float(h.max())
          and report.max_diag_relerr <= args.tol)
    return 0 if ok else 1


def cmd_figure1(args) -> int:
    for v in args.v:
        if not v > 1.0:
            raise ValueError(f"every v must exceed 1, got {v}")
    psi = np.linspace(0.0, 2.0 * math.pi, args.grid)
    cols = _pmap(lambda v: [sigma_density(v, p) for p in psi], args.v, args.threads)
    header = ["psi"] + [f"sigma_v={v:g}" for v in args.v]
    rows = [[float(p)] + [c[i] for c in cols] for i, p in enumerate(psi)]
    # trailing row: trapezoid normalization per curve (exact for this periodic grid)
    norms = [float(np.trapezoid(c, psi)) for c in cols]
    rows.append(["normalization"] + norms)
    write_csv(args.out, _meta(args, "figure1"), header, rows)
    return 0


def cmd_figure2(args) -> int:
    if not args.tau > 0.0:
        raise ValueError("tau must be positive")
    phi = np.linspace(-args.phi_max, args.phi_max, args.grid)
    if not np.any(phi == 0.0):
        raise ValueError("grid must include phi = 0 (use an odd point count)")
    lam = _pmap(lambda p: lambda_corr(args.tau, float(p)), phi, args.threads)
    rows = [[float(p), float(l)] for p, l in zip(phi, lam)]
    write_csv(args.out, _meta(args, "figure2"), ["varphi", "lambda"], rows)
    return 0


def _convergence_row(args, N: int):
    if args.regime == "edge":
        e = EdgeScaling(v=args.v, psi=args.psi, T=args.T, t1=args.t1, t2=args.t2,
                        phi1=args.phi1, phi2=args.phi2, N=N)
        om1, om2, spec = edge_scaled_configuration(e, N)
        limit = edge_kernel_universal(e)
    else:
        psi = {"0": 0.0, "pi": math.pi, "pi/2": 0.5 * math.pi}[args.psi_label]
        i = IntervalScaling(u=args.u, T=args.T, psi=psi,
                            s1=complex(args.t1, args.phi1), s2=complex(args.t2, args.phi2))
        om1, om2, spec = interval_scaled_configuration(i, N)
        if args.regime == "bulk":
            limit = interval_bulk_kernel(i, N)
        else:
            limit = interval_edge_kernel(INTERVAL_EDGE_PARITY[(args.model, psi)], i, N)
    finite = complex(kernel_elliptic_omega(args.model, N, om1, om2, spec)[0])
    rel = abs(finite - limit) / abs(limit)
    return [N, finite.real, finite.imag, limit.real, limit.imag, rel]


def cmd_convergence(args) -> int:
    if sorted(args.N) != args.N:
        raise ValueError("the N list must be ascending")
    if args.regime == "bulk":
        args.psi_label = "pi/2"
    elif args.regime == "interval-edge":
        if args.psi_label not in ("0", "pi"):
            raise ValueError("interval-edge requires --psi 0 or pi")
    rows = _pmap(lambda N: _convergence_row(args, N), args.N, args.threads)
    header = ["N", "finite_value_re", "finite_value_im",
              "limit_value_re", "limit_value_im", "rel_error"]
    write_csv(args.out, _meta(args, f"convergence-{args.regime}"), header, rows)
    errs = [row[-1] for row in rows]
    return 0 if all(a > b for a, b in zip(errs, errs[1:])) else 1


def cmd_kernel_eval(args) -> int:
    spec = AnnulusSpec(args.R, args.v)
    val = kernel_elliptic(args.model, args.N, args.z1, args.z2, spec)
    write_json(args.out, {
        "command": "kernel-eval",
        "version": __version__,
        "model": args.model.name,
        "N": args.N,
        "R": args.R,
        "v": args.v,
        "z1": [args.z1.real, args.z1.imag],
        "z2": [args.z2.real, args.z2.imag],
        "kernel_re": val.real,
        "kernel_im": val.imag,
    })
    return 0


def cmd_sample(args) -> int:
    spec = AnnulusSpec(args.R, args.v)
    cfg = SampleConfig(model=args.model, N=args.N, spec=spec, seed=args.seed,
                       envelope_grid=args.envelope_grid,
                       envelope_safety=args.envelope_safety)
    pts = sample_batch(cfg, args.count)
    rows = [[s, j, pts[s, j].real, pts[s, j].imag]
            for s in range(args.count) for j in range(args.N)]
    write_csv(args.out, _meta(args, "sample"), ["sample", "index", "x", "y"], rows)
    return 0


def cmd_bessel_check(args) -> int:
    parity = "plus" if args.a == -0.5 else "minus"
    phis = np.linspace(args.phi_min, args.phi_max, args.grid)
    pairs = [(float(p1), float(p2)) for p1 in phis for p2 in phis]

    def row(pair):
        p1, p2 = pair
        bk = bessel_kernel(args.a, p1, p2)
        cf = kernel_r(parity, p1, p2)
        return [p1, p2, bk, cf, abs(bk - cf) / abs(cf)]

    rows = _pmap(row, pairs, args.threads)
    write_csv(args.out, _meta(args, "bessel-check"),
              ["phi1", "phi2", "bessel", "closed_form", "rel_error"], rows)
    worst = max(row[-1] for row in rows)
    return 0 if worst <= args.tol else 1


def cmd_trace_check(args) -> int:
    spec = AnnulusSpec(args.R, args.v)
    q = QuadratureSpec(target_tol=args.quad_tol)
    models = args.model if args.model else list(ModelKind)

    def row(mn):
        model, N = mn
        tr = kernel_trace(model, N, spec, q)
        return [model.name, N, tr, abs(tr - N) / N]

    rows = _pmap(row, [(m, N) for m in models for N in args.N], args.threads)
    write_csv(args.out, _meta(args, "trace-check"),
              ["model", "N", "trace", "rel_error"], rows)
    worst = max(row[-1] for row in rows)
    return 0 if worst <= args.tol else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ellgas",
        description="Determinantal log-gas kernels on an elliptic annulus")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-orthogonality",
                       help="certify the orthogonality relations by quadrature")
    p.add_argument("--model", type=_model, required=True)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--R", type=float, default=1.5)
    p.add_argument("--v", type=float, default=2.5)
    p.add_argument("--quad-tol", type=float, default=1e-10)
    _common_flags(p)
    p.set_defaults(func=cmd_verify_orthogonality)

    p = sub.add_parser("figure1", help="normalized edge density sigma(psi)")
    p.add_argument("--v", type=float, action="append", default=None)
    p.add_argument("--grid", type=int, default=721)
    _common_flags(p)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("figure2", help="normalized two-point correlation lambda(phi)")
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--phi-max", type=float, default=20.0)
    p.add_argument("--grid", type=int, default=801)
    _common_flags(p)
    p.set_defaults(func=cmd_figure2)

    p = sub.add_parser("convergence", help="finite-N kernels against their limits")
    p.add_argument("--regime", choices=("edge", "bulk", "interval-edge"), required=True)
    p.add_argument("--model", type=_model, required=True)
    p.add_argument("--N", type=int, action="append", required=True)
    p.add_argument("--v", type=float, default=2.0, help="edge regime outer radius")
    p.add_argument("--psi", dest="psi", type=float, default=0.7, help="edge regime angle")
    p.add_argument("--interval-psi", dest="psi_label", choices=("0", "pi"), default="0",
                   help="interval-edge endpoint")
    p.add_argument("--u", type=float, default=2.0)
    p.add_argument("--T", type=float, default=0.5)
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--t2", type=float, default=1.2)
    p.add_argument("--phi1", type=float, default=0.3)
    p.add_argument("--phi2", type=float, default=-0.2)
    _common_flags(p)
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("kernel-eval", help="one finite-N kernel value, JSON out")
    p.add_argument("--model", type=_model, required=True)
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--R", type=float, default=1.5)
    p.add_argument("--v", type=float, default=2.5)
    p.add_argument("--z1", type=_complex_pair, required=True, metavar="X,Y")
    p.add_argument("--z2", type=_complex_pair, required=True, metavar="X,Y")
    _common_flags(p)
    p.set_defaults(func=cmd_kernel_eval)

    p = sub.add_parser("sample", help="exact draws of the N-point process, CSV out")
    p.add_argument("--model", type=_model, required=True)
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--R", type=float, default=1.5)
    p.add_argument("--v", type=float, default=2.5)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--envelope-grid", type=int, default=128)
    p.add_argument("--envelope-safety", type=float, default=1.5)
    _common_flags(p, seed=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("bessel-check",
                       help="hard-edge kernel against its closed forms at a = -1/2, 1/2")
    p.add_argument("--a", type=float, choices=(-0.5, 0.5), required=True)
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--phi-min", type=float, default=0.1)
    p.add_argument("--phi-max", type=float, default=20.0)
    _common_flags(p)
    p.set_defaults(func=cmd_bessel_check)

    p = sub.add_parser("trace-check", help="kernel trace = N over a model/N grid")
    p.add_argument("--model", type=_model, action="append", default=None)
    p.add_argument("--N", type=int, action="append", default=None)
    p.add_argument("--R", type=float, default=1.5)
    p.add_argument("--v", type=float, default=2.5)
    p.add_argument("--quad-tol", type=float, default=1e-10)
    _common_flags(p)
    p.set_defaults(func=cmd_trace_check)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    if getattr(args, "cmd", None) == "figure1" and args.v is None:
        args.v = [1.1, 1.2, 1.5, 2.0]
    if getattr(args, "cmd", None) == "trace-check" and args.N is None:
        args.N = [1, 4, 16]
    try:
        return args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ToleranceNotMet, DomainError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
