#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-numpy fallback.

Times the hot primitive (orthonormal section fill) over point-count /
degree combinations that mirror the real workloads: quadrature grids for
trace certification, sampler probe grids, and high-N convergence sweeps.

Usage: python benchmarks/bench_backends.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from ellgas import AnnulusSpec
from ellgas._backend import available_backends, backend_module
from ellgas._normalization import norm_vector


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_basis(repeats):
    spec = AnnulusSpec(1.5, 2.5)
    rng = np.random.default_rng(0)
    cases = [
        ("sampler probe", 32_768, 4),
        ("quadrature grid", 12_288, 16),
        ("convergence sweep", 64, 400),
        ("dense high-N", 4_096, 400),
    ]
    print(f"{'workload':<18} {'points':>8} {'N':>5} " +
          " ".join(f"{b:>12}" for b in available_backends()) + "   speedup")
    for label, npts, nterms in cases:
        om = (rng.uniform(spec.R, spec.v, npts)
              * np.exp(1j * rng.uniform(0, 2 * np.pi, npts)))
        norms = norm_vector(2, nterms, spec.R, spec.v)
        times = {}
        for name in available_backends():
            mod = backend_module(name)
            times[name] = time_call(
                lambda m=mod: m.basis_matrix(2, om, nterms, spec.R, spec.v, norms),
                repeats)
        row = f"{label:<18} {npts:>8} {nterms:>5} "
        row += " ".join(f"{times[b] * 1e3:>10.2f}ms" for b in available_backends())
        if "cython" in times:
            row += f"   {times['numpy'] / times['cython']:.1f}x"
        print(row)


def bench_trace(repeats):
    """End-to-end trace certification; the backend binds at import, so each
    measurement runs in a subprocess with ELLGAS_BACKEND forced."""
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from ellgas import AnnulusSpec, ModelKind\n"
        "from ellgas.quadrature import kernel_trace\n"
        "spec = AnnulusSpec(1.5, 2.5)\n"
        f"best = min(__import__('timeit').repeat("
        f"lambda: [kernel_trace(m, 16, spec) for m in ModelKind], "
        f"number=1, repeat={repeats}))\n"
        "print('%.1f' % (best * 1e3))\n"
    )
    print("\nend-to-end: kernel trace certification, all four models at N = 16")
    for name in available_backends():
        env = dict(os.environ, ELLGAS_BACKEND=name)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        print(f"  {name:>7}: {out.stdout.strip()} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    print("available backends:", ", ".join(available_backends()))
    bench_basis(args.repeats)
    bench_trace(args.repeats)


if __name__ == "__main__":
    main()
