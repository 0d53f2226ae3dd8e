"""Finite-N determinantal kernels and correlation determinants.

Every kernel here is a rank-N projection,

    K_N(z1, z2) = sum_{n<N} phi_n(z1) * conj(phi_n(z2)),

with phi_n the weighted orthonormal sections sqrt(w) M_n / sqrt(h_n).  The
elliptic-annulus sections come from the selected backend; the disc-annulus
and Jacobi sections are assembled here directly.
"""

from __future__ import annotations

import math

import numpy as np

from . import _backend
from .errors import DomainError
from .geometry import AnnulusSpec, contains, joukowski_inverse
from .models import (
    JacobiSpec,
    ModelKind,
    RadialSymSpec,
    jacobi_monic_coeff_log,
    jacobi_norm_constant_log,
    jacobi_polynomial,
)


def elliptic_basis(model: ModelKind, N: int, omega, spec: AnnulusSpec) -> np.ndarray:
    """Sections phi_0..phi_{N-1} at an array of omega points; shape (len, N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return _backend.basis_matrix(model.value, omega, N, spec.R, spec.v)


def kernel_elliptic_omega(model: ModelKind, N: int, omega1, omega2,
                          spec: AnnulusSpec) -> np.ndarray:
    """K_N at paired omega arrays (no region check; internal fast path)."""
    b1 = elliptic_basis(model, N, np.atleast_1d(omega1), spec)
    b2 = elliptic_basis(model, N, np.atleast_1d(omega2), spec)
    return np.sum(b1 * b2.conj(), axis=1)


def kernel_elliptic(model: ModelKind, N: int, z1: complex, z2: complex,
                    spec: AnnulusSpec) -> complex:
    """K_N^(model)(z1, z2) for points of the elliptic annulus."""
    for z in (z1, z2):
        if not contains(spec, z):
            raise DomainError(f"point {z} outside the elliptic annulus")
    w1 = joukowski_inverse(z1)
    w2 = joukowski_inverse(z2)
    return complex(kernel_elliptic_omega(model, N, w1.omega, w2.omega, spec)[0])


# -- radially symmetric disc annulus ----------------------------------------

def radial_basis(rs: RadialSymSpec, N: int, z) -> np.ndarray:
    """Monomial sections |z|^(gamma/2) z^n / sqrt(h_n), rescaled by v/2."""
    if N < 1:
        raise ValueError("N must be >= 1")
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    ro = rs.r_outer
    n = np.arange(N, dtype=float)
    e = 2.0 * n + rs.gamma + 2.0
    # (v/2)^(2n) / h_n = e / (2 pi (v/2)^(gamma+2) (1 - (R/v)^e))
    ratio = rs.r_inner / ro
    inv_h_scaled = e / (2.0 * math.pi * ro ** (rs.gamma + 2.0) * (1.0 - ratio**e))
    zs = z / ro
    out = np.empty((z.size, N), dtype=np.complex128)
    out[:, 0] = 1.0
    for k in range(1, N):
        np.multiply(out[:, k - 1], zs, out=out[:, k])
    out *= np.abs(z[:, None]) ** (rs.gamma / 2.0) * np.sqrt(inv_h_scaled)
    return out


def kernel_radial_sym(rs: RadialSymSpec, N: int, z1: complex, z2: complex) -> complex:
    """Monomial-basis kernel on the disc annulus R/2 <= |z| <= v/2."""
    for z in (z1, z2):
        if not (rs.r_inner <= abs(z) <= rs.r_outer):
            raise DomainError(f"point {z} outside the disc annulus")
    b1 = radial_basis(rs, N, z1)
    b2 = radial_basis(rs, N, z2)
    return complex(np.sum(b1[0] * b2[0].conj()))


# -- Jacobi unitary ensemble -------------------------------------------------

def jacobi_basis(spec: JacobiSpec, N: int, x) -> np.ndarray:
    """Sections sqrt(w(x)) M_n(x) / sqrt(h_n) on (-1, 1); shape (len, N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    sqw = (1.0 - x) ** (spec.a / 2.0) * (1.0 + x) ** (spec.b / 2.0)
    out = np.empty((x.size, N))
    for n in range(N):
        scale = math.exp(jacobi_monic_coeff_log(spec, n)
                         - 0.5 * jacobi_norm_constant_log(spec, n))
        out[:, n] = scale * jacobi_polynomial(spec, n, x)
    return out * sqw[:, None]


def kernel_jacobi(spec: JacobiSpec, N: int, x1: float, x2: float) -> float:
    """Finite-N Jacobi-ensemble kernel on the open interval (-1, 1)."""
    for x in (x1, x2):
        if not -1.0 < x < 1.0:
            raise DomainError(f"point {x} outside (-1, 1)")
    b1 = jacobi_basis(spec, N, x1)
    b2 = jacobi_basis(spec, N, x2)
    return float(np.dot(b1[0], b2[0]))


# -- correlation functions ---------------------------------------------------

def correlation_det(kernel, points) -> float:
    """k-point correlation det[K(z_j, z_l)] for a kernel evaluator K(z1, z2).

    The determinant of a Hermitian kernel matrix is real; a relative
    imaginary residue above 1e-10 indicates a broken kernel and raises.
    """
    pts = list(points)
    k = len(pts)
    if k < 1:
        raise ValueError("need at least one point")
    mat = np.empty((k, k), dtype=np.complex128)
    for i, zi in enumerate(pts):
        for j, zj in enumerate(pts):
            mat[i, j] = kernel(zi, zj)
    det = complex(np.linalg.det(mat))
    scale = max(abs(det), float(np.max(np.abs(mat))) ** k, 1e-300)
    if abs(det.imag) > 1e-10 * scale:
        raise ValueError(f"determinant has non-negligible imaginary part: {det}")
    return det.real
