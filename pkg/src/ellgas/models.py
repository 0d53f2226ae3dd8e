"""The four annulus weight models, their normalization constants, and the
two comparison ensembles (radially symmetric disc annulus, Jacobi on [-1,1]).

Model/weight pairing on the elliptic annulus:

    I   <->  1/|1 - z^2|   <->  Chebyshev first kind
    II  <->  1             <->  second kind
    III <->  1/|1 - z|     <->  third kind
    IV  <->  1/|1 + z|     <->  fourth kind

The squared norms h_n of the monic polynomials have the closed forms

    h_n^(1) = pi/(4^n n) * B(2n)          (n > 0),   h_0^(1) = 2 pi log(v/R)
    h_n^(2) = pi/(4^(n+1) (n+1)) * B(2n+2)
    h_n^(3) = h_n^(4) = pi/(4^n (2n+1)) * B(2n+1)

with B(m) = v^m - v^-m - R^m + R^-m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._normalization import bracket
from .chebyshev import ChebyshevKind
from .geometry import AnnulusSpec, contains


class ModelKind(Enum):
    I = 1
    II = 2
    III = 3
    IV = 4

    @property
    def chebyshev_kind(self) -> ChebyshevKind:
        return ChebyshevKind(self.value)


@dataclass(frozen=True)
class RadialSymSpec:
    """Radial weight |z|^gamma on the disc annulus R/2 <= |z| <= v/2."""

    gamma: float
    R: float
    v: float

    def __post_init__(self):
        if self.gamma <= -2.0:
            raise ValueError("gamma must exceed -2 for a finite zeroth norm")
        if not (1.0 < self.R < self.v):
            raise ValueError(f"require 1 < R < v, got R={self.R}, v={self.v}")

    @property
    def r_inner(self) -> float:
        return 0.5 * self.R

    @property
    def r_outer(self) -> float:
        return 0.5 * self.v


@dataclass(frozen=True)
class JacobiSpec:
    """Weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1."""

    a: float
    b: float

    def __post_init__(self):
        if self.a <= -1.0 or self.b <= -1.0:
            raise ValueError("Jacobi exponents must exceed -1")


def weight_eval(model: ModelKind, z: complex, spec: AnnulusSpec) -> float:
    """Annulus weight at z; zero outside the region."""
    z = complex(z)
    if not contains(spec, z):
        return 0.0
    if model is ModelKind.I:
        return 1.0 / abs(1.0 - z * z)
    if model is ModelKind.II:
        return 1.0
    if model is ModelKind.III:
        return 1.0 / abs(1.0 - z)
    return 1.0 / abs(1.0 + z)


def weight_rt(model: ModelKind, r, theta):
    """Vectorized annulus weight in (r, theta), via the half-angle factorizations

    |1 - z| = (r + 1/r - 2 cos t)/2,  |1 + z| = (r + 1/r + 2 cos t)/2,
    |1 - z^2| = (r^2 + 1/r^2 - 2 cos 2t)/4,

    which stay accurate near the inner boundary.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if model is ModelKind.I:
        return 4.0 / (r**2 + r**-2 - 2.0 * np.cos(2.0 * theta))
    if model is ModelKind.II:
        return np.ones(np.broadcast(r, theta).shape)
    if model is ModelKind.III:
        return 2.0 / (r + 1.0 / r - 2.0 * np.cos(theta))
    return 2.0 / (r + 1.0 / r + 2.0 * np.cos(theta))


def norm_constant(model: ModelKind, n: int, spec: AnnulusSpec) -> float:
    """Closed-form squared norm h_n of the degree-n monic polynomial."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    R, v = spec.R, spec.v
    if model is ModelKind.I:
        if n == 0:
            return 2.0 * math.pi * math.log(v / R)
        return math.pi / (4.0**n * n) * bracket(2 * n, R, v)
    if model is ModelKind.II:
        return math.pi / (4.0 ** (n + 1) * (n + 1)) * bracket(2 * n + 2, R, v)
    return math.pi / (4.0**n * (2 * n + 1)) * bracket(2 * n + 1, R, v)


# -- radially symmetric disc annulus ----------------------------------------

def radial_norm_constant(rs: RadialSymSpec, n: int) -> float:
    """h_n = 2 pi / (2n + gamma + 2) * ((v/2)^(2n+gamma+2) - (R/2)^(2n+gamma+2))."""
    e = 2 * n + rs.gamma + 2.0
    return 2.0 * math.pi / e * (rs.r_outer**e - rs.r_inner**e)


# -- Jacobi unitary ensemble -------------------------------------------------

def jacobi_polynomial(spec: JacobiSpec, n: int, x) -> float | np.ndarray:
    """P_n^(a,b)(x) by the standard three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    a, b = spec.a, spec.b
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        a1 = 2.0 * k * (k + a + b) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p if p.ndim else float(p)


def jacobi_monic_coeff_log(spec: JacobiSpec, n: int) -> float:
    """log of the positive coefficient c_n with M_n = c_n P_n^(a,b).

    c_n = 2^n n! Gamma(a+b+n+1) / Gamma(a+b+2n+1); the n = 0 value is 1
    exactly (the Gamma ratio degenerates at a+b = -1).
    """
    if n == 0:
        return 0.0
    s = spec.a + spec.b
    return (n * math.log(2.0) + math.lgamma(n + 1.0)
            + math.lgamma(s + n + 1.0) - math.lgamma(s + 2 * n + 1.0))


def jacobi_norm_constant_log(spec: JacobiSpec, n: int) -> float:
    """log h_n for the monic Jacobi polynomials.

    h_n = 2^(2n+a+b+1) n! Gamma(a+n+1) Gamma(b+n+1) Gamma(a+b+n+1)
          / (Gamma(a+b+2n+1) Gamma(a+b+2n+2)).
    """
    a, b = spec.a, spec.b
    s = a + b
    if n == 0:
        # h_0 = 2^(a+b+1) Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)
        return ((s + 1.0) * math.log(2.0) + math.lgamma(a + 1.0)
                + math.lgamma(b + 1.0) - math.lgamma(s + 2.0))
    return ((2 * n + s + 1.0) * math.log(2.0) + math.lgamma(n + 1.0)
            + math.lgamma(a + n + 1.0) + math.lgamma(b + n + 1.0)
            + math.lgamma(s + n + 1.0) - math.lgamma(s + 2 * n + 1.0)
            - math.lgamma(s + 2 * n + 2.0))


def jacobi_norm_constant(spec: JacobiSpec, n: int) -> float:
    return math.exp(jacobi_norm_constant_log(spec, n))
