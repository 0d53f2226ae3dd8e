"""Large-N limit kernels for the annulus models and their 1D reductions.

Two zoom regimes:

* edge scaling, near the outer ellipse boundary:
      r_j = v (1 - t_j/N),  theta_j = psi + phi_j/N,  R = v (1 - T/N),
  where every model shares the one universal limit

      K -> (4 N^2 / pi) (v^2 + v^-2 - 2 cos 2 psi)^-1
           * int_0^1 c exp(-c (t1+t2)) exp(i c (phi1 - phi2)) / (1 - exp(-2cT)) dc;

* interval scaling, collapsing onto the segment [-1, 1]:
      r_j = 1 + t_j/N,  R = 1 + T/N,  v = 1 + u/N,
  where psi = pi/2 again gives one shared bulk limit while psi = 0 and pi
  split into a plus/minus pair of endpoint kernels whose routing depends on
  the weight model's singular points.

All dc-integrals run over analytic integrands on [0, 1] (the c -> 0
singularities are removable) and use fixed Gauss-Legendre nodes, doubled
once as an accuracy check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import jv

from .errors import DomainError
from .geometry import AnnulusSpec
from .models import ModelKind

_GL_BASE = 64


@dataclass(frozen=True)
class EdgeScaling:
    """Parameters of the outer-edge zoom; requires 0 < t1, t2 < T."""

    v: float
    psi: float
    T: float
    t1: float
    t2: float
    phi1: float
    phi2: float
    N: int = 1

    def __post_init__(self):
        if not self.v > 1.0:
            raise ValueError("v must exceed 1")
        if not (0.0 < self.t1 < self.T and 0.0 < self.t2 < self.T):
            raise ValueError("require 0 < t1, t2 < T")


@dataclass(frozen=True)
class IntervalScaling:
    """Parameters of the segment zoom; requires 0 <= T < Re s1, Re s2 < u."""

    u: float
    T: float
    psi: float
    s1: complex
    s2: complex

    def __post_init__(self):
        if not self.T < self.u:
            raise DomainError("require T < u")
        if self.T < 0.0:
            raise ValueError("T must be non-negative")
        for s in (self.s1, self.s2):
            if not self.T < s.real < self.u:
                raise ValueError("require T < Re(s_j) < u")


@lru_cache(maxsize=16)
def _gl01(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _integral_01(f, n: int = _GL_BASE):
    """Gauss-Legendre on [0,1] at n and 2n nodes; returns (value, |difference|)."""
    c1, w1 = _gl01(n)
    c2, w2 = _gl01(2 * n)
    v1 = np.sum(w1 * f(c1))
    v2 = np.sum(w2 * f(c2))
    return v2, abs(v2 - v1)


def _edge_integral(t1: float, t2: float, dphi: float, T: float) -> complex:
    """int_0^1 c exp(-c(t1+t2)) exp(i c dphi) / (1 - exp(-2cT)) dc."""

    def f(c):
        return c * np.exp(-c * (t1 + t2) + 1j * c * dphi) / (-np.expm1(-2.0 * c * T))

    val, _ = _integral_01(f)
    return complex(val)


def edge_kernel_universal(e: EdgeScaling) -> complex:
    """Shared outer-edge limit of all four annulus models."""
    denom = e.v**2 + e.v**-2 - 2.0 * math.cos(2.0 * e.psi)
    return (4.0 * e.N**2 / math.pi) / denom * _edge_integral(e.t1, e.t2, e.phi1 - e.phi2, e.T)


def edge_kernel_radial_sym(v: float, T: float, t1: float, t2: float,
                           phi1: float, phi2: float, N: int = 1) -> complex:
    """Outer-edge limit of the radially symmetric disc-annulus model.

    Independent of the radial exponent gamma; approaches the elliptic edge
    limit's prefactor as v grows.
    """
    if not (0.0 < t1 < T and 0.0 < t2 < T):
        raise ValueError("require 0 < t1, t2 < T")
    return (4.0 * N**2 / (math.pi * v**2)) * _edge_integral(t1, t2, phi1 - phi2, T)


def rho_v(v: float, psi: float, N: int, T: float) -> float:
    """Edge molecule density (2 N^2 / pi T) / (v^2 + v^-2 - 2 cos 2 psi)."""
    if not (v > 1.0 and T > 0.0):
        raise ValueError("require v > 1 and T > 0")
    return (2.0 * N**2 / (math.pi * T)) / (v**2 + v**-2 - 2.0 * math.cos(2.0 * psi))


def sigma_density(v: float, psi: float) -> float:
    """Normalized angular density (v^2 - v^-2) / (2 pi (v^2 + v^-2 - 2 cos 2 psi))."""
    if not v > 1.0:
        raise ValueError("v must exceed 1")
    return (v**2 - v**-2) / (2.0 * math.pi * (v**2 + v**-2 - 2.0 * math.cos(2.0 * psi)))


def kappa(tau: float, varphi: float) -> complex:
    """Thick-annulus building block ((s - 1) e^s + 1) / s^2 at s = -tau + i varphi.

    A Taylor series takes over near s = 0, where the closed form loses all
    significance; kappa -> 1/2 there.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    s = complex(-tau, varphi)
    if abs(s) < 1e-3:
        # sum_{k>=1} k s^(k-1) / (k+1)!
        acc = 0.0 + 0.0j
        term = 1.0 + 0.0j
        for k in range(1, 12):
            acc += k * term / math.factorial(k + 1)
            term *= s
        return acc
    return ((s - 1.0) * np.exp(s) + 1.0) / (s * s)


def lambda_corr(tau: float, varphi: float) -> float:
    """Normalized two-point correlation 1 - |kappa(tau, varphi)|^2 / kappa(tau, 0)^2."""
    k0 = kappa(tau, 0.0).real
    kf = kappa(tau, varphi)
    return 1.0 - (kf * kf.conjugate()).real / (k0 * k0)


# -- interval regime ----------------------------------------------------------

def _interval_denominator(c, u: float, T: float):
    # exp(2cu) - exp(-2cu) - exp(2cT) + exp(-2cT), via the exact product form
    return 4.0 * np.cosh(c * (u + T)) * np.sinh(c * (u - T))


def interval_edge_kernel(parity: str, i: IntervalScaling, N: int = 1) -> complex:
    """Endpoint limit kernel near psi = 0 or pi.

    parity "plus" carries the prefactor 1/(|s1||s2|) with cosh factors;
    parity "minus" carries 1/(s1 conj(s2)) with sinh factors.  Model routing:
    I -> plus at both endpoints, II -> minus at both, III -> plus at psi=0 /
    minus at psi=pi, IV the reverse.
    """
    if parity not in ("plus", "minus"):
        raise ValueError("parity must be 'plus' or 'minus'")
    s1, s2c = complex(i.s1), complex(i.s2).conjugate()

    if parity == "plus":
        def f(c):
            return (4.0 * c * np.cosh(c * s1) * np.cosh(c * s2c)
                    / _interval_denominator(c, i.u, i.T))
        pref = (N**4 / math.pi) / (abs(s1) * abs(i.s2))
    else:
        def f(c):
            return (4.0 * c * np.sinh(c * s1) * np.sinh(c * s2c)
                    / _interval_denominator(c, i.u, i.T))
        pref = (N**4 / math.pi) / (s1 * s2c)

    val, _ = _integral_01(f)
    return pref * complex(val)


def interval_bulk_kernel(i: IntervalScaling, N: int = 1) -> complex:
    """Shared psi = pi/2 limit of all four models."""
    s = complex(i.s1) + complex(i.s2).conjugate()

    def f(c):
        return 2.0 * c * np.cosh(c * s) / _interval_denominator(c, i.u, i.T)

    val, _ = _integral_01(f)
    return (N**2 / math.pi) * complex(val)


INTERVAL_EDGE_PARITY = {
    (ModelKind.I, 0.0): "plus", (ModelKind.I, math.pi): "plus",
    (ModelKind.II, 0.0): "minus", (ModelKind.II, math.pi): "minus",
    (ModelKind.III, 0.0): "plus", (ModelKind.III, math.pi): "minus",
    (ModelKind.IV, 0.0): "minus", (ModelKind.IV, math.pi): "plus",
}


# -- strictly 1D kernels -------------------------------------------------------

def _sinc(x: float) -> float:
    return 1.0 if x == 0.0 else math.sin(x) / x


def sine_kernel_line(phi1: float, phi2: float, N: int = 1) -> float:
    """(N / pi) sin(phi1 - phi2) / (phi1 - phi2)."""
    return (N / math.pi) * _sinc(phi1 - phi2)


def kernel_r(parity: str, phi1: float, phi2: float, N: int = 1) -> float:
    """Endpoint 1D kernels (N^2/pi) (sinc(d) +/- sinc(s)) / sqrt(|phi1 phi2|)."""
    if phi1 == 0.0 or phi2 == 0.0:
        raise DomainError("kernel_r is undefined at phi = 0")
    if parity not in ("plus", "minus"):
        raise ValueError("parity must be 'plus' or 'minus'")
    sign = 1.0 if parity == "plus" else -1.0
    return (N**2 / math.pi) / math.sqrt(abs(phi1 * phi2)) * (
        _sinc(phi1 - phi2) + sign * _sinc(phi1 + phi2))


def bessel_kernel(a: float, phi1: float, phi2: float, N: int = 1) -> float:
    """Hard-edge kernel N^2 int_0^1 c J_a(c phi1) J_a(c phi2) dc."""
    if not (phi1 > 0.0 and phi2 > 0.0):
        raise ValueError("require phi1, phi2 > 0")

    def f(c):
        return c * jv(a, c * phi1) * jv(a, c * phi2)

    val, _ = _integral_01(f)
    return N**2 * float(val)


# -- scaled finite-N configurations -------------------------------------------

def edge_scaled_configuration(e: EdgeScaling, N: int):
    """Finite-N omega pair and annulus matching the edge scaling at this N."""
    if not N > e.T:
        raise DomainError(f"N={N} too small for T={e.T}")
    spec = AnnulusSpec(e.v * (1.0 - e.T / N), e.v)
    om1 = e.v * (1.0 - e.t1 / N) * np.exp(1j * (e.psi + e.phi1 / N))
    om2 = e.v * (1.0 - e.t2 / N) * np.exp(1j * (e.psi + e.phi2 / N))
    return om1, om2, spec


def interval_scaled_configuration(i: IntervalScaling, N: int):
    """Finite-N omega pair and annulus matching the interval scaling at this N.

    Needs T > 0 at finite N (the inner radius 1 + T/N must exceed 1).
    """
    if not i.T > 0.0:
        raise DomainError("finite-N interval configurations require T > 0")
    spec = AnnulusSpec(1.0 + i.T / N, 1.0 + i.u / N)
    om1 = (1.0 + i.s1.real / N) * np.exp(1j * (i.psi + i.s1.imag / N))
    om2 = (1.0 + i.s2.real / N) * np.exp(1j * (i.psi + i.s2.imag / N))
    return om1, om2, spec
