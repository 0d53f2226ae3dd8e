"""Joukowski parameterization of the elliptic annulus.

The map z = (omega + 1/omega)/2 with omega = r*exp(i*theta), r > 1, sends the
circle |omega| = r to the ellipse with semi-axes ((r + 1/r)/2, (r - 1/r)/2).
The region between the images of |omega| = R and |omega| = v (1 < R < v) is
the elliptic annulus this package works on.  The branch cut of the inverse
map is the real segment [-1, 1], which the annulus never touches.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Absolute tolerance for declaring a point on the branch cut [-1, 1].
CUT_TOL = 1e-14

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class OmegaCoord:
    """Elliptic polar coordinates (r, theta) with r > 1, theta in [0, 2*pi)."""

    r: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.theta)):
            raise ValueError("OmegaCoord requires finite r and theta")
        if self.r <= 1.0:
            raise ValueError(f"OmegaCoord requires r > 1, got r={self.r}")
        object.__setattr__(self, "theta", self.theta % TWO_PI)

    @property
    def omega(self) -> complex:
        return self.r * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class AnnulusSpec:
    """The pair (R, v) with 1 < R < v defining the elliptic annulus."""

    R: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.R) and math.isfinite(self.v)):
            raise ValueError("AnnulusSpec requires finite radii")
        if not (1.0 < self.R < self.v):
            raise ValueError(f"AnnulusSpec requires 1 < R < v, got R={self.R}, v={self.v}")

    def semi_axes(self, r: float) -> tuple[float, float]:
        """Semi-axes (a_r, b_r) of the confocal ellipse at elliptic radius r."""
        return 0.5 * (r + 1.0 / r), 0.5 * (r - 1.0 / r)


def joukowski_forward(w: OmegaCoord) -> complex:
    """Map elliptic coordinates to the plane: z = (omega + 1/omega)/2."""
    om = w.omega
    return 0.5 * (om + 1.0 / om)


def joukowski_inverse(z: complex) -> OmegaCoord:
    """Invert the Joukowski map, returning the unique root with |omega| > 1.

    Both roots z +/- sqrt(z^2 - 1) are formed and the one outside the unit
    circle is kept, which sidesteps complex square-root branch conventions.
    Raises DomainError on the branch cut [-1, 1] (tolerance CUT_TOL).
    """
    z = complex(z)
    if abs(z.imag) <= CUT_TOL and abs(z.real) <= 1.0 + CUT_TOL:
        raise DomainError(f"point {z} lies on the branch cut [-1, 1]")
    # sqrt(z-1)*sqrt(z+1) keeps accuracy near the foci +/-1.
    s = cmath.sqrt(z - 1.0) * cmath.sqrt(z + 1.0)
    om = z + s
    if abs(om) <= 1.0:
        om = z - s
    if abs(om) <= 1.0 + CUT_TOL:
        raise DomainError(f"point {z} maps onto the unit circle; on the branch cut")
    return OmegaCoord(abs(om), cmath.phase(om) % TWO_PI)


def jacobian(w: OmegaCoord) -> float:
    """Area element d(x,y)/d(r,theta) = |omega - 1/omega|^2 / (4 r) = |1 - z^2| / r."""
    om = w.omega
    return abs(om - 1.0 / om) ** 2 / (4.0 * w.r)


def contains(spec: AnnulusSpec, z: complex) -> bool:
    """Membership test for the elliptic annulus (closed region R <= r <= v)."""
    try:
        w = joukowski_inverse(z)
    except DomainError:
        # On the cut means r = 1 < R: inside the hole.
        return False
    return spec.R <= w.r <= spec.v


# -- vectorized helpers over raw (r, theta) arrays -------------------------

def omega_from_rt(r, theta):
    """omega = r*exp(i*theta) elementwise."""
    return np.asarray(r) * np.exp(1j * np.asarray(theta))


def forward_from_omega(omega):
    """z = (omega + 1/omega)/2 elementwise."""
    omega = np.asarray(omega)
    return 0.5 * (omega + 1.0 / omega)


def jacobian_rt(r, theta):
    """Vectorized area element (r^2 + r^-2 - 2 cos 2 theta) / (4 r)."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return (r**2 + r**-2 - 2.0 * np.cos(2.0 * theta)) / (4.0 * r)


def inverse_from_points(z) -> np.ndarray:
    """Vectorized Joukowski inverse; raises DomainError if any point is on the cut."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any((np.abs(z.imag) <= CUT_TOL) & (np.abs(z.real) <= 1.0 + CUT_TOL)):
        raise DomainError("a point lies on the branch cut [-1, 1]")
    s = np.sqrt(z - 1.0) * np.sqrt(z + 1.0)
    om = z + s
    inner = np.abs(om) <= 1.0
    om[inner] = (z - s)[inner]
    if np.any(np.abs(om) <= 1.0 + CUT_TOL):
        raise DomainError("a point maps onto the unit circle; on the branch cut")
    return om
