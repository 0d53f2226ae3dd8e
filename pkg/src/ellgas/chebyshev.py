"""Chebyshev polynomials of the four kinds, evaluated through omega powers.

Off the segment [-1, 1] every kind has a closed form in omega (with
z = (omega + 1/omega)/2, |omega| > 1):

    T_n = (omega^n + omega^-n) / 2
    U_n = (omega^(n+1) - omega^-(n+1)) / (omega - 1/omega)
    V_n = (omega^(n+1) + omega^-n) / (omega + 1)
    W_n = (omega^(n+1) - omega^-n) / (omega - 1)

These forms avoid the catastrophic cancellation that coefficient
recurrences in z suffer away from [-1, 1].
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

from .geometry import OmegaCoord


class ChebyshevKind(IntEnum):
    FIRST = 1
    SECOND = 2
    THIRD = 3
    FOURTH = 4


def chebyshev_eval(kind: ChebyshevKind, n: int, w: OmegaCoord) -> complex:
    """Value of the kind-`kind` Chebyshev polynomial of degree n at z(w)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return complex(chebyshev_values(kind, n, np.asarray(w.omega)))


def monic_eval(kind: ChebyshevKind, n: int, w: OmegaCoord) -> complex:
    """Monic variant: T_n/2^(n-1) (1 for n=0), and U_n, V_n, W_n over 2^n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return complex(monic_values(kind, n, np.asarray(w.omega)))


def chebyshev_values(kind: ChebyshevKind, n: int, omega) -> np.ndarray:
    """Vectorized kind polynomial at an array of omega values (|omega| > 1)."""
    om = np.asarray(omega, dtype=complex)
    kind = ChebyshevKind(kind)
    if kind is ChebyshevKind.FIRST:
        return 0.5 * (om**n + om ** (-n))
    if kind is ChebyshevKind.SECOND:
        return (om ** (n + 1) - om ** (-n - 1)) / (om - 1.0 / om)
    if kind is ChebyshevKind.THIRD:
        return (om ** (n + 1) + om ** (-n)) / (om + 1.0)
    return (om ** (n + 1) - om ** (-n)) / (om - 1.0)


def monic_values(kind: ChebyshevKind, n: int, omega) -> np.ndarray:
    """Vectorized monic polynomial at an array of omega values."""
    kind = ChebyshevKind(kind)
    vals = chebyshev_values(kind, n, omega)
    if kind is ChebyshevKind.FIRST:
        return vals if n == 0 else vals / 2.0 ** (n - 1)
    return vals / 2.0**n
