"""Pure-numpy backend for the hot kernel sections.

Twin of the compiled backend in ``_kernels_cy.pyx``; same signature, same
semantics.  Powers are built by repeated column multiplication rather than
elementwise ``**`` so the fallback stays usable at large N.
"""

from __future__ import annotations

import numpy as np


def _power_table(base: np.ndarray, lo: int, count: int) -> np.ndarray:
    """Columns base**lo, base**(lo+1), ..., count of them."""
    out = np.empty((base.size, count), dtype=np.complex128)
    out[:, 0] = base**lo
    for k in range(1, count):
        np.multiply(out[:, k - 1], base, out=out[:, k])
    return out


def basis_matrix(model: int, omega, nterms: int, R: float, v: float, norms) -> np.ndarray:
    """Orthonormal weighted sections phi_n(z) at an array of omega points.

    Returns a (len(omega), nterms) complex matrix whose columns are
    sqrt(w(z)) * M_n(z) / sqrt(h_n) for the given weight model, evaluated
    through v-rescaled omega powers a = omega/v and b = 1/(v*omega).
    """
    om = np.ascontiguousarray(omega, dtype=np.complex128).ravel()
    norms = np.asarray(norms, dtype=float)
    a = om / v
    b = 1.0 / (v * om)
    out = np.empty((om.size, nterms), dtype=np.complex128)

    if model == 1:
        sw = 2.0 / np.abs(om - 1.0 / om)        # sqrt of 1/|1-z^2|
        out[:, 0] = sw * norms[0]
        if nterms > 1:
            pw = _power_table(a, 1, nterms - 1) + _power_table(b, 1, nterms - 1)
            out[:, 1:] = sw[:, None] * pw * norms[1:]
        return out

    if model == 2:
        pref = 1.0 / (om - 1.0 / om)
        pw = _power_table(a, 1, nterms) - _power_table(b, 1, nterms)
        np.multiply(pw, pref[:, None], out=out)
        out *= norms
        return out

    if model == 3:
        r = np.abs(om)
        pref = (np.sqrt(2.0 * r) / np.abs(om - 1.0)) / (om + 1.0)
        pw = np.sqrt(v) * _power_table(a, 1, nterms) + _power_table(b, 0, nterms) / np.sqrt(v)
        np.multiply(pw, pref[:, None], out=out)
        out *= norms
        return out

    if model == 4:
        r = np.abs(om)
        pref = (np.sqrt(2.0 * r) / np.abs(om + 1.0)) / (om - 1.0)
        pw = np.sqrt(v) * _power_table(a, 1, nterms) - _power_table(b, 0, nterms) / np.sqrt(v)
        np.multiply(pw, pref[:, None], out=out)
        out *= norms
        return out

    raise ValueError(f"unknown model id {model}")
