"""Normalization vectors shared by the compiled and numpy kernel backends.

The orthonormal kernel sections are written with every omega power rescaled
by v, so all magnitudes stay <= 1 on the annulus and the kernel sums remain
finite in double precision up to N of a few thousand.  The bracket

    B(m) = v^m - v^-m - R^m + R^-m

is used only through B(m)/v^m, evaluated with expm1 to keep full relative
accuracy when R and v are both close to 1 (the interval-scaling regime).
"""

from __future__ import annotations

import math

import numpy as np


def scaled_bracket(m: int | np.ndarray, R: float, v: float):
    """(v^m - v^-m - R^m + R^-m) / v^m for m >= 1."""
    m = np.asarray(m, dtype=float)
    lv = math.log(v)
    lR = math.log(R)
    return -np.expm1(-2.0 * m * lv) + np.exp(m * (lR - lv)) * np.expm1(-2.0 * m * lR)


def bracket(m: int, R: float, v: float) -> float:
    """B(m) itself; overflows for v^m beyond double range, desk-scale only."""
    return float(v**m - v ** (-m) - R**m + R ** (-m))


def norm_vector(model: int, nterms: int, R: float, v: float) -> np.ndarray:
    """Per-degree normalization factors for the model's orthonormal sections.

    The section of degree n is  norms[n] * (combination of (omega/v)^k and
    (1/(v*omega))^k powers) * (a model-specific point prefactor); see the
    backend modules for the exact combinations.
    """
    if nterms < 1:
        raise ValueError("need at least one section")
    n = np.arange(nterms, dtype=float)
    if model == 1:
        norms = np.empty(nterms)
        norms[0] = 1.0 / math.sqrt(2.0 * math.pi * math.log(v / R))
        if nterms > 1:
            nn = n[1:]
            norms[1:] = np.sqrt(nn / math.pi) / np.sqrt(scaled_bracket(2 * nn, R, v))
        return norms
    if model == 2:
        return 2.0 * np.sqrt((n + 1) / math.pi) / np.sqrt(scaled_bracket(2 * n + 2, R, v))
    if model in (3, 4):
        return np.sqrt((2 * n + 1) / math.pi) / np.sqrt(scaled_bracket(2 * n + 1, R, v))
    raise ValueError(f"unknown model id {model}")
