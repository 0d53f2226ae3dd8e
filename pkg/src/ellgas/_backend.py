"""Backend selection: compiled kernel core when available, numpy otherwise.

Set ELLGAS_BACKEND=numpy or ELLGAS_BACKEND=cython to force a choice; forcing
cython raises if the extension was not built.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy
from ._normalization import norm_vector

_forced = os.environ.get("ELLGAS_BACKEND")
if _forced not in (None, "", "cython", "numpy"):
    raise ImportError(f"ELLGAS_BACKEND must be 'cython' or 'numpy', got {_forced!r}")

_cy = None
if _forced != "numpy":
    try:
        from . import _kernels_cy as _cy  # type: ignore[no-redef]
    except ImportError:
        _cy = None
if _forced == "cython" and _cy is None:
    raise ImportError("ELLGAS_BACKEND=cython but the compiled extension is not available")

_impl = _cy if _cy is not None else _kernels_numpy


def backend_name() -> str:
    return "cython" if _impl is not _kernels_numpy else "numpy"


def available_backends() -> tuple:
    names = ["numpy"]
    if _cy is not None:
        names.insert(0, "cython")
    return tuple(names)


def backend_module(name: str):
    """Explicit backend lookup, for equivalence tests and benchmarks."""
    if name == "numpy":
        return _kernels_numpy
    if name == "cython":
        if _cy is None:
            raise ImportError("compiled backend not available")
        return _cy
    raise ValueError(f"unknown backend {name!r}")


def basis_matrix(model: int, omega, nterms: int, R: float, v: float) -> np.ndarray:
    """Sections phi_n at omega points via the selected backend; shape (len, nterms)."""
    norms = norm_vector(model, nterms, R, v)
    return _impl.basis_matrix(int(model), np.ascontiguousarray(omega, dtype=np.complex128),
                              int(nterms), float(R), float(v), norms)
