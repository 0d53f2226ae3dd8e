# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernel sections.

Twin of ``_kernels_numpy``: same signature, same rescaled-power scheme,
but with running products in a single C loop per point.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def basis_matrix(int model, omega, int nterms, double R, double v, norms):
    """Orthonormal weighted sections phi_n(z) at an array of omega points."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] om = \
        np.ascontiguousarray(omega, dtype=np.complex128).ravel()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nrm = \
        np.ascontiguousarray(norms, dtype=np.float64)
    cdef Py_ssize_t npts = om.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] out = \
        np.empty((npts, nterms), dtype=np.complex128)

    cdef Py_ssize_t p, n
    cdef double complex w, a, b, apow, bpow, cpref
    cdef double complex winv
    cdef double r, rpref, sqv = sqrt(v)

    for p in range(npts):
        w = om[p]
        winv = 1.0 / w
        a = w / v
        b = winv / v
        if model == 1:
            rpref = 2.0 / abs(w - winv)
            out[p, 0] = rpref * nrm[0]
            apow = a
            bpow = b
            for n in range(1, nterms):
                out[p, n] = rpref * (apow + bpow) * nrm[n]
                apow = apow * a
                bpow = bpow * b
        elif model == 2:
            cpref = 1.0 / (w - winv)
            apow = a
            bpow = b
            for n in range(nterms):
                out[p, n] = cpref * (apow - bpow) * nrm[n]
                apow = apow * a
                bpow = bpow * b
        elif model == 3:
            r = abs(w)
            cpref = (sqrt(2.0 * r) / abs(w - 1.0)) / (w + 1.0)
            apow = a * sqv
            bpow = 1.0 / sqv
            for n in range(nterms):
                out[p, n] = cpref * (apow + bpow) * nrm[n]
                apow = apow * a
                bpow = bpow * b
        elif model == 4:
            r = abs(w)
            cpref = (sqrt(2.0 * r) / abs(w + 1.0)) / (w - 1.0)
            apow = a * sqv
            bpow = 1.0 / sqv
            for n in range(nterms):
                out[p, n] = cpref * (apow - bpow) * nrm[n]
                apow = apow * a
                bpow = bpow * b
        else:
            raise ValueError(f"unknown model id {model}")
    return out
