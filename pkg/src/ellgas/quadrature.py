"""Deterministic integration over the elliptic annulus in (r, theta).

Tensor-product rule: composite Gauss-Legendre panels in r on [R, v] and the
uniform trapezoid rule in theta on [0, 2 pi).  All angular integrands that
arise from the weight models are trigonometric polynomials (the area element
cancels the weight singularities), so the trapezoid rule is exact once the
node count passes the trigonometric degree; the radial integrands are smooth
powers of r on [R, v] with R > 1.  Refinement doubles both directions until
two successive values agree to the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chebyshev import monic_values
from .errors import ToleranceNotMet
from .geometry import AnnulusSpec, forward_from_omega, omega_from_rt
from .kernels import elliptic_basis, radial_basis
from .models import ModelKind, RadialSymSpec, norm_constant, weight_rt

_MAX_REFINEMENTS = 6
_RADIAL_PANELS = 4


@dataclass(frozen=True)
class QuadratureSpec:
    radial_nodes: int = 24      # Gauss-Legendre order per radial panel
    angular_nodes: int = 64     # uniform periodic nodes in theta
    target_tol: float = 1e-10   # relative agreement between refinements

    def __post_init__(self):
        if self.radial_nodes < 4:
            raise ValueError("radial_nodes must be >= 4")
        if self.angular_nodes < 8:
            raise ValueError("angular_nodes must be >= 8")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")


@dataclass
class OrthoReport:
    """Quadrature certification of one model's orthogonality relations."""

    model: ModelKind
    nmax: int
    gram: np.ndarray            # (nmax+1)^2 computed inner products, real
    reference: np.ndarray       # closed-form h_n
    max_offdiag: float = field(init=False)
    max_diag_relerr: float = field(init=False)

    def __post_init__(self):
        off = self.gram - np.diag(np.diag(self.gram))
        self.max_offdiag = float(np.max(np.abs(off))) if self.gram.size > 1 else 0.0
        self.max_diag_relerr = float(
            np.max(np.abs(np.diag(self.gram) - self.reference) / self.reference))


def _radial_rule(R: float, v: float, order: int, panels: int):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(R, v, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _angular_rule(m: int):
    return np.arange(m) * (2.0 * math.pi / m), np.full(m, 2.0 * math.pi / m)


def annulus_grid(spec: AnnulusSpec, order: int, panels: int, m: int):
    """Tensor grid (r_i, theta_j) with combined weights including the area element."""
    r, wr = _radial_rule(spec.R, spec.v, order, panels)
    th, wth = _angular_rule(m)
    rg, tg = np.meshgrid(r, th, indexing="ij")
    jac = (rg**2 + rg**-2 - 2.0 * np.cos(2.0 * tg)) / (4.0 * rg)
    wq = (wr[:, None] * wth[None, :]) * jac
    return rg.ravel(), tg.ravel(), wq.ravel()


def _refine(evaluate, q: QuadratureSpec):
    """Run `evaluate(panels, m)` under node doubling until values stabilize."""
    panels, m = _RADIAL_PANELS, q.angular_nodes
    prev = evaluate(panels, m)
    for _ in range(_MAX_REFINEMENTS):
        panels *= 2
        m *= 2
        cur = evaluate(panels, m)
        scale = np.max(np.abs(cur))
        diff = np.max(np.abs(cur - prev))
        if diff <= q.target_tol * max(scale, 1e-300):
            return cur
        prev = cur
    raise ToleranceNotMet(
        f"quadrature did not reach tol={q.target_tol} after {_MAX_REFINEMENTS} doublings")


def integrate_annulus(f, spec: AnnulusSpec, q: QuadratureSpec = QuadratureSpec()) -> complex:
    """Integral of f(z) over the annulus; f must accept a complex array.

    The refinement criterion is scaled by the integrand's L1 mass, so
    integrals that vanish by symmetry still converge.
    """

    def evaluate(panels, m):
        r, th, wq = annulus_grid(spec, q.radial_nodes, panels, m)
        z = forward_from_omega(omega_from_rt(r, th))
        fv = np.asarray(f(z))
        return np.asarray([np.sum(wq * fv), np.sum(wq * np.abs(fv))])

    return complex(_refine(evaluate, q)[0])


def orthogonality_matrix(model: ModelKind, nmax: int, spec: AnnulusSpec,
                         q: QuadratureSpec = QuadratureSpec()) -> OrthoReport:
    """All inner products <M_m, M_n>_w for m, n <= nmax against closed-form h_n.

    The monic values come from the Chebyshev omega-power forms, a route
    independent of the kernel backend's rescaled sections.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    kind = model.chebyshev_kind
    m_ang = max(q.angular_nodes, 4 * nmax + 8)

    def evaluate(panels, m):
        r, th, wq = annulus_grid(spec, q.radial_nodes, panels, m)
        om = omega_from_rt(r, th)
        basis = np.column_stack([monic_values(kind, n, om) for n in range(nmax + 1)])
        wtot = wq * weight_rt(model, r, th)
        return basis.conj().T @ (wtot[:, None] * basis)

    gram_c = _refine(lambda p, m: evaluate(p, m), QuadratureSpec(
        q.radial_nodes, m_ang, q.target_tol))
    gram = gram_c.real
    reference = np.array([norm_constant(model, n, spec) for n in range(nmax + 1)])
    return OrthoReport(model=model, nmax=nmax, gram=gram, reference=reference)


def kernel_trace(model: ModelKind, N: int, spec: AnnulusSpec,
                 q: QuadratureSpec = QuadratureSpec()) -> float:
    """Integral of the kernel diagonal over the annulus; equals N for a projection."""
    if N < 1:
        raise ValueError("N must be >= 1")
    m_ang = max(q.angular_nodes, 4 * N + 8)

    def evaluate(panels, m):
        r, th, wq = annulus_grid(spec, q.radial_nodes, panels, m)
        b = elliptic_basis(model, N, omega_from_rt(r, th), spec)
        return np.asarray([np.sum(wq * np.sum(np.abs(b) ** 2, axis=1))])

    return float(_refine(evaluate, QuadratureSpec(q.radial_nodes, m_ang, q.target_tol))[0])


def section_gram(model: ModelKind, N: int, spec: AnnulusSpec,
                 q: QuadratureSpec = QuadratureSpec()) -> np.ndarray:
    """Gram matrix of the orthonormal sections; identity certifies the kernel
    as a reproducing projection (used for the reproducing-property checks)."""
    m_ang = max(q.angular_nodes, 4 * N + 8)

    def evaluate(panels, m):
        r, th, wq = annulus_grid(spec, q.radial_nodes, panels, m)
        b = elliptic_basis(model, N, omega_from_rt(r, th), spec)
        return b.conj().T @ (wq[:, None] * b)

    return _refine(evaluate, QuadratureSpec(q.radial_nodes, m_ang, q.target_tol))


def reproducing_residual(model: ModelKind, N: int, spec: AnnulusSpec, omega_pairs,
                         q: QuadratureSpec = QuadratureSpec()) -> float:
    """max relative |int K(z1,.)K(.,z2) - K(z1,z2)| over the given omega pairs."""
    from .kernels import kernel_elliptic_omega

    gram = section_gram(model, N, spec, q)
    worst = 0.0
    for om1, om2 in omega_pairs:
        b1 = elliptic_basis(model, N, np.atleast_1d(om1), spec)[0]
        b2 = elliptic_basis(model, N, np.atleast_1d(om2), spec)[0]
        integral = complex(b1 @ gram.T @ b2.conj())
        direct = complex(kernel_elliptic_omega(model, N, om1, om2, spec)[0])
        worst = max(worst, abs(integral - direct) / abs(direct))
    return worst


# -- disc annulus (radially symmetric comparison model) ----------------------

def disc_annulus_grid(rs: RadialSymSpec, order: int, panels: int, m: int):
    r, wr = _radial_rule(rs.r_inner, rs.r_outer, order, panels)
    th, wth = _angular_rule(m)
    rg, tg = np.meshgrid(r, th, indexing="ij")
    wq = (wr[:, None] * wth[None, :]) * rg
    return rg.ravel(), tg.ravel(), wq.ravel()


def radial_kernel_trace(rs: RadialSymSpec, N: int,
                        q: QuadratureSpec = QuadratureSpec()) -> float:
    m_ang = max(q.angular_nodes, 4 * N + 8)

    def evaluate(panels, m):
        r, th, wq = disc_annulus_grid(rs, q.radial_nodes, panels, m)
        b = radial_basis(rs, N, r * np.exp(1j * th))
        return np.asarray([np.sum(wq * np.sum(np.abs(b) ** 2, axis=1))])

    return float(_refine(evaluate, QuadratureSpec(q.radial_nodes, m_ang, q.target_tol))[0])


def radial_section_gram(rs: RadialSymSpec, N: int,
                        q: QuadratureSpec = QuadratureSpec()) -> np.ndarray:
    m_ang = max(q.angular_nodes, 4 * N + 8)

    def evaluate(panels, m):
        r, th, wq = disc_annulus_grid(rs, q.radial_nodes, panels, m)
        b = radial_basis(rs, N, r * np.exp(1j * th))
        return b.conj().T @ (wq[:, None] * b)

    return _refine(evaluate, QuadratureSpec(q.radial_nodes, m_ang, q.target_tol))
