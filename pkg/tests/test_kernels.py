import math

import numpy as np
import pytest
from scipy.special import roots_jacobi

from conftest import random_omegas
from ellgas import AnnulusSpec, DomainError, JacobiSpec, ModelKind, OmegaCoord, \
    RadialSymSpec, correlation_det, integrate_annulus, joukowski_forward, \
    kernel_elliptic, kernel_jacobi, kernel_radial_sym, norm_constant
from ellgas.chebyshev import monic_values
from ellgas.kernels import elliptic_basis, jacobi_basis, kernel_elliptic_omega
from ellgas.models import weight_rt


def test_model_ii_rank_one_is_constant(spec, rng):
    expected = 1.0 / norm_constant(ModelKind.II, 0, spec)
    for om in random_omegas(rng, spec, 5):
        z = complex(0.5 * (om + 1 / om))
        val = kernel_elliptic(ModelKind.II, 1, z, z, spec)
        assert val == pytest.approx(expected, rel=1e-12)


def test_hermitian_symmetry(spec, rng):
    om = random_omegas(rng, spec, 100)
    for model in ModelKind:
        k12 = kernel_elliptic_omega(model, 6, om[:50], om[50:], spec)
        k21 = kernel_elliptic_omega(model, 6, om[50:], om[:50], spec)
        assert np.allclose(k12, k21.conj(), rtol=1e-12)


def test_diagonal_positive(spec, rng):
    om = random_omegas(rng, spec, 40)
    for model in ModelKind:
        diag = kernel_elliptic_omega(model, 9, om, om, spec).real
        assert np.all(diag > 0.0)


def test_model_i_brute_force_basis_oracle(spec):
    """Backend kernel against the definitional sum w * sum |M_n|^2 / h_n."""
    om = OmegaCoord(2.0, 0.3).omega
    z = complex(0.5 * (om + 1 / om))
    got = kernel_elliptic(ModelKind.I, 8, z, z, spec)
    w = 1.0 / abs(1 - z * z)
    want = sum(abs(complex(monic_values(ModelKind.I.chebyshev_kind, n, np.asarray(om)))) ** 2
               / norm_constant(ModelKind.I, n, spec) for n in range(8)) * w
    assert got.imag == pytest.approx(0.0, abs=1e-12 * abs(got))
    assert got.real == pytest.approx(want, rel=1e-10)
    assert got.real > 0


def test_printed_form_equivalence(spec, rng):
    """The omega-power kernel equals the monic-definition sum for all models."""
    om = random_omegas(rng, spec, 8)
    om1, om2 = om[:4], om[4:]
    r1, t1 = np.abs(om1), np.angle(om1)
    r2, t2 = np.abs(om2), np.angle(om2)
    for model in ModelKind:
        fast = kernel_elliptic_omega(model, 7, om1, om2, spec)
        kind = model.chebyshev_kind
        slow = np.zeros(4, dtype=complex)
        for n in range(7):
            slow += (monic_values(kind, n, om1) * monic_values(kind, n, om2).conj()
                     / norm_constant(model, n, spec))
        slow *= np.sqrt(weight_rt(model, r1, t1) * weight_rt(model, r2, t2))
        assert np.allclose(fast, slow, rtol=1e-10)


def test_large_n_no_overflow(spec):
    om = random_omegas(np.random.default_rng(3), spec, 2)
    vals = kernel_elliptic_omega(ModelKind.II, 2000, om[:1], om[1:], spec)
    assert np.all(np.isfinite(vals))


def test_domain_error_outside(spec):
    z_in = joukowski_forward(OmegaCoord(2.0, 1.0))
    with pytest.raises(DomainError):
        kernel_elliptic(ModelKind.I, 4, z_in, 5.0 + 5.0j, spec)
    with pytest.raises(DomainError):
        kernel_elliptic(ModelKind.I, 4, 0.2, z_in, spec)


# -- radially symmetric model --------------------------------------------------

def test_radial_rank_one_uniform():
    rs = RadialSymSpec(0.0, 1.5, 2.5)
    area = math.pi * (rs.r_outer**2 - rs.r_inner**2)
    for z in (1.0 + 0.1j, -0.8 + 0.6j, 1.2j):
        val = kernel_radial_sym(rs, 1, z, z)
        assert val.real == pytest.approx(1.0 / area, rel=1e-12)
        assert val.imag == pytest.approx(0.0, abs=1e-15)


def test_radial_hermitian(rng):
    rs = RadialSymSpec(1.5, 1.5, 2.5)
    r = rng.uniform(rs.r_inner, rs.r_outer, 10)
    th = rng.uniform(0, 2 * np.pi, 10)
    z = r * np.exp(1j * th)
    for i in range(5):
        k12 = kernel_radial_sym(rs, 6, z[i], z[i + 5])
        k21 = kernel_radial_sym(rs, 6, z[i + 5], z[i])
        assert k12 == pytest.approx(k21.conjugate(), rel=1e-12)


def test_radial_domain_error():
    rs = RadialSymSpec(0.0, 1.5, 2.5)
    with pytest.raises(DomainError):
        kernel_radial_sym(rs, 3, 0.1, 1.0)
    with pytest.raises(DomainError):
        kernel_radial_sym(rs, 3, 1.0, 2.0)


# -- Jacobi ensemble -------------------------------------------------------------

def test_jacobi_kernel_legendre_rank_one():
    js = JacobiSpec(0.0, 0.0)
    assert kernel_jacobi(js, 1, 0.0, 0.0) == pytest.approx(0.5, rel=1e-14)


def test_jacobi_kernel_symmetry(rng):
    js = JacobiSpec(0.3, -0.2)
    xs = rng.uniform(-0.95, 0.95, 10)
    for i in range(5):
        assert kernel_jacobi(js, 7, xs[i], xs[i + 5]) == pytest.approx(
            kernel_jacobi(js, 7, xs[i + 5], xs[i]), rel=1e-12)


def test_jacobi_trace_is_n():
    """int K_N(x,x) dx = N, via Gauss-Jacobi nodes (exact for the polynomial part)."""
    js = JacobiSpec(0.3, -0.2)
    N = 5
    nodes, weights = roots_jacobi(N + 2, js.a, js.b)
    basis = jacobi_basis(js, N, nodes)
    w = (1 - nodes) ** js.a * (1 + nodes) ** js.b
    trace = np.sum(weights / w * np.sum(basis**2, axis=1))
    assert trace == pytest.approx(N, rel=1e-8)


def test_jacobi_domain_error():
    js = JacobiSpec(0.0, 0.0)
    with pytest.raises(DomainError):
        kernel_jacobi(js, 3, 1.0, 0.0)
    with pytest.raises(DomainError):
        kernel_jacobi(js, 3, 0.0, -1.2)


# -- correlation determinants -----------------------------------------------------

def test_correlation_det_single_point(spec):
    z = joukowski_forward(OmegaCoord(2.0, 0.7))
    k = lambda a, b: kernel_elliptic(ModelKind.III, 5, a, b, spec)
    assert correlation_det(k, [z]) == pytest.approx(k(z, z).real, rel=1e-14)


def test_correlation_det_repeated_point_vanishes(spec):
    z = joukowski_forward(OmegaCoord(1.8, 2.0))
    k = lambda a, b: kernel_elliptic(ModelKind.II, 4, a, b, spec)
    scale = abs(k(z, z)) ** 2
    assert abs(correlation_det(k, [z, z])) <= 1e-12 * scale


def test_correlation_det_two_particle_normalization_oracle(spec):
    """Model II at N=2: det[K] equals the directly normalized pair density
    2 w(z1) w(z2) |z1 - z2|^2 / Z with Z from moment integrals."""
    area = integrate_annulus(lambda z: np.ones_like(z, dtype=float), spec).real
    s2 = integrate_annulus(lambda z: np.abs(z) ** 2, spec).real
    s1 = integrate_annulus(lambda z: z, spec)
    Z = 2 * area * s2 - 2 * abs(s1) ** 2
    k = lambda a, b: kernel_elliptic(ModelKind.II, 2, a, b, spec)
    for w1, w2 in [((2.0, 0.4), (1.7, 2.2)), ((1.6, 3.3), (2.4, 5.1))]:
        z1 = joukowski_forward(OmegaCoord(*w1))
        z2 = joukowski_forward(OmegaCoord(*w2))
        got = correlation_det(k, [z1, z2])
        want = 2.0 * abs(z1 - z2) ** 2 / Z
        assert got == pytest.approx(want, rel=1e-8)


def test_correlation_det_nonnegative(spec, rng):
    for _ in range(100):
        model = rng.choice(list(ModelKind))
        k_pts = int(rng.integers(1, 5))
        om = random_omegas(rng, spec, k_pts)
        pts = [complex(0.5 * (o + 1 / o)) for o in om]
        kern = lambda a, b: kernel_elliptic(model, 6, a, b, spec)
        mat_scale = max(abs(kern(p, q)) for p in pts for q in pts)
        det = correlation_det(kern, pts)
        assert det >= -1e-9 * max(mat_scale, 1.0) ** k_pts
