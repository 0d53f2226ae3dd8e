import numpy as np
import pytest

from ellgas import ChebyshevKind, OmegaCoord, chebyshev_eval, monic_eval
from ellgas.chebyshev import monic_values

W2 = OmegaCoord(2.0, 0.0)

# brute-force oracle: coefficient arrays from p_{n+1} = 2 z p_n - p_{n-1}
# with kind-specific seeds, evaluated with numpy polynomials in z.
_SEEDS = {
    ChebyshevKind.FIRST: ([1.0], [0.0, 1.0]),
    ChebyshevKind.SECOND: ([1.0], [0.0, 2.0]),
    ChebyshevKind.THIRD: ([1.0], [-1.0, 2.0]),
    ChebyshevKind.FOURTH: ([1.0], [1.0, 2.0]),
}


def coeff_oracle(kind, n):
    """Coefficients (ascending) of the degree-n kind polynomial."""
    p0, p1 = ([np.array(c) for c in _SEEDS[kind]])
    if n == 0:
        return p0
    for _ in range(n - 1):
        twice_z_p1 = np.concatenate([[0.0], 2.0 * p1])
        padded_p0 = np.concatenate([p0, np.zeros(len(twice_z_p1) - len(p0))])
        p0, p1 = p1, twice_z_p1 - padded_p0
    return p1


def eval_oracle(kind, n, z):
    c = coeff_oracle(kind, n)
    return np.polyval(c[::-1], z)


def test_spot_values():
    assert chebyshev_eval(ChebyshevKind.FIRST, 2, W2) == pytest.approx(2.125)
    assert chebyshev_eval(ChebyshevKind.THIRD, 1, W2) == pytest.approx(1.5)
    assert chebyshev_eval(ChebyshevKind.SECOND, 0, OmegaCoord(3.7, 1.1)) == pytest.approx(1.0)


def test_monic_spot_values():
    assert monic_eval(ChebyshevKind.FIRST, 0, OmegaCoord(5.0, 2.0)) == pytest.approx(1.0)
    assert monic_eval(ChebyshevKind.FIRST, 3, W2) == pytest.approx(1.015625)
    assert monic_eval(ChebyshevKind.FOURTH, 1, W2) == pytest.approx(1.75)


def test_against_coefficient_oracle(rng):
    r = rng.uniform(1.1, 3.0, 12)
    th = rng.uniform(0, 2 * np.pi, 12)
    om = r * np.exp(1j * th)
    z = 0.5 * (om + 1 / om)
    for kind in ChebyshevKind:
        for n in range(0, 9):
            got = [chebyshev_eval(kind, n, OmegaCoord(r[i], th[i])) for i in range(12)]
            want = eval_oracle(kind, n, z)
            assert np.allclose(got, want, rtol=1e-11)


def test_monic_leading_coefficient(rng):
    """Fit the omega-form monic values against the monomial basis."""
    for kind in ChebyshevKind:
        for n in range(1, 13):
            r = rng.uniform(1.1, 2.2, 20)
            th = rng.uniform(0, 2 * np.pi, 20)
            om = r * np.exp(1j * th)
            z = 0.5 * (om + 1 / om)
            vals = monic_values(kind, n, om)
            vander = np.vander(z, n + 1, increasing=True)
            coeffs, *_ = np.linalg.lstsq(vander, vals, rcond=None)
            assert coeffs[-1] == pytest.approx(1.0, abs=1e-9)


def test_degree_recursion(rng):
    """p_{n+1} = 2 z p_n - p_{n-1} for all kinds."""
    r = rng.uniform(1.05, 4.0, 10)
    th = rng.uniform(0, 2 * np.pi, 10)
    om = r * np.exp(1j * th)
    z = 0.5 * (om + 1 / om)
    for kind in ChebyshevKind:
        for n in range(1, 10):
            lhs = np.array([chebyshev_eval(kind, n + 1, OmegaCoord(r[i], th[i]))
                            for i in range(10)])
            pn = np.array([chebyshev_eval(kind, n, OmegaCoord(r[i], th[i]))
                           for i in range(10)])
            pm = np.array([chebyshev_eval(kind, n - 1, OmegaCoord(r[i], th[i]))
                           for i in range(10)])
            assert np.allclose(lhs, 2 * z * pn - pm, rtol=1e-10)


def test_omega_inversion_symmetry(rng):
    """T_n and U_n keep their value when the defining expression is evaluated
    at 1/omega instead of omega."""
    om = rng.uniform(1.2, 3.0, 8) * np.exp(1j * rng.uniform(0, 2 * np.pi, 8))
    inv = 1.0 / om
    for n in range(0, 9):
        t_direct = 0.5 * (om**n + om**-n)
        t_flipped = 0.5 * (inv**n + inv**-n)
        assert np.allclose(t_direct, t_flipped, rtol=1e-12)
        u_direct = (om ** (n + 1) - om ** (-n - 1)) / (om - 1 / om)
        u_flipped = (inv ** (n + 1) - inv ** (-n - 1)) / (inv - 1 / inv)
        assert np.allclose(u_direct, u_flipped, rtol=1e-12)


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        chebyshev_eval(ChebyshevKind.FIRST, -1, W2)
    with pytest.raises(ValueError):
        monic_eval(ChebyshevKind.SECOND, -2, W2)
