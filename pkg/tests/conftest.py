import numpy as np
import pytest

from ellgas import AnnulusSpec


@pytest.fixture
def spec():
    return AnnulusSpec(1.5, 2.5)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_omegas(rng, spec, n, margin=0.02):
    """Omega points strictly inside the annulus."""
    width = spec.v - spec.R
    r = rng.uniform(spec.R + margin * width, spec.v - margin * width, n)
    th = rng.uniform(0.0, 2.0 * np.pi, n)
    return r * np.exp(1j * th)
