"""Determinantal log-gas kernels on an elliptic annulus.

Finite-N kernels for the four Chebyshev-weight models, quadrature
certification of their orthogonality relations, every large-N limit kernel
(edge, interval edge/bulk, sine, Bessel), and exact sampling of the
resulting determinantal point process.
"""

from ._backend import available_backends, backend_name
from .asymptotic import (
    EdgeScaling,
    IntervalScaling,
    INTERVAL_EDGE_PARITY,
    bessel_kernel,
    edge_kernel_radial_sym,
    edge_kernel_universal,
    edge_scaled_configuration,
    interval_bulk_kernel,
    interval_edge_kernel,
    interval_scaled_configuration,
    kappa,
    kernel_r,
    lambda_corr,
    rho_v,
    sigma_density,
    sine_kernel_line,
)
from .chebyshev import ChebyshevKind, chebyshev_eval, monic_eval
from .errors import (
    DomainError,
    EllgasError,
    EnvelopeExceeded,
    RejectBudgetExhausted,
    ToleranceNotMet,
)
from .geometry import (
    AnnulusSpec,
    OmegaCoord,
    contains,
    jacobian,
    joukowski_forward,
    joukowski_inverse,
)
from .kernels import (
    correlation_det,
    elliptic_basis,
    kernel_elliptic,
    kernel_jacobi,
    kernel_radial_sym,
)
from .models import (
    JacobiSpec,
    ModelKind,
    RadialSymSpec,
    jacobi_norm_constant,
    jacobi_polynomial,
    norm_constant,
    radial_norm_constant,
    weight_eval,
)
from .quadrature import (
    OrthoReport,
    QuadratureSpec,
    integrate_annulus,
    kernel_trace,
    orthogonality_matrix,
)
from .sampler import DensityHistogram, SampleConfig, empirical_density, sample, sample_batch

__version__ = "0.1.0"
