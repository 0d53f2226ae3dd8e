"""Exception types shared across the package."""


class EllgasError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EllgasError):
    """A point lies outside the region an operation is defined on."""


class ToleranceNotMet(EllgasError):
    """Successive quadrature refinements failed to agree to the requested tolerance."""


class EnvelopeExceeded(EllgasError):
    """A proposed density value exceeded the rejection-sampling envelope."""


class RejectBudgetExhausted(EllgasError):
    """Too many consecutive rejections while drawing a single point."""
