"""Shared exception types."""


class NumericalGuardError(RuntimeError):
    """A numerical safety guard tripped (near-singular operator, contour
    misconfiguration, runaway imaginary residue, MC acceptance collapse)."""


class ContourCollisionError(NumericalGuardError):
    """Quadrature nodes of two contours (or a contour and a pole) collide."""


class SingularOperatorError(NumericalGuardError):
    """det(I - K) is too close to zero for a resolvent / ratio to be trusted."""


class ConfigError(ValueError):
    """Invalid or unknown run-configuration input."""
