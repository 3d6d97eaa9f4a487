"""Exception types shared across the library."""

from __future__ import annotations


class SimpsonBoundsError(Exception):
    """Base class for all library-specific failures."""


class NonConvergence(SimpsonBoundsError):
    """Adaptive quadrature exhausted its subdivision budget above tolerance."""


class DivergentIntegral(SimpsonBoundsError):
    """Panel estimates grow without bound; the integral does not exist."""


class DomainError(SimpsonBoundsError):
    """A function was evaluated (or asked to be evaluated) outside its domain."""


class NegativityError(SimpsonBoundsError):
    """A function required to be nonnegative is negative beyond tolerance."""


class HypothesisError(SimpsonBoundsError):
    """A structural hypothesis of an inequality fails for the given inputs."""


class ConfigError(SimpsonBoundsError):
    """A campaign specification or config file is malformed."""
