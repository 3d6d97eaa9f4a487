"""Numerical verification of Simpson-type inequalities for h-convex functions.

The library computes both sides of each Simpson-defect inequality to
controlled accuracy, certifies the function-class hypotheses on grids, and
reports margins or violations over parameterized function families.
"""

from .errors import (
    ConfigError,
    DivergentIntegral,
    DomainError,
    HypothesisError,
    NegativityError,
    NonConvergence,
    SimpsonBoundsError,
)
from .quadrature import (
    Diverged,
    Interval,
    QuadratureConfig,
    QuadratureResult,
    integrate,
    integrate_or_diverge,
)

__version__ = "0.1.0"
