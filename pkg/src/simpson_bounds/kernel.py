"""Simpson defect, the piecewise-linear kernel, and kernel p-norms.

The defect of f on [a, b] is

    (1/(b-a)) * integral(f) - (1/3) * [ (f(a)+f(b))/2 + 2 f((a+b)/2) ]

and it equals (b-a) * integral_0^1 k(t) f'(ta + (1-t)b) dt for the kernel

    k(t) = t - 1/6  on [0, 1/2),    k(t) = t - 5/6  on [1/2, 1].

The kernel's kinks sit at t = 1/6, 1/2, 5/6, which are mandatory quadrature
breakpoints whenever k appears under an integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import DomainError
from .quadrature import Interval, QuadratureConfig, integrate
from .registry import TestFunction

__all__ = [
    "KERNEL_BREAKPOINTS",
    "SimpsonKernel",
    "DefectValue",
    "simpson_defect",
    "kernel_identity_residual",
    "kernel_pnorm_halves",
    "kernel_pnorm_halves_exact",
]

KERNEL_BREAKPOINTS = (1.0 / 6.0, 0.5, 5.0 / 6.0)


class SimpsonKernel:
    """The weight whose integral against f' reproduces the Simpson defect."""

    breakpoints = KERNEL_BREAKPOINTS

    @staticmethod
    def eval(t):
        t = np.asarray(t, dtype=float)
        out = np.where(t < 0.5, t - 1.0 / 6.0, t - 5.0 / 6.0)
        return out if out.shape else float(out)


@dataclass(frozen=True)
class DefectValue:
    raw: float
    absolute: float
    interval: Interval


def _fn(f):
    return f.f if isinstance(f, TestFunction) else f


def simpson_defect(
    f, iv: Interval, cfg: QuadratureConfig = QuadratureConfig()
) -> DefectValue:
    """Signed and absolute Simpson defect of f on iv.

    The sign convention puts the mean integral first; the combination-first
    ordering is its negation and has the same absolute value.
    """
    fn = _fn(f)
    mean = integrate(fn, iv, cfg).value / iv.width
    fa = float(fn(iv.a))
    fb = float(fn(iv.b))
    fm = float(fn(iv.midpoint))
    raw = mean - (0.5 * (fa + fb) + 2.0 * fm) / 3.0
    return DefectValue(raw, abs(raw), iv)


def kernel_identity_residual(
    f: TestFunction, iv: Interval, cfg: QuadratureConfig = QuadratureConfig()
) -> float:
    """|mean-first defect - (b-a) * integral of k(t) f'(ta+(1-t)b)|.

    Both sides are computed by independent quadratures; for smooth f the
    residual stays within roughly ten times the quadrature tolerance.  Note
    the substitution direction: t=0 maps to b and t=1 to a, and the identity
    holds for the mean-integral-first defect ordering (the combination-first
    ordering is its negation; integration by parts fixes the sign).
    """
    defect = simpson_defect(f, iv, cfg)
    a, b = iv.a, iv.b

    def integrand(t):
        t = np.asarray(t, dtype=float)
        return SimpsonKernel.eval(t) * f.f_prime(t * a + (1.0 - t) * b)

    kcfg = QuadratureConfig(
        abs_tol=cfg.abs_tol,
        rel_tol=cfg.rel_tol,
        max_subdivisions=cfg.max_subdivisions,
        breakpoints=KERNEL_BREAKPOINTS,
    )
    rhs = iv.width * integrate(integrand, Interval(0.0, 1.0), kcfg).value
    return abs(defect.raw - rhs)


def kernel_pnorm_halves(p: float) -> tuple[float, float]:
    """Closed-form integral of |k|^p over [0, 1/2] and over [1/2, 1].

    Both halves equal (1/(p+1)) * (6**-(p+1) + 3**-(p+1)); the kernel is
    antisymmetric about t = 1/2 up to sign.
    """
    if p < 1.0:
        raise DomainError(f"kernel p-norm requires p >= 1, got {p}")
    value = (6.0 ** -(p + 1.0) + 3.0 ** -(p + 1.0)) / (p + 1.0)
    return value, value


def kernel_pnorm_halves_exact(p: int) -> tuple[Fraction, Fraction]:
    """Rational-arithmetic version of kernel_pnorm_halves for integer p."""
    if not isinstance(p, int) or p < 1:
        raise DomainError(f"exact kernel p-norm requires integer p >= 1, got {p!r}")
    value = Fraction(1, p + 1) * (Fraction(1, 6 ** (p + 1)) + Fraction(1, 3 ** (p + 1)))
    return value, value
