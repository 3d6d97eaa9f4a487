"""Special means of positive reals and the proposition checks built on them.

The generalized log-mean is the mean whose n-th power equals the average of
x^n over the interval, which is exactly the mean-integral side of the
Simpson defect for monomials; the proposition checks exploit that identity
and re-derive the defect two independent ways.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .bounds import BoundReport, TheoremId, bound_cor_aa, _make_report
from .errors import DomainError
from .kernel import simpson_defect
from .quadrature import Interval, QuadratureConfig, integrate
from .registry import ConjugatePair, monomial, reciprocal_fn

__all__ = [
    "MeanKind",
    "MeanValue",
    "arithmetic_mean",
    "logarithmic_mean",
    "generalized_log_mean",
    "special_means",
    "check_prop31",
    "check_prop32",
]


class MeanKind(Enum):
    ARITHMETIC = "arithmetic"
    LOGARITHMIC = "logarithmic"
    GENERALIZED_LOG = "generalized_log"


@dataclass(frozen=True)
class MeanValue:
    kind: MeanKind
    value: float
    args: tuple[float, float]
    n: int | None = None


def _require_positive(alpha: float, beta: float) -> None:
    if not (alpha > 0.0 and beta > 0.0):
        raise DomainError(f"means require positive arguments, got ({alpha}, {beta})")


def arithmetic_mean(alpha: float, beta: float) -> float:
    _require_positive(alpha, beta)
    return 0.5 * (alpha + beta)


def logarithmic_mean(alpha: float, beta: float) -> float:
    """(alpha - beta) / (ln alpha - ln beta); undefined on the diagonal.

    No limiting value is substituted at alpha = beta: campaigns stay off the
    diagonal and a DomainError keeps the restriction visible.
    """
    _require_positive(alpha, beta)
    if alpha == beta:
        raise DomainError("logarithmic mean undefined for equal arguments")
    return (alpha - beta) / (math.log(alpha) - math.log(beta))


def generalized_log_mean(alpha: float, beta: float, n: int) -> float:
    """[(beta^(n+1) - alpha^(n+1)) / ((n+1)(beta - alpha))]^(1/n) for
    integer n outside {-1, 0}."""
    _require_positive(alpha, beta)
    if alpha == beta:
        raise DomainError("generalized log-mean undefined for equal arguments")
    if not isinstance(n, int) or n in (-1, 0):
        raise DomainError(f"generalized log-mean requires integer n outside {{-1, 0}}, got {n!r}")
    ratio = (beta ** (n + 1) - alpha ** (n + 1)) / ((n + 1) * (beta - alpha))
    return ratio ** (1.0 / n)


def special_means(alpha: float, beta: float, n: int) -> tuple[MeanValue, ...]:
    """The three means packaged with their arguments, diagonal-safe."""
    out = [MeanValue(MeanKind.ARITHMETIC, arithmetic_mean(alpha, beta), (alpha, beta))]
    if alpha != beta:
        out.append(MeanValue(MeanKind.LOGARITHMIC, logarithmic_mean(alpha, beta), (alpha, beta)))
        out.append(
            MeanValue(
                MeanKind.GENERALIZED_LOG, generalized_log_mean(alpha, beta, n), (alpha, beta), n
            )
        )
    return tuple(out)


_MEANS_MATCH_TOL = 1e-10


def check_prop31(
    a: float,
    b: float,
    n: int,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> BoundReport:
    """Monomial special-means instance of the linear-weight closed-form bound.

    The left side is the Simpson defect of x^n on [a, b], which in means
    language is |L_n^n(a,b) - (1/3) A(a^n,b^n) - (2/3) A^n(a,b)|; both routes
    are computed and compared.  The printed form with the combination
    (1/3)[A(a^n,b^n) - A^n(a,b)] is evaluated as a secondary assertion and
    the discrepancy is recorded in the report notes rather than adopted.
    """
    if not (0.0 < a < b):
        raise DomainError(f"requires 0 < a < b, got ({a}, {b})")
    if not isinstance(n, int) or n <= 1:
        raise DomainError(f"requires integer n > 1, got {n!r}")
    iv = Interval(a, b)
    tf = monomial(n, iv)
    defect = simpson_defect(tf, iv, cfg).absolute

    ln_n = generalized_log_mean(a, b, n) ** n
    a_pow = arithmetic_mean(a**n, b**n)
    a_mid = arithmetic_mean(a, b) ** n
    means_lhs = abs(ln_n - a_pow / 3.0 - 2.0 * a_mid / 3.0)
    printed_lhs = abs(ln_n - (a_pow - a_mid) / 3.0)

    notes = [
        f"defect via quadrature {defect:.12g} vs means expression {means_lhs:.12g} "
        f"({'match' if abs(defect - means_lhs) <= _MEANS_MATCH_TOL else 'MISMATCH'})",
    ]
    if abs(printed_lhs - means_lhs) > _MEANS_MATCH_TOL:
        notes.append(
            "printed combination (1/3)[A(a^n,b^n) - A^n(a,b)] disagrees with the defect: "
            f"{printed_lhs:.12g} vs {means_lhs:.12g}"
        )
    else:
        notes.append("printed combination agrees with the defect on this instance")

    base = bound_cor_aa(tf, iv, pq, cfg)
    return _make_report(
        TheoremId.PROP31_MONOMIAL_MEANS,
        defect,
        base.rhs,
        base.hypothesis_certificates,
        notes=tuple(notes),
    )


def check_prop32(a: float, b: float, cfg: QuadratureConfig = QuadratureConfig()) -> BoundReport:
    """Reciprocal special-means instance of the constant-weight corollary.

    lhs = |mean of 1/x - 1/A(a,b)| = |1/L(a,b) - 1/A(a,b)|, computed by
    quadrature and cross-checked against the means identity; rhs =
    (b-a)(1/a^2 + 1/b^2).  The report records that the corollary's equal
    endpoint/midpoint hypothesis fails for 1/x and that the printed
    |L_n^n - A^n| form does not describe this left side.
    """
    if not (0.0 < a < b):
        raise DomainError(f"requires 0 < a < b, got ({a}, {b})")
    iv = Interval(a, b)
    tf = reciprocal_fn(iv)
    mean_int = integrate(tf.f, iv, cfg).value / iv.width
    midpoint_val = 1.0 / arithmetic_mean(a, b)
    lhs = abs(mean_int - midpoint_val)
    means_lhs = abs(1.0 / logarithmic_mean(a, b) - 1.0 / arithmetic_mean(a, b))
    rhs = iv.width * (1.0 / a**2 + 1.0 / b**2)
    notes = (
        f"quadrature lhs {lhs:.12g} vs means identity |1/L - 1/A| {means_lhs:.12g} "
        f"({'match' if abs(lhs - means_lhs) <= _MEANS_MATCH_TOL else 'MISMATCH'})",
        "equal endpoint/midpoint hypothesis fails for 1/x: "
        f"f(a)={1.0/a:.6g}, f(m)={midpoint_val:.6g}, f(b)={1.0/b:.6g}",
        "printed |L_n^n - A^n| form does not match this left side; "
        "the mean integral of 1/x is 1/L(a,b)",
    )
    return _make_report(TheoremId.PROP32_RECIPROCAL_MEANS, lhs, rhs, (), notes=notes)
