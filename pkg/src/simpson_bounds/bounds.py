"""Right-hand sides of the Simpson-defect inequalities and bound reports.

Every evaluator certifies its hypotheses on a grid, computes both sides of
the inequality, and packages the comparison in a BoundReport.  Hypothesis
checking is advisory-but-recorded: a refuted certificate marks the report
not applicable, but the numbers are still computed so falsification
campaigns can demonstrate hypothesis necessity.  Divergent weight integrals
(the Godunova-Levin weight 1/t) also mark reports not applicable instead of
aborting.

Certification and weight-integral results are memoized on their frozen
inputs; campaigns over large grids re-pay only the first evaluation of each
(function, weight, interval) combination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DomainError, HypothesisError
from .kernel import simpson_defect
from .quadrature import (
    Diverged,
    Interval,
    QuadratureConfig,
    integrate,
    integrate_or_diverge,
)
from .registry import (
    Certificate,
    ClassName,
    ConjugatePair,
    HFunction,
    TestFunction,
    certify_class,
    certify_h_concave,
    certify_h_convex,
    certify_h_geq_alpha,
    certify_supermultiplicative,
    identity_h,
)

__all__ = [
    "TheoremId",
    "BoundReport",
    "TheoremABIntegrals",
    "HermiteHadamardChain",
    "theorem_ab_integrals",
    "thm22_rhs_value",
    "bound_thm22",
    "bound_cor23",
    "bound_cor24",
    "bound_cor_aa",
    "bound_thm25",
    "bound_cor_bb",
    "bound_thm28",
    "bound_cor29",
    "bound_sarikaya_eq_b",
    "bound_hh_eq102",
    "DOMINANCE_SLACK",
]

# Margins above -DOMINANCE_SLACK count as the inequality holding; the two
# sides each carry independent quadrature error around 1e-10.
DOMINANCE_SLACK = 1e-8

DEFAULT_CERT_GRID = 64
DEFAULT_CERT_TOL = 1e-9

# Shared instance so memoized certificates keyed on the weight object hit.
_IDENTITY_H = identity_h()


class TheoremId(Enum):
    HH_EQ102 = "hh"
    SARIKAYA_EQ_B = "sarikaya_b"
    THM22_EQ_A = "thm22"
    COR23_P2Q2 = "cor23"
    COR24_EQUAL_ENDPOINTS = "cor24"
    COR_AA_LINEAR_WEIGHT = "cor_aa"
    THM25_PRODUCT_WEIGHT = "thm25"
    COR_BB_CONSTANT_WEIGHT = "cor_bb"
    THM28_HCONCAVE = "thm28"
    COR29_LINEAR_WEIGHT = "cor29"
    PROP31_MONOMIAL_MEANS = "prop31"
    PROP32_RECIPROCAL_MEANS = "prop32"


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance: both sides, margin, applicability, provenance."""

    theorem_id: TheoremId
    lhs: Optional[float]
    rhs: Optional[float]
    applicable: bool
    margin: Optional[float] = None
    inapplicability_reason: Optional[str] = None
    hypothesis_certificates: tuple[Certificate, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def hypotheses_refuted(self) -> bool:
        return any(c.refuted for c in self.hypothesis_certificates)

    @property
    def raw_margin(self) -> Optional[float]:
        """rhs - lhs whenever both sides exist, applicable or not."""
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs


def _make_report(
    theorem_id: TheoremId,
    lhs: Optional[float],
    rhs: Optional[float],
    certs: tuple[Certificate, ...],
    reason: Optional[str] = None,
    notes: tuple[str, ...] = (),
) -> BoundReport:
    refuted = any(c.refuted for c in certs)
    applicable = reason is None and not refuted and lhs is not None and rhs is not None
    if reason is None and refuted:
        bad = ", ".join(f"{c.class_name.value}({c.subject})" for c in certs if c.refuted)
        reason = f"hypothesis refuted: {bad}"
    margin = rhs - lhs if applicable else None
    return BoundReport(theorem_id, lhs, rhs, applicable, margin, reason, certs, notes)


@dataclass(frozen=True)
class TheoremABIntegrals:
    """The endpoint-weight integrals of the product-weight bound."""

    A: float
    B: float


@dataclass(frozen=True)
class HermiteHadamardChain:
    """The two-sided mean-value chain for an h-convex function."""

    left: Optional[float]
    middle: Optional[float]
    right: Optional[float]
    holds: Optional[bool]
    applicable: bool
    inapplicability_reason: Optional[str] = None
    hypothesis_certificates: tuple[Certificate, ...] = ()


class _Named:
    """Give an anonymous callable a stable name for certificate subjects."""

    __slots__ = ("_fn", "__name__")

    def __init__(self, fn, name: str):
        self._fn = fn
        self.__name__ = name

    def __call__(self, x):
        return self._fn(x)


def _abs_prime(tf: TestFunction) -> _Named:
    fp = tf.f_prime
    return _Named(lambda x: np.abs(fp(x)), f"|{tf.name}'|")


def _endpoint_derivs(tf: TestFunction, iv: Interval) -> tuple[float, float]:
    return abs(float(tf.f_prime(iv.a))), abs(float(tf.f_prime(iv.b)))


# ---------------------------------------------------------------------------
# Memoized hypothesis certificates and weight integrals.  All arguments are
# immutable, so the caches are transparent.

@lru_cache(maxsize=None)
def _cert_prime_h_convex(tf: TestFunction, h: HFunction, iv: Interval, grid: int, tol: float):
    return certify_h_convex(_abs_prime(tf), h, iv, grid, tol)


@lru_cache(maxsize=None)
def _cert_prime_h_concave(tf: TestFunction, h: HFunction, iv: Interval, grid: int, tol: float):
    return certify_h_concave(_abs_prime(tf), h, iv, grid, tol)


@lru_cache(maxsize=None)
def _cert_prime_class(tf: TestFunction, cls: ClassName, iv: Interval, grid: int, tol: float):
    return certify_class(_abs_prime(tf), cls, iv, grid, tol)


@lru_cache(maxsize=None)
def _cert_self_h_convex(tf: TestFunction, h: HFunction, iv: Interval, grid: int, tol: float):
    return certify_h_convex(tf, h, iv, grid, tol)


@lru_cache(maxsize=None)
def _cert_supermult(h: HFunction, grid: int, tol: float):
    return certify_supermultiplicative(h, grid, tol)


@lru_cache(maxsize=None)
def _cert_geq_alpha(h: HFunction, grid: int, tol: float):
    return certify_h_geq_alpha(h, grid, tol)


@lru_cache(maxsize=None)
def _defect_abs(tf: TestFunction, iv: Interval, cfg: QuadratureConfig) -> float:
    return simpson_defect(tf, iv, cfg).absolute


@lru_cache(maxsize=None)
def _mean_value(tf: TestFunction, iv: Interval, cfg: QuadratureConfig) -> float:
    return integrate(tf.f, iv, cfg).value / iv.width


@lru_cache(maxsize=None)
def _hq_integrals(h: HFunction, q: float, cfg: QuadratureConfig):
    """Integrals of h(t)^q and h(1-t)^q over [0,1/2] and [1/2,1]; None if any diverges."""
    hq = lambda t: h.eval(np.asarray(t, dtype=float)) ** q
    hq_flip = lambda t: h.eval(1.0 - np.asarray(t, dtype=float)) ** q
    parts = (
        integrate_or_diverge(hq, Interval(0.0, 0.5), cfg),
        integrate_or_diverge(hq, Interval(0.5, 1.0), cfg),
        integrate_or_diverge(hq_flip, Interval(0.0, 0.5), cfg),
        integrate_or_diverge(hq_flip, Interval(0.5, 1.0), cfg),
    )
    if any(isinstance(r, Diverged) for r in parts):
        return None
    return tuple(r.value for r in parts)


@lru_cache(maxsize=None)
def _squared_arg_integrals(h: HFunction, cfg: QuadratureConfig):
    """Integrals of h(t^2) and h((1-t)^2) over the half-intervals; None on divergence."""
    f1 = lambda t: h.eval(np.asarray(t, dtype=float) ** 2)
    f2 = lambda t: h.eval((1.0 - np.asarray(t, dtype=float)) ** 2)
    parts = (
        integrate_or_diverge(f1, Interval(0.0, 0.5), cfg),
        integrate_or_diverge(f1, Interval(0.5, 1.0), cfg),
        integrate_or_diverge(f2, Interval(0.0, 0.5), cfg),
        integrate_or_diverge(f2, Interval(0.5, 1.0), cfg),
    )
    if any(isinstance(r, Diverged) for r in parts):
        return None
    return tuple(r.value for r in parts)


@lru_cache(maxsize=None)
def _unit_weight_integral(h: HFunction, cfg: QuadratureConfig):
    """Integral of h over (0, 1); None on divergence."""
    r = integrate_or_diverge(h.eval, Interval(0.0, 1.0), cfg)
    return None if isinstance(r, Diverged) else r.value


_AB_PIECES = (
    (0.0, 1.0 / 6.0, lambda t: 1.0 / 6.0 - t),
    (1.0 / 6.0, 0.5, lambda t: t - 1.0 / 6.0),
    (0.5, 5.0 / 6.0, lambda t: 5.0 / 6.0 - t),
    (5.0 / 6.0, 1.0, lambda t: t - 5.0 / 6.0),
)


@lru_cache(maxsize=None)
def _ab_integrals(h: HFunction, cfg: QuadratureConfig) -> TheoremABIntegrals:
    a_total = 0.0
    b_total = 0.0
    for lo, hi, kabs in _AB_PIECES:
        fa = lambda t, _k=kabs: h.eval(
            np.maximum(np.asarray(t, dtype=float) * _k(np.asarray(t, dtype=float)), 0.0)
        )
        fb = lambda t, _k=kabs: h.eval(
            np.maximum((1.0 - np.asarray(t, dtype=float)) * _k(np.asarray(t, dtype=float)), 0.0)
        )
        a_total += integrate(fa, Interval(lo, hi), cfg).value
        b_total += integrate(fb, Interval(lo, hi), cfg).value
    return TheoremABIntegrals(a_total, b_total)


def theorem_ab_integrals(
    h: HFunction, cfg: QuadratureConfig = QuadratureConfig()
) -> TheoremABIntegrals:
    """Four-piece integrals of h(t*|k(t)|) and h((1-t)*|k(t)|).

    The product arguments vanish at the piece endpoints, so h must be
    evaluable at 0; arguments are clamped at 0 against rounding.
    """
    if h.singular_at_0:
        raise DomainError(f"{h.name} is singular at 0; product-weight integrals undefined")
    return _ab_integrals(h, cfg)


# ---------------------------------------------------------------------------
# Bound evaluators.

def thm22_rhs_value(
    da: float,
    db: float,
    h: HFunction,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> Optional[float]:
    """Unit-width Holder-split right side from endpoint derivative magnitudes:

        (1/3) ((1+2^(p+1))/(6(p+1)))^(1/p)
            * { da * [I1^(1/q) + I2^(1/q)] + db * [I3^(1/q) + I4^(1/q)] }

    with I1, I2 the integrals of h(t)^q over the two half-intervals and I3,
    I4 those of h(1-t)^q.  The caller multiplies by the interval width.
    Returns None when any weight integral diverges.  The right side is
    affine in (da, db) with nonnegative coefficients.
    """
    p, q = pq.p, pq.q
    parts = _hq_integrals(h, q, cfg)
    if parts is None:
        return None
    i1, i2, i3, i4 = parts
    kernel_factor = ((1.0 + 2.0 ** (p + 1.0)) / (6.0 * (p + 1.0))) ** (1.0 / p)
    bracket_a = i1 ** (1.0 / q) + i2 ** (1.0 / q)
    bracket_b = i3 ** (1.0 / q) + i4 ** (1.0 / q)
    return (kernel_factor / 3.0) * (da * bracket_a + db * bracket_b)


def bound_thm22(
    tf: TestFunction,
    h: HFunction,
    iv: Interval,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Defect bound for |f'| h-convex, any conjugate pair (p, q)."""
    certs = (
        _cert_prime_h_convex(tf, h, iv, cert_grid, cert_tol),
        _cert_geq_alpha(h, cert_grid, cert_tol),
    )
    lhs = _defect_abs(tf, iv, cfg)
    da, db = _endpoint_derivs(tf, iv)
    unit = thm22_rhs_value(da, db, h, pq, cfg)
    if unit is None:
        return _make_report(TheoremId.THM22_EQ_A, lhs, None, certs, "divergent h^q integral")
    return _make_report(TheoremId.THM22_EQ_A, lhs, iv.width * unit, certs)


def bound_cor23(
    tf: TestFunction,
    h: HFunction,
    iv: Interval,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """p = q = 2 bound with the squared arguments pushed inside a
    supermultiplicative weight:

        rhs = ((b-a)/(3 sqrt 2)) { |f'(a)| [J1^(1/2) + J2^(1/2)]
                                 + |f'(b)| [J3^(1/2) + J4^(1/2)] }

    where J1..J4 integrate h(t^2) and h((1-t)^2) over the half-intervals.
    For a multiplicative weight this equals the general bound at p = q = 2.
    """
    certs = (
        _cert_prime_h_convex(tf, h, iv, cert_grid, cert_tol),
        _cert_supermult(h, cert_grid, cert_tol),
    )
    lhs = _defect_abs(tf, iv, cfg)
    parts = _squared_arg_integrals(h, cfg)
    if parts is None:
        return _make_report(TheoremId.COR23_P2Q2, lhs, None, certs, "divergent h(t^2) integral")
    j1, j2, j3, j4 = parts
    da, db = _endpoint_derivs(tf, iv)
    rhs = (iv.width / (3.0 * math.sqrt(2.0))) * (
        da * (math.sqrt(j1) + math.sqrt(j2)) + db * (math.sqrt(j3) + math.sqrt(j4))
    )
    return _make_report(TheoremId.COR23_P2Q2, lhs, rhs, certs)


def _check_equal_endpoints(tf: TestFunction, iv: Interval) -> float:
    fa = float(tf.f(iv.a))
    fb = float(tf.f(iv.b))
    fm = float(tf.f(iv.midpoint))
    tol = 1e-9 * (1.0 + abs(fm))
    if abs(fa - fm) > tol or abs(fb - fm) > tol:
        raise HypothesisError(
            f"{tf.name}: requires f(a) = f((a+b)/2) = f(b), got {fa:.6g}, {fm:.6g}, {fb:.6g}"
        )
    return fm


def bound_cor24(
    tf: TestFunction,
    iv: Interval,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Midpoint-deviation bound for equal endpoint/midpoint values and |f'|
    a P-function (constant weight):

        rhs = ((b-a)/3) ((1+2^(p+1))/(3(p+1)))^(1/p) (|f'(a)| + |f'(b)|)
    """
    fm = _check_equal_endpoints(tf, iv)
    certs = (_cert_prime_class(tf, ClassName.P_FUNCTION, iv, cert_grid, cert_tol),)
    da, db = _endpoint_derivs(tf, iv)
    lhs = abs(_mean_value(tf, iv, cfg) - fm)
    p = pq.p
    rhs = (iv.width / 3.0) * ((1.0 + 2.0 ** (p + 1.0)) / (3.0 * (p + 1.0))) ** (1.0 / p) * (da + db)
    return _make_report(TheoremId.COR24_EQUAL_ENDPOINTS, lhs, rhs, certs)


def bound_cor_aa(
    tf: TestFunction,
    iv: Interval,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Closed-form specialization of the Holder-split bound to the linear
    weight h(t) = t (|f'| convex):

        rhs = ((b-a)/6) ((1+2^(p+1))/(3(p+1)))^(1/p) (1/(q+1))^(1/q)
              * [1/2 + (2 - (1/2)^q)^(1/q)] * (|f'(a)| + |f'(b)|)

    The closed-form half-integrals of t^q and (1-t)^q swap places between
    the two endpoints, so their bracket sum is the same for both and the
    endpoint-weight factor multiplies |f'(a)| + |f'(b)| symmetrically.
    """
    certs = (_cert_prime_class(tf, ClassName.CONVEX, iv, cert_grid, cert_tol),)
    lhs = _defect_abs(tf, iv, cfg)
    da, db = _endpoint_derivs(tf, iv)
    p, q = pq.p, pq.q
    rhs = (
        (iv.width / 6.0)
        * ((1.0 + 2.0 ** (p + 1.0)) / (3.0 * (p + 1.0))) ** (1.0 / p)
        * (1.0 / (q + 1.0)) ** (1.0 / q)
        * (0.5 + (2.0 - 0.5**q) ** (1.0 / q))
        * (da + db)
    )
    return _make_report(TheoremId.COR_AA_LINEAR_WEIGHT, lhs, rhs, certs)


def bound_thm25(
    tf: TestFunction,
    h: HFunction,
    iv: Interval,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Product-weight bound rhs = (b-a) (|f'(a)| A + |f'(b)| B) with the
    kernel magnitude pushed inside the supermultiplicative weight."""
    certs = (
        _cert_prime_h_convex(tf, h, iv, cert_grid, cert_tol),
        _cert_supermult(h, cert_grid, cert_tol),
        _cert_geq_alpha(h, cert_grid, cert_tol),
    )
    lhs = _defect_abs(tf, iv, cfg)
    if h.singular_at_0:
        return _make_report(
            TheoremId.THM25_PRODUCT_WEIGHT,
            lhs,
            None,
            certs,
            "h undefined at 0: kernel-weight products vanish at piece endpoints",
        )
    ab = _ab_integrals(h, cfg)
    da, db = _endpoint_derivs(tf, iv)
    rhs = iv.width * (da * ab.A + db * ab.B)
    return _make_report(TheoremId.THM25_PRODUCT_WEIGHT, lhs, rhs, certs)


def bound_cor_bb(
    tf: TestFunction,
    iv: Interval,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Constant-weight corollary of the product-weight bound under equal
    endpoint/midpoint values: rhs = (b-a) (|f'(a)| + |f'(b)|)."""
    fm = _check_equal_endpoints(tf, iv)
    certs = (_cert_prime_class(tf, ClassName.P_FUNCTION, iv, cert_grid, cert_tol),)
    da, db = _endpoint_derivs(tf, iv)
    lhs = abs(_mean_value(tf, iv, cfg) - fm)
    rhs = iv.width * (da + db)
    return _make_report(TheoremId.COR_BB_CONSTANT_WEIGHT, lhs, rhs, certs)


def bound_thm28(
    tf: TestFunction,
    h: HFunction,
    iv: Interval,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Midpoint-derivative bound for |f'| h-concave:

        rhs = ((b-a)/12) ((2+2^(p+2))/(p+1))^(1/p) (1/h(1/2))^(1/q) |f'(m)|
    """
    h_half = float(h.eval(np.array(0.5)))
    if not h_half > 0.0:
        raise DomainError(f"{h.name}(1/2) = {h_half} must be positive")
    certs = (_cert_prime_h_concave(tf, h, iv, cert_grid, cert_tol),)
    lhs = _defect_abs(tf, iv, cfg)
    dm = abs(float(tf.f_prime(iv.midpoint)))
    p, q = pq.p, pq.q
    rhs = (
        (iv.width / 12.0)
        * ((2.0 + 2.0 ** (p + 2.0)) / (p + 1.0)) ** (1.0 / p)
        * (1.0 / h_half) ** (1.0 / q)
        * dm
    )
    return _make_report(TheoremId.THM28_HCONCAVE, lhs, rhs, certs)


def bound_cor29(
    tf: TestFunction,
    iv: Interval,
    pq: ConjugatePair,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Linear-weight form of the h-concave bound:

        rhs = ((b-a)/6) ((1+2^(p+1))/(p+1))^(1/p) |f'(m)|
    """
    certs = (_cert_prime_h_concave(tf, _IDENTITY_H, iv, cert_grid, cert_tol),)
    lhs = _defect_abs(tf, iv, cfg)
    dm = abs(float(tf.f_prime(iv.midpoint)))
    p = pq.p
    rhs = (iv.width / 6.0) * ((1.0 + 2.0 ** (p + 1.0)) / (p + 1.0)) ** (1.0 / p) * dm
    return _make_report(TheoremId.COR29_LINEAR_WEIGHT, lhs, rhs, certs)


def bound_sarikaya_eq_b(
    tf: TestFunction,
    iv: Interval,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
) -> BoundReport:
    """Convex-|f'| defect bound rhs = 5(b-a)/72 * (|f'(a)| + |f'(b)|)."""
    certs = (_cert_prime_class(tf, ClassName.CONVEX, iv, cert_grid, cert_tol),)
    lhs = _defect_abs(tf, iv, cfg)
    da, db = _endpoint_derivs(tf, iv)
    rhs = 5.0 * iv.width / 72.0 * (da + db)
    return _make_report(TheoremId.SARIKAYA_EQ_B, lhs, rhs, certs)


def bound_hh_eq102(
    fn,
    h: HFunction,
    iv: Interval,
    cfg: QuadratureConfig = QuadratureConfig(),
    cert_grid: int = DEFAULT_CERT_GRID,
    cert_tol: float = DEFAULT_CERT_TOL,
    tol: float = DOMINANCE_SLACK,
) -> HermiteHadamardChain:
    """Two-sided mean-value chain for an h-convex function:

        f(m) / (2 h(1/2))  <=  (1/(b-a)) integral(f)  <=  (f(a)+f(b)) integral_0^1 h

    Accepts a TestFunction (certifying f itself) or a raw nonnegative
    function.  A divergent weight integral or h(1/2) <= 0 yields an
    inapplicable chain instead of raising.
    """
    if isinstance(fn, TestFunction):
        f = fn.f
        certs = (_cert_self_h_convex(fn, h, iv, cert_grid, cert_tol),)
    else:
        f = fn
        certs = (certify_h_convex(fn, h, iv, cert_grid, cert_tol),)
    h_half = float(h.eval(np.array(0.5)))
    if not h_half > 0.0:
        return HermiteHadamardChain(
            None, None, None, None, False, f"{h.name}(1/2) = {h_half} not positive", certs
        )
    h_int = _unit_weight_integral(h, cfg)
    if h_int is None:
        return HermiteHadamardChain(
            None, None, None, None, False, "divergent weight integral over (0, 1)", certs
        )
    middle = (
        _mean_value(fn, iv, cfg)
        if isinstance(fn, TestFunction)
        else integrate(f, iv, cfg).value / iv.width
    )
    left = float(f(iv.midpoint)) / (2.0 * h_half)
    right = (float(f(iv.a)) + float(f(iv.b))) * h_int
    refuted = any(c.refuted for c in certs)
    holds = (left <= middle + tol) and (middle <= right + tol)
    return HermiteHadamardChain(
        left,
        middle,
        right,
        holds,
        not refuted,
        "hypothesis refuted: h-convexity" if refuted else None,
        certs,
    )
