"""Deterministic adaptive quadrature with breakpoints and divergence detection.

Each panel is evaluated with a nested 7-point Gauss / 15-point Kronrod pair;
the difference of the two rules yields the panel error estimate, and the
worst panel is bisected until the global estimate meets tolerance.  Intervals
are pre-split at caller-declared breakpoints, so integrands with known kinks
are never sampled across one.

Endpoint singularities are probed by geometric panel shrinkage toward the
offending endpoint.  Two signals declare divergence:

* a panel (or running total) exceeding 1e6 times the initial whole-interval
  magnitude, which catches power singularities worse than 1/t, and
* endpoint-adjacent panel contributions failing to decay over 20 consecutive
  halvings, which catches the harmonic borderline (exponents within roughly
  0.05 of the integrable limit are reported divergent; they are out of reach
  of double precision either way).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DivergentIntegral, DomainError, NonConvergence

__all__ = [
    "Interval",
    "QuadratureConfig",
    "QuadratureResult",
    "Diverged",
    "integrate",
    "integrate_or_diverge",
]


@dataclass(frozen=True)
class Interval:
    """A finite interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise DomainError(f"interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances, subdivision budget and breakpoints for one integration."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 10_000
    breakpoints: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")
        bps = tuple(float(t) for t in self.breakpoints)
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)

    def with_breakpoints(self, *points: float) -> "QuadratureConfig":
        return QuadratureConfig(
            abs_tol=self.abs_tol,
            rel_tol=self.rel_tol,
            max_subdivisions=self.max_subdivisions,
            breakpoints=tuple(sorted(points)),
        )


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class Diverged:
    """Marker returned by integrate_or_diverge when the integral blows up."""

    reason: str


# 15 Kronrod nodes on [-1, 1] with Kronrod weights; the embedded 7-point
# Gauss rule lives on nodes 1, 3, 5, 7, 9, 11, 13.
_XGK = np.array(
    [
        -0.991455371120812639206854697526329,
        -0.949107912342758524526189684047851,
        -0.864864423359769072789712788640926,
        -0.741531185599394439863864773280788,
        -0.586087235467691130294144838258730,
        -0.405845151377397166906606412076961,
        -0.207784955007898467600689403773245,
        0.0,
        0.207784955007898467600689403773245,
        0.405845151377397166906606412076961,
        0.586087235467691130294144838258730,
        0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,
        0.949107912342758524526189684047851,
        0.991455371120812639206854697526329,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
        0.204432940075298892414161999234649,
        0.190350578064785409913256402421014,
        0.169004726639267902826583426598550,
        0.140653259715525918745189590510238,
        0.104790010322250183839876322541518,
        0.063092092629978553290700663189204,
        0.022935322010529224963732008058970,
    ]
)
_WG = np.zeros(15)
_WG[1::2] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
]

_EPS = np.finfo(float).eps
_GROWTH_FACTOR = 1e6
_STALL_DEPTH = 40
_STALL_LOOKBACK = 20
_STALL_RATIO = 0.5


class _Evaluator:
    """Calls the integrand on a node array, falling back to a scalar loop."""

    def __init__(self, f: Callable[[float], float]):
        self._f = f
        self._vectorized: bool | None = None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        if self._vectorized is not False:
            try:
                with np.errstate(all="ignore"):
                    y = np.asarray(self._f(x), dtype=float)
                if y.shape == x.shape:
                    self._vectorized = True
                    return y
                if y.shape == ():
                    self._vectorized = True
                    return np.full(x.shape, float(y))
            except Exception:
                pass
            self._vectorized = False
        out = np.empty_like(x)
        for i, xi in enumerate(x):
            try:
                out[i] = float(self._f(float(xi)))
            except (ArithmeticError, ValueError) as exc:
                raise DomainError(f"integrand not evaluable at x={xi!r}: {exc}") from exc
        return out


def _gk15(ev: _Evaluator, lo: float, hi: float) -> tuple[float, float, float]:
    """One Gauss-Kronrod panel: (value, error estimate, resabs)."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center + half * _XGK
    y = ev(x)
    bad = ~np.isfinite(y)
    if bad.any():
        raise DomainError(f"integrand not finite at x={x[bad][0]!r}")
    kron = half * float(y @ _WGK)
    gauss = half * float(y @ _WG)
    resabs = half * float(np.abs(y) @ _WGK)
    mean = kron / (hi - lo)
    resasc = half * float(np.abs(y - mean) @ _WGK)
    err = abs(kron - gauss)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > np.finfo(float).tiny / (50.0 * _EPS):
        err = max(err, 50.0 * _EPS * resabs)
    return kron, float(err), resabs


@dataclass(order=True)
class _Panel:
    neg_err: float
    seq: int
    lo: float = 0.0
    hi: float = 0.0
    value: float = 0.0
    err: float = 0.0
    segment: int = 0
    left_depth: int = -1  # bisections since the segment's left edge; -1 if detached
    right_depth: int = -1


def _presplit(iv: Interval, cfg: QuadratureConfig) -> list[tuple[float, float]]:
    for t in cfg.breakpoints:
        if not iv.a < t < iv.b:
            raise DomainError(f"breakpoint {t} not strictly inside ({iv.a}, {iv.b})")
    cuts = [iv.a, *cfg.breakpoints, iv.b]
    return list(zip(cuts, cuts[1:]))


def integrate(f: Callable[[float], float], iv: Interval, cfg: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """Integrate f over iv to max(abs_tol, rel_tol * |value|).

    Raises NonConvergence when the subdivision budget runs out, DomainError
    when the integrand is not finite at an interior node, and
    DivergentIntegral when panel estimates grow without bound.
    """
    ev = _Evaluator(f)
    heap: list[_Panel] = []
    seq = 0
    evaluations = 0
    total_val = 0.0
    total_err = 0.0
    scale0 = 0.0

    for si, (lo, hi) in enumerate(_presplit(iv, cfg)):
        val, err, resabs = _gk15(ev, lo, hi)
        evaluations += 15
        heapq.heappush(heap, _Panel(-err, seq, lo, hi, val, err, si, 0, 0))
        seq += 1
        total_val += val
        total_err += err
        scale0 += resabs
    scale0 = max(scale0, np.finfo(float).tiny)

    # |value| of the panel hugging each (segment, side), indexed by depth.
    adjacency: dict[tuple[int, int], list[float]] = {}
    frozen_val = 0.0
    frozen_err = 0.0
    subdivisions = 0

    def _tolerance() -> float:
        return max(cfg.abs_tol, cfg.rel_tol * abs(total_val + frozen_val))

    while heap and total_err + frozen_err > _tolerance():
        if subdivisions >= cfg.max_subdivisions:
            raise NonConvergence(
                f"error {total_err + frozen_err:.3e} above tolerance {_tolerance():.3e} "
                f"after {subdivisions} subdivisions"
            )
        panel = heapq.heappop(heap)
        mid = 0.5 * (panel.lo + panel.hi)
        if not panel.lo < mid < panel.hi:
            # Machine-width panel: freeze it and move on.
            total_val -= panel.value
            total_err -= panel.err
            frozen_val += panel.value
            frozen_err += panel.err
            continue
        subdivisions += 1
        lval, lerr, _ = _gk15(ev, panel.lo, mid)
        rval, rerr, _ = _gk15(ev, mid, panel.hi)
        evaluations += 30
        total_val += lval + rval - panel.value
        total_err += lerr + rerr - panel.err

        if abs(lval) > _GROWTH_FACTOR * scale0 or abs(rval) > _GROWTH_FACTOR * scale0:
            raise DivergentIntegral(
                f"panel estimate exceeds {_GROWTH_FACTOR:.0e} x initial magnitude near x={mid!r}"
            )
        if abs(total_val) > _GROWTH_FACTOR * scale0:
            raise DivergentIntegral(f"running total exceeds {_GROWTH_FACTOR:.0e} x initial magnitude")

        left = _Panel(-lerr, seq, panel.lo, mid, lval, lerr, panel.segment,
                      panel.left_depth + 1 if panel.left_depth >= 0 else -1, -1)
        seq += 1
        right = _Panel(-rerr, seq, mid, panel.hi, rval, rerr, panel.segment,
                       -1, panel.right_depth + 1 if panel.right_depth >= 0 else -1)
        seq += 1
        for child, side, depth in ((left, 0, left.left_depth), (right, 1, right.right_depth)):
            if depth >= 0:
                hist = adjacency.setdefault((child.segment, side), [])
                while len(hist) <= depth:
                    hist.append(0.0)
                hist[depth] = abs(child.value)
                if depth >= _STALL_DEPTH:
                    prev = hist[depth - _STALL_LOOKBACK]
                    if abs(child.value) > cfg.abs_tol and abs(child.value) >= _STALL_RATIO * prev:
                        edge = child.lo if side == 0 else child.hi
                        raise DivergentIntegral(
                            f"endpoint-adjacent contributions near x={edge!r} do not decay"
                        )
            heapq.heappush(heap, child)

    return QuadratureResult(total_val + frozen_val, total_err + frozen_err, evaluations)


def integrate_or_diverge(
    f: Callable[[float], float], iv: Interval, cfg: QuadratureConfig = QuadratureConfig()
) -> Union[QuadratureResult, Diverged]:
    """Like integrate, but returns a Diverged marker instead of raising on blow-up."""
    try:
        return integrate(f, iv, cfg)
    except DivergentIntegral as exc:
        return Diverged(str(exc))
