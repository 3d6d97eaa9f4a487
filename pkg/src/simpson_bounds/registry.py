"""Weight functions, test functions and grid certification of function classes.

The certifiers check a defining inequality of the form

    f(t*x + (1-t)*y)  <=  w(t) * f(x) + w(1-t) * f(y)

(or its reverse) on a uniform grid of (x, y, t) triples and return a
Certificate.  A grid check can refute membership with a concrete witness but
can only certify it *on the grid*; the verdict names keep that distinction
explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import DomainError, NegativityError
from .quadrature import Interval

__all__ = [
    "HFamily",
    "HFunction",
    "TestFunction",
    "ConjugatePair",
    "ClassName",
    "Verdict",
    "Certificate",
    "identity_h",
    "constant_h",
    "reciprocal_h",
    "power_h",
    "builtin_h_catalog",
    "resolve_h",
    "monomial",
    "exp_scaled",
    "sine",
    "sqrt_fn",
    "reciprocal_fn",
    "resolve_family",
    "certify_h_convex",
    "certify_h_concave",
    "certify_class",
    "certify_supermultiplicative",
    "certify_h_geq_alpha",
    "class_violation",
    "supermultiplicative_violation",
    "h_geq_alpha_violation",
]

DEFAULT_GRID = 64
DEFAULT_TOL = 1e-9


class HFamily(Enum):
    IDENTITY = "identity"
    CONSTANT = "constant"
    RECIPROCAL = "reciprocal"
    POWER = "power"
    CUSTOM = "custom"


@dataclass(frozen=True)
class HFunction:
    """A nonnegative weight function on (0, 1)."""

    name: str
    eval: Callable[[np.ndarray], np.ndarray]
    family: HFamily
    s: Optional[float] = None
    singular_at_0: bool = False
    singular_at_1: bool = False

    def __post_init__(self) -> None:
        if self.family is HFamily.POWER:
            if self.s is None or not 0.0 < self.s <= 1.0:
                raise DomainError(f"power family requires s in (0, 1], got {self.s}")


def identity_h() -> HFunction:
    return HFunction("identity", lambda t: np.asarray(t, dtype=float), HFamily.IDENTITY)


def constant_h() -> HFunction:
    return HFunction(
        "constant", lambda t: np.ones_like(np.asarray(t, dtype=float)), HFamily.CONSTANT
    )


def reciprocal_h() -> HFunction:
    return HFunction(
        "reciprocal",
        lambda t: 1.0 / np.asarray(t, dtype=float),
        HFamily.RECIPROCAL,
        singular_at_0=True,
    )


def power_h(s: float) -> HFunction:
    """t**s weight.  s in (0, 1] is the s-convexity regime; larger exponents
    are allowed as custom weights (they violate h(a) >= a and exist to
    demonstrate hypothesis necessity)."""
    if not s > 0:
        raise DomainError(f"power exponent must be positive, got {s}")
    name = f"power:{s:g}"
    fn = lambda t, _s=float(s): np.asarray(t, dtype=float) ** _s
    if s <= 1.0:
        return HFunction(name, fn, HFamily.POWER, s=float(s))
    return HFunction(name, fn, HFamily.CUSTOM, s=float(s))


def builtin_h_catalog(powers: Iterable[float] = ()) -> tuple[HFunction, ...]:
    """Identity, Constant, Reciprocal, plus Power(s) for each requested s."""
    return (identity_h(), constant_h(), reciprocal_h(), *(power_h(s) for s in powers))


def resolve_h(spec: str) -> HFunction:
    """Parse a weight-family spec: identity | constant | reciprocal | power:s."""
    kind, _, arg = spec.partition(":")
    if kind == "identity":
        return identity_h()
    if kind == "constant":
        return constant_h()
    if kind == "reciprocal":
        return reciprocal_h()
    if kind == "power":
        try:
            return power_h(float(arg))
        except ValueError as exc:
            raise DomainError(f"bad power spec {spec!r}") from exc
    raise DomainError(f"unknown h family {spec!r}")


@dataclass(frozen=True)
class TestFunction:
    """A differentiable function with its declared derivative.

    The derivative is validated against centered finite differences at 50
    interior points when the object is constructed, so bound evaluators can
    trust pointwise f_prime values.
    """

    name: str
    f: Callable[[np.ndarray], np.ndarray]
    f_prime: Callable[[np.ndarray], np.ndarray]
    domain: Interval
    notes: str = ""

    def __post_init__(self) -> None:
        _validate_derivative(self.f, self.f_prime, self.domain, self.name)


def _validate_derivative(f, f_prime, domain: Interval, name: str) -> None:
    xs = np.linspace(domain.a, domain.b, 52)[1:-1]
    eps = 1e-6 * domain.width
    fd = (_eval(f, xs + eps) - _eval(f, xs - eps)) / (2.0 * eps)
    fp = _eval(f_prime, xs)
    bad = np.abs(fp - fd) > 1e-6 * (1.0 + np.abs(fp))
    if bad.any():
        i = int(np.argmax(bad))
        raise ValueError(
            f"{name}: declared derivative {fp[i]:.9g} disagrees with finite "
            f"difference {fd[i]:.9g} at x={xs[i]:.9g}"
        )


@dataclass(frozen=True)
class ConjugatePair:
    """Holder-conjugate exponents with 1/p + 1/q = 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1.0 and self.q > 1.0):
            raise DomainError(f"conjugate exponents must exceed 1, got p={self.p}, q={self.q}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise DomainError(f"1/p + 1/q must equal 1, got p={self.p}, q={self.q}")

    @classmethod
    def from_p(cls, p: float) -> "ConjugatePair":
        if not p > 1.0:
            raise DomainError(f"p must exceed 1, got {p}")
        return cls(float(p), p / (p - 1.0))


# ---------------------------------------------------------------------------
# Built-in test-function families.

def monomial(n: int, domain: Interval) -> TestFunction:
    if n < 0:
        raise DomainError(f"monomial degree must be nonnegative, got {n}")
    f = lambda x, _n=n: np.asarray(x, dtype=float) ** _n
    if n == 0:
        fp = lambda x: np.zeros_like(np.asarray(x, dtype=float))
    else:
        fp = lambda x, _n=n: _n * np.asarray(x, dtype=float) ** (_n - 1)
    return TestFunction(f"monomial:{n}", f, fp, domain)


def exp_scaled(k: float, domain: Interval) -> TestFunction:
    f = lambda x, _k=k: np.exp(_k * np.asarray(x, dtype=float))
    fp = lambda x, _k=k: _k * np.exp(_k * np.asarray(x, dtype=float))
    return TestFunction(f"exp:{k:g}", f, fp, domain)


def sine(omega: float, phase: float = 0.0, domain: Interval = Interval(0.0, 1.0)) -> TestFunction:
    f = lambda x, _w=omega, _p=phase: np.sin(_w * np.asarray(x, dtype=float) + _p)
    fp = lambda x, _w=omega, _p=phase: _w * np.cos(_w * np.asarray(x, dtype=float) + _p)
    name = f"sin:{omega:g}" if phase == 0.0 else f"sin:{omega:g}:{phase:g}"
    return TestFunction(name, f, fp, domain)


def sqrt_fn(domain: Interval) -> TestFunction:
    if domain.a < 0:
        raise DomainError("sqrt requires a nonnegative interval")
    f = lambda x: np.sqrt(np.asarray(x, dtype=float))
    fp = lambda x: 0.5 / np.sqrt(np.asarray(x, dtype=float))
    return TestFunction("sqrt", f, fp, domain)


def reciprocal_fn(domain: Interval) -> TestFunction:
    if domain.a <= 0:
        raise DomainError("reciprocal requires a strictly positive interval")
    f = lambda x: 1.0 / np.asarray(x, dtype=float)
    fp = lambda x: -1.0 / np.asarray(x, dtype=float) ** 2
    return TestFunction("reciprocal", f, fp, domain)


def resolve_family(spec: str, domain: Interval) -> TestFunction:
    """Parse a test-function spec: monomial:n | exp:k | sin:w[:phase] | sqrt | reciprocal."""
    parts = spec.split(":")
    kind, args = parts[0], parts[1:]
    try:
        if kind == "monomial" and len(args) == 1:
            return monomial(int(args[0]), domain)
        if kind == "exp" and len(args) == 1:
            return exp_scaled(float(args[0]), domain)
        if kind == "sin" and len(args) in (1, 2):
            phase = float(args[1]) if len(args) == 2 else 0.0
            return sine(float(args[0]), phase, domain)
        if kind == "sqrt" and not args:
            return sqrt_fn(domain)
        if kind == "reciprocal" and not args:
            return reciprocal_fn(domain)
    except ValueError as exc:
        raise DomainError(f"bad function spec {spec!r}") from exc
    raise DomainError(f"unknown function family {spec!r}")


# ---------------------------------------------------------------------------
# Certification.

class ClassName(Enum):
    CONVEX = "convex"
    H_CONVEX = "h_convex"
    H_CONCAVE = "h_concave"
    GODUNOVA_LEVIN = "godunova_levin"
    P_FUNCTION = "p_function"
    S_CONVEX = "s_convex"
    SUPERMULTIPLICATIVE = "supermultiplicative"
    H_GEQ_ALPHA = "h_geq_alpha"


class Verdict(Enum):
    CERTIFIED_ON_GRID = "certified_on_grid"
    REFUTED_WITH_WITNESS = "refuted_with_witness"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    """Outcome of a grid check of one defining inequality.

    For combination classes the witness is (x, y, t); for
    supermultiplicativity it is (x, y); for the h(a) >= a check it is (t,).
    """

    class_name: ClassName
    verdict: Verdict
    witness: Optional[tuple[float, ...]]
    grid_density: int
    tolerance: float
    violation: Optional[float] = None
    subject: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_ON_GRID

    @property
    def refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED_WITH_WITNESS


def _eval(fn: Callable, x: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        try:
            y = np.asarray(fn(x), dtype=float)
        except Exception:
            y = np.array([_eval_scalar(fn, xi) for xi in np.ravel(x)]).reshape(np.shape(x))
    if y.shape != np.shape(x):
        y = np.broadcast_to(y, np.shape(x)).astype(float)
    return y


def _eval_scalar(fn: Callable, x: float) -> float:
    try:
        return float(fn(float(x)))
    except (ArithmeticError, ValueError):
        return math.nan


def _as_callable(fn) -> Callable:
    # Accepts a raw callable, a TestFunction, or an HFunction.
    if isinstance(fn, TestFunction):
        return fn.f
    if isinstance(fn, HFunction):
        return fn.eval
    return fn


def _subject_name(fn) -> str:
    if isinstance(fn, (TestFunction, HFunction)):
        return fn.name
    return getattr(fn, "__name__", "function")


def _t_grid(grid: int) -> np.ndarray:
    # Open grid over (0, 1): the defining inequalities use the open interval
    # and reciprocal weights blow up at the ends.
    return np.linspace(0.0, 1.0, grid + 2)[1:-1]


def _certify_combination(
    fn,
    weight_at: Callable[[np.ndarray], np.ndarray],
    class_name: ClassName,
    iv: Interval,
    grid: int,
    tol: float,
    reverse: bool = False,
    subject: str = "",
) -> Certificate:
    f = _as_callable(fn)
    xs = np.linspace(iv.a, iv.b, grid)
    ts = _t_grid(grid)

    fx = _eval(f, xs)
    if not np.isfinite(fx).all():
        raise DomainError(f"{subject or 'function'} not evaluable everywhere on [{iv.a}, {iv.b}]")
    worst_neg = float(fx.min())
    if worst_neg < -tol:
        raise NegativityError(
            f"{subject or 'function'} is negative ({worst_neg:.6g}) on [{iv.a}, {iv.b}]"
        )

    wt = _eval(weight_at, ts)
    wmt = _eval(weight_at, 1.0 - ts)
    if not (np.isfinite(wt).all() and np.isfinite(wmt).all()):
        return Certificate(class_name, Verdict.INCONCLUSIVE, None, grid, tol, subject=subject)

    t3 = ts[:, None, None]
    combos = t3 * xs[None, :, None] + (1.0 - t3) * xs[None, None, :]
    f_combo = _eval(f, combos)
    if not np.isfinite(f_combo).all():
        raise DomainError(f"{subject or 'function'} not evaluable at interior combinations")

    rhs = wt[:, None, None] * fx[None, :, None] + wmt[:, None, None] * fx[None, None, :]
    viol = f_combo - rhs if not reverse else rhs - f_combo
    worst = float(viol.max())
    if worst > tol:
        it, ix, iy = np.unravel_index(int(np.argmax(viol)), viol.shape)
        witness = (float(xs[ix]), float(xs[iy]), float(ts[it]))
        return Certificate(
            class_name, Verdict.REFUTED_WITH_WITNESS, witness, grid, tol, worst, subject
        )
    return Certificate(class_name, Verdict.CERTIFIED_ON_GRID, None, grid, tol, worst, subject)


def certify_h_convex(
    fn, h: HFunction, iv: Interval, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> Certificate:
    """Grid check of f(tx+(1-t)y) <= h(t)f(x) + h(1-t)f(y) for nonnegative f."""
    return _certify_combination(
        fn, h.eval, ClassName.H_CONVEX, iv, grid, tol, subject=f"{_subject_name(fn)}|{h.name}"
    )


def certify_h_concave(
    fn, h: HFunction, iv: Interval, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> Certificate:
    """Same grid check with the inequality reversed."""
    return _certify_combination(
        fn,
        h.eval,
        ClassName.H_CONCAVE,
        iv,
        grid,
        tol,
        reverse=True,
        subject=f"{_subject_name(fn)}|{h.name}",
    )


def certify_class(
    fn,
    class_name: ClassName,
    iv: Interval,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    s: Optional[float] = None,
) -> Certificate:
    """Certify membership in one of the named classes on a grid.

    Plain convexity is the h(t)=t combination check; Godunova-Levin uses
    weights 1/t, P-functions weight 1, and s-convexity t**s with the supplied
    s in (0, 1].
    """
    name = _subject_name(fn)
    if class_name is ClassName.CONVEX:
        return _certify_combination(fn, lambda t: t, class_name, iv, grid, tol, subject=name)
    if class_name is ClassName.GODUNOVA_LEVIN:
        return _certify_combination(fn, lambda t: 1.0 / t, class_name, iv, grid, tol, subject=name)
    if class_name is ClassName.P_FUNCTION:
        return _certify_combination(
            fn, lambda t: np.ones_like(np.asarray(t, dtype=float)), class_name, iv, grid, tol,
            subject=name,
        )
    if class_name is ClassName.S_CONVEX:
        if s is None or not 0.0 < s <= 1.0:
            raise DomainError(f"s-convexity requires s in (0, 1], got {s}")
        return _certify_combination(
            fn, lambda t, _s=s: np.asarray(t, dtype=float) ** _s, class_name, iv, grid, tol,
            subject=f"{name}|s={s:g}",
        )
    raise DomainError(f"certify_class does not handle {class_name}")


def certify_supermultiplicative(
    h: HFunction, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> Certificate:
    """Grid check of h(xy) >= h(x) h(y) over (0, 1) x (0, 1)."""
    ts = _t_grid(grid)
    hx = _eval(h.eval, ts)
    if not np.isfinite(hx).all():
        return Certificate(
            ClassName.SUPERMULTIPLICATIVE, Verdict.INCONCLUSIVE, None, grid, tol, subject=h.name
        )
    prod = ts[:, None] * ts[None, :]
    h_prod = _eval(h.eval, prod)
    if not np.isfinite(h_prod).all():
        return Certificate(
            ClassName.SUPERMULTIPLICATIVE, Verdict.INCONCLUSIVE, None, grid, tol, subject=h.name
        )
    viol = hx[:, None] * hx[None, :] - h_prod
    worst = float(viol.max())
    if worst > tol:
        ix, iy = np.unravel_index(int(np.argmax(viol)), viol.shape)
        return Certificate(
            ClassName.SUPERMULTIPLICATIVE,
            Verdict.REFUTED_WITH_WITNESS,
            (float(ts[ix]), float(ts[iy])),
            grid,
            tol,
            worst,
            h.name,
        )
    return Certificate(
        ClassName.SUPERMULTIPLICATIVE, Verdict.CERTIFIED_ON_GRID, None, grid, tol, worst, h.name
    )


def certify_h_geq_alpha(
    h: HFunction, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> Certificate:
    """Grid check of h(t) >= t on (0, 1)."""
    ts = _t_grid(grid)
    ht = _eval(h.eval, ts)
    if not np.isfinite(ht).all():
        return Certificate(
            ClassName.H_GEQ_ALPHA, Verdict.INCONCLUSIVE, None, grid, tol, subject=h.name
        )
    viol = ts - ht
    worst = float(viol.max())
    if worst > tol:
        i = int(np.argmax(viol))
        return Certificate(
            ClassName.H_GEQ_ALPHA,
            Verdict.REFUTED_WITH_WITNESS,
            (float(ts[i]),),
            grid,
            tol,
            worst,
            h.name,
        )
    return Certificate(
        ClassName.H_GEQ_ALPHA, Verdict.CERTIFIED_ON_GRID, None, grid, tol, worst, h.name
    )


# ---------------------------------------------------------------------------
# Witness re-verification helpers (grid-independent).

def class_violation(
    fn,
    class_name: ClassName,
    x: float,
    y: float,
    t: float,
    h: Optional[HFunction] = None,
    s: Optional[float] = None,
) -> float:
    """Signed violation of the defining inequality at one triple (positive = violated)."""
    f = _as_callable(fn)
    combo = float(_eval_scalar(f, t * x + (1.0 - t) * y))
    fx, fy = float(_eval_scalar(f, x)), float(_eval_scalar(f, y))
    if class_name in (ClassName.H_CONVEX, ClassName.H_CONCAVE):
        if h is None:
            raise DomainError("h-convexity violation needs the weight function")
        wt, wmt = float(_eval(h.eval, np.array(t))), float(_eval(h.eval, np.array(1.0 - t)))
    elif class_name is ClassName.CONVEX:
        wt, wmt = t, 1.0 - t
    elif class_name is ClassName.GODUNOVA_LEVIN:
        wt, wmt = 1.0 / t, 1.0 / (1.0 - t)
    elif class_name is ClassName.P_FUNCTION:
        wt = wmt = 1.0
    elif class_name is ClassName.S_CONVEX:
        if s is None:
            raise DomainError("s-convexity violation needs s")
        wt, wmt = t**s, (1.0 - t) ** s
    else:
        raise DomainError(f"class_violation does not handle {class_name}")
    rhs = wt * fx + wmt * fy
    return rhs - combo if class_name is ClassName.H_CONCAVE else combo - rhs


def supermultiplicative_violation(h: HFunction, x: float, y: float) -> float:
    hx = float(_eval(h.eval, np.array(x)))
    hy = float(_eval(h.eval, np.array(y)))
    hxy = float(_eval(h.eval, np.array(x * y)))
    return hx * hy - hxy


def h_geq_alpha_violation(h: HFunction, t: float) -> float:
    return t - float(_eval(h.eval, np.array(t)))
