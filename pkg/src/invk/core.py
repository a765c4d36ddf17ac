"""Invariant-function descriptors and their closure combinators.

An invariant function is a real function f(x, y) defined for all real x and
y > 0 that satisfies, for every positive integer n,

    sum_{r=0}^{n-1} f(x + r*y, n*y) = f(x, y).

A descriptor packages the evaluation rule with optional analytic partials,
the locus of non-smooth or branch-defined points in x, and enough metadata
for the verification engine to sample safely.  Descriptors are immutable and
evaluation rules are pure, so everything here is safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from .errors import ConvergenceError, RejectedInputError

_LD = np.longdouble
_EPS = 2.220446049250313e-16
_TWO_PI = 2.0 * math.pi

#: relative margin (in units of y) that sample grids keep from singular points
EPS_SING = 1e-6
#: |x/y - round(x/y)| <= LATTICE_RTOL * max(1, |x/y|) counts as on-lattice
LATTICE_RTOL = 1e-9

ValueRule = Callable[[float, float], float]


def ratio_nearest(x: float, y: float) -> tuple[int, float]:
    """Nearest integer k to x/y and the offset x/y - k.

    The division and subtraction run in extended precision: branch selection
    and near-lattice evaluation (log-sine, cotangent) need the offset to keep
    relative accuracy even when it is ~1e-9.
    """
    u = _LD(x) / _LD(y)
    k = np.rint(u)
    return int(k), float(u - k)


def is_lattice(x: float, y: float) -> bool:
    """True when x/y is an integer under the package's detection rule."""
    u = _LD(x) / _LD(y)
    k = np.rint(u)
    return abs(float(u - k)) <= LATTICE_RTOL * max(1.0, abs(float(u)))


def floor_ratio(x: float, y: float) -> float:
    """Lattice-aware floor of x/y: near-integer ratios round instead."""
    u = _LD(x) / _LD(y)
    k = np.rint(u)
    if abs(float(u - k)) <= LATTICE_RTOL * max(1.0, abs(float(u))):
        return float(k)
    return float(np.floor(u))


def frac_ratio(x: float, y: float) -> float:
    """Lattice-aware fractional part of x/y, in [0, 1)."""
    u = _LD(x) / _LD(y)
    k = np.rint(u)
    if abs(float(u - k)) <= LATTICE_RTOL * max(1.0, abs(float(u))):
        return 0.0
    return float(u - np.floor(u))


def _never_singular(x: float, y: float) -> bool:
    return False


def _no_points(y: float, lo: float, hi: float) -> tuple[float, ...]:
    return ()


def lattice_points(offset: float, step: float, lo: float, hi: float) -> tuple[float, ...]:
    """Points offset + k*step inside [lo, hi], k integer."""
    if step <= 0.0:
        return ()
    k0 = math.ceil((lo - offset) / step - 1e-12)
    k1 = math.floor((hi - offset) / step + 1e-12)
    return tuple(offset + k * step for k in range(k0, k1 + 1))


@dataclass(frozen=True)
class EvalPoint:
    """A sample point (x, y); y must be strictly positive."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise RejectedInputError("evaluation point must be finite")
        if self.y <= 0.0:
            raise RejectedInputError(f"y must be positive, got {self.y}")


@dataclass(frozen=True)
class InvariantFunction:
    """Immutable descriptor of an invariant function.

    `value` is the evaluation rule; `dx`/`dy` are optional analytic partials
    with the same signature.  `singular_in_x` marks points where the value is
    non-smooth or branch-defined, and `singular_points` enumerates that locus
    inside an x-window at a given y so integrators can split panels there.
    `domain`, when set, restricts the valid x-region (e.g. x > 0).
    `series_tolerance` is the truncation budget when the value rule sums a
    series; `piecewise` marks jump-type functions for which smooth limit
    extrapolation is invalid; `integrable_in_x` is False only for entries
    whose singularities are non-integrable (cotangent-type).
    """

    name: str
    value: ValueRule
    params: Mapping[str, object] = field(default_factory=dict)
    dx: Optional[ValueRule] = None
    dy: Optional[ValueRule] = None
    singular_in_x: Callable[[float, float], bool] = _never_singular
    singular_points: Callable[[float, float, float], Sequence[float]] = _no_points
    domain: Optional[Callable[[float, float], bool]] = None
    series_tolerance: float = 0.0
    piecewise: bool = False
    integrable_in_x: bool = True
    flags: frozenset = frozenset()

    def __post_init__(self):
        if self.series_tolerance < 0.0:
            raise RejectedInputError("series_tolerance must be nonnegative")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    def with_flags(self, *extra: str) -> "InvariantFunction":
        return replace(self, flags=self.flags | frozenset(extra))


def evaluate(f: InvariantFunction, p: EvalPoint) -> float:
    """Value of f at p, after domain validation."""
    if not isinstance(p, EvalPoint):
        p = EvalPoint(*p)
    if f.domain is not None and not f.domain(p.x, p.y):
        raise RejectedInputError(
            f"({p.x}, {p.y}) outside the domain of {f.name}"
        )
    return float(f.value(p.x, p.y))


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------


def affine_transform(f: InvariantFunction, a: float, b: float, c: float) -> InvariantFunction:
    """F(x, y) = a * f(b + c*x, c*y); invariance is preserved for c > 0."""
    if not (c > 0.0) or not all(map(math.isfinite, (a, b, c))):
        raise RejectedInputError(f"affine transform needs finite a, b and c > 0, got c={c}")

    def value(x, y):
        return a * f.value(b + c * x, c * y)

    dx = (lambda x, y: a * c * f.dx(b + c * x, c * y)) if f.dx else None
    dy = (lambda x, y: a * c * f.dy(b + c * x, c * y)) if f.dy else None
    dom = (lambda x, y: f.domain(b + c * x, c * y)) if f.domain else None

    def points(y, lo, hi):
        return tuple((s - b) / c for s in f.singular_points(c * y, b + c * lo, b + c * hi))

    return InvariantFunction(
        name=f"affine({f.name})",
        value=value,
        params={"a": a, "b": b, "c": c, "inner": f.name},
        dx=dx,
        dy=dy,
        singular_in_x=lambda x, y: f.singular_in_x(b + c * x, c * y),
        singular_points=points,
        domain=dom,
        series_tolerance=abs(a) * f.series_tolerance,
        piecewise=f.piecewise,
        integrable_in_x=f.integrable_in_x,
        flags=f.flags,
    )


def x_derivative(f: InvariantFunction) -> InvariantFunction:
    """d f / d x as an invariant function.

    Uses the analytic rule when the descriptor has one; otherwise falls back
    to a central difference with step ~ eps^(1/3), and the result carries the
    "fd-dx" flag so reports can surface the degraded accuracy.
    """
    if f.dx is not None:
        value = f.dx
        flags = f.flags
    else:
        def value(x, y):
            h = _EPS ** (1.0 / 3.0) * max(1.0, abs(x))
            return (f.value(x + h, y) - f.value(x - h, y)) / (2.0 * h)

        flags = f.flags | frozenset(["fd-dx"])
    return InvariantFunction(
        name=f"d/dx {f.name}",
        value=value,
        params=dict(f.params),
        singular_in_x=f.singular_in_x,
        singular_points=f.singular_points,
        domain=f.domain,
        series_tolerance=f.series_tolerance,
        piecewise=f.piecewise,
        flags=flags,
    )


def reflect(f: InvariantFunction) -> InvariantFunction:
    """F(x, y) = f(y - x, y)."""

    def value(x, y):
        return f.value(y - x, y)

    dx = (lambda x, y: -f.dx(y - x, y)) if f.dx else None
    dy = (
        (lambda x, y: f.dy(y - x, y) + f.dx(y - x, y))
        if (f.dx and f.dy)
        else None
    )

    def points(y, lo, hi):
        return tuple(sorted(y - s for s in f.singular_points(y, y - hi, y - lo)))

    return InvariantFunction(
        name=f"reflect({f.name})",
        value=value,
        params=dict(f.params),
        dx=dx,
        dy=dy,
        singular_in_x=lambda x, y: f.singular_in_x(y - x, y),
        singular_points=points,
        domain=(lambda x, y: f.domain(y - x, y)) if f.domain else None,
        series_tolerance=f.series_tolerance,
        piecewise=f.piecewise,
        integrable_in_x=f.integrable_in_x,
        flags=f.flags,
    )


def frac_compose(f: InvariantFunction, t: float, sign: str = "plus") -> InvariantFunction:
    """Compose f with the y-scaled fractional part of (t +/- x)/y.

    plus:  F(x, y) = f(y * {(t + x)/y}, y)
    minus: F(x, y) = f(y * {(t - x)/y}, y)

    The minus variant equals reflect(plus variant).  The wrapped argument
    lives in [0, y), so the result is periodic in x with period y and is
    marked piecewise (the wrap introduces jump points).
    """
    if sign not in ("plus", "minus"):
        raise RejectedInputError(f"sign must be 'plus' or 'minus', got {sign!r}")
    sgn = 1.0 if sign == "plus" else -1.0

    def inner_arg(x, y):
        return y * frac_ratio(t + sgn * x, y)

    def value(x, y):
        return f.value(inner_arg(x, y), y)

    dx = (lambda x, y: sgn * f.dx(inner_arg(x, y), y)) if f.dx else None

    def singular(x, y):
        return is_lattice(t + sgn * x, y) or f.singular_in_x(inner_arg(x, y), y)

    def points(y, lo, hi):
        pts = set(lattice_points(sgn * -t, y, lo, hi) if sign == "minus" else lattice_points(-t, y, lo, hi))
        # wrap points where (t +/- x)/y is an integer: x = sgn*(k*y - t)
        for s in f.singular_points(y, 0.0, y):
            pts.update(lattice_points(sgn * (s - t), y, lo, hi))
        return tuple(sorted(pts))

    return InvariantFunction(
        name=f"frac_{sign}({f.name})",
        value=value,
        params={"t": t, "sign": sign, "inner": f.name},
        dx=dx,
        singular_in_x=singular,
        singular_points=points,
        series_tolerance=f.series_tolerance,
        piecewise=True,
        integrable_in_x=f.integrable_in_x,
        flags=f.flags,
    )


def linear_combination(
    terms: Sequence[tuple[float, InvariantFunction]]
) -> InvariantFunction:
    """Pointwise sum of coefficient * function over a non-empty term list."""
    terms = [(float(c), f) for c, f in terms]
    if not terms:
        raise RejectedInputError("linear combination needs at least one term")

    def value(x, y):
        return math.fsum(c * f.value(x, y) for c, f in terms)

    dx = None
    if all(f.dx for _, f in terms):
        dx = lambda x, y: math.fsum(c * f.dx(x, y) for c, f in terms)
    dy = None
    if all(f.dy for _, f in terms):
        dy = lambda x, y: math.fsum(c * f.dy(x, y) for c, f in terms)

    doms = [f.domain for _, f in terms if f.domain]

    def points(y, lo, hi):
        pts: set[float] = set()
        for _, f in terms:
            pts.update(f.singular_points(y, lo, hi))
        return tuple(sorted(pts))

    return InvariantFunction(
        name="lincomb(" + ",".join(f.name for _, f in terms) + ")",
        value=value,
        params={"coefficients": tuple(c for c, _ in terms)},
        dx=dx,
        dy=dy,
        singular_in_x=lambda x, y: any(f.singular_in_x(x, y) for _, f in terms),
        singular_points=points,
        domain=(lambda x, y: all(d(x, y) for d in doms)) if doms else None,
        series_tolerance=math.fsum(abs(c) * f.series_tolerance for c, f in terms),
        piecewise=any(f.piecewise for _, f in terms),
        integrable_in_x=all(f.integrable_in_x for _, f in terms),
        flags=frozenset().union(*(f.flags for _, f in terms)),
    )


def step_difference(f: InvariantFunction) -> ValueRule:
    """The rule (x, y) -> f(x + y, y) - f(x, y).

    For invariant f this difference does not change when y is replaced by
    n*y, and it equals the limit of f(x + a, a) - f(x, a) as a -> 0+.
    """

    def delta(x, y):
        return f.value(x + y, y) - f.value(x, y)

    return delta


# ---------------------------------------------------------------------------
# series constructors
# ---------------------------------------------------------------------------

_SERIES_KMAX = 10 ** 6
_SERIES_PROBE_WINDOW = 6


def _tail_bound(
    absf: Callable[[float], float],
    arg_of: Callable[[int], float],
    k: int,
    step: float,
    prefactor: float,
) -> float:
    """Upper bound on prefactor * sum_{j>k} |h(arg_of(j))|.

    The arguments arg_of(j) advance arithmetically with `step`.  Tries a
    geometric bound (ratio of consecutive |h| bounded below 1 over a probe
    window) and an integral bound for power-law decay t^-p with p > 1;
    returns the smaller, or +inf when neither applies yet.
    """
    window = [absf(arg_of(k + i)) for i in range(_SERIES_PROBE_WINDOW)]
    if all(w == 0.0 for w in window) and absf(arg_of(2 * k)) == 0.0:
        return 0.0
    best = math.inf
    ratios = [
        window[i + 1] / window[i]
        for i in range(len(window) - 1)
        if window[i] > 0.0
    ]
    if len(ratios) == _SERIES_PROBE_WINDOW - 1:
        q = max(ratios)
        if q < 0.99:
            best = min(best, prefactor * window[0] * q / (1.0 - q))
    hk = window[0]
    h2k = absf(arg_of(2 * k))
    t1, t2 = arg_of(k), arg_of(2 * k)
    if hk > 0.0 and 0.0 < h2k < hk and t2 > t1 > 0.0:
        p = math.log(hk / h2k) / math.log(t2 / t1)
        if p > 1.0:
            best = min(best, prefactor * hk * t1 / ((p - 1.0) * step))
    return best


def _series_cutoff(absf, arg_of, tol: float, step: float, prefactor: float) -> int:
    k = 16
    while k <= _SERIES_KMAX:
        if _tail_bound(absf, arg_of, k, step, prefactor) < tol:
            return k + _SERIES_PROBE_WINDOW
        k = min(2 * k, _SERIES_KMAX) if k < _SERIES_KMAX else 2 * k
    raise ConvergenceError(
        f"series tail bound not below {tol:g} within {_SERIES_KMAX} terms"
    )


def _call_vectorized(h, args: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(h(args), dtype=float)
        if out.shape == args.shape:
            return out
    except Exception:
        pass
    return np.array([h(float(t)) for t in args], dtype=float)


def from_fourier(h, mode: str = "cos", tol: float = 1e-10) -> InvariantFunction:
    """Invariant function (1/y) * sum_{k>=1} h(k/y) * cos(2 pi k x / y) (or sin).

    The caller asserts that |h| is eventually monotone decreasing so the tail
    admits a geometric or power-decay bound; the series is truncated once that
    bound drops below `tol`, which becomes the descriptor's series tolerance.
    Raises ConvergenceError when no bound is reached within 10^6 terms.
    """
    if mode not in ("cos", "sin"):
        raise RejectedInputError(f"mode must be 'cos' or 'sin', got {mode!r}")
    if tol <= 0.0:
        raise RejectedInputError("tolerance must be positive")
    trig = np.cos if mode == "cos" else np.sin

    def value(x, y):
        kmax = _series_cutoff(
            lambda t: abs(h(t)), lambda k: k / y, tol, step=1.0 / y, prefactor=1.0 / y
        )
        ks = np.arange(1, kmax + 1, dtype=float)
        hv = _call_vectorized(h, ks / y)
        phase = (_TWO_PI * x / y) * ks
        return float(hv @ trig(phase)) / y

    return InvariantFunction(
        name=f"fourier_{mode}",
        value=value,
        params={"mode": mode, "tol": tol},
        series_tolerance=tol,
    )


def from_tail_series(h, tol: float = 1e-10) -> InvariantFunction:
    """Invariant function sum_{k>=0} h(x + k*y), truncated under `tol`.

    Same convergence contract as `from_fourier`: |h| must eventually decrease
    monotonically with a computable geometric or power-law tail bound.
    """
    if tol <= 0.0:
        raise RejectedInputError("tolerance must be positive")

    def value(x, y):
        kmax = _series_cutoff(
            lambda t: abs(h(t)), lambda k: x + k * y, tol, step=y, prefactor=1.0
        )
        ks = np.arange(0, kmax + 1, dtype=float)
        hv = _call_vectorized(h, x + ks * y)
        return float(math.fsum(hv))

    return InvariantFunction(
        name="tail_series",
        value=value,
        params={"tol": tol},
        series_tolerance=tol,
    )
