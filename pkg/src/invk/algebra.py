"""Convolution algebra on integrable invariant functions.

The product of g and h is

    (g * h)(x, y) = int_0^x g(t,y) h(x-t,y) dt + int_x^y g(t,y) h(x+y-t,y) dt

with oriented integrals, evaluated literally for any real x.  On 0 <= x < y
this is the cyclic convolution of the operands' restrictions to one period,
so it commutes and associates there, and the period integral of the product
factorizes into the product of the period integrals.
"""

from __future__ import annotations

import math

from .core import InvariantFunction
from .errors import ConvergenceError, RejectedInputError
from .quadrature import integrate


def _require_integrable(f: InvariantFunction, op: str) -> None:
    if not f.integrable_in_x:
        raise RejectedInputError(
            f"{f.name} has a non-integrable singularity and cannot enter {op}"
        )


def _oriented_integral(phi, a, b, tol, pts, context):
    res = integrate(phi, a, b, tol=tol, interior_singularities=pts)
    if not res.converged:
        raise ConvergenceError(
            f"{context}: quadrature stalled on [{a:g}, {b:g}] "
            f"(estimate {res.error_estimate:.3g} > tol {tol:.3g})"
        )
    return res.value


def convolve(g: InvariantFunction, h: InvariantFunction, tol: float = 1e-10) -> InvariantFunction:
    """The convolution product g * h as an invariant function.

    Panels are split at the operands' singular x-points, both directly (for g)
    and pulled back through t -> x - t and t -> x + y - t (for h).  Quadrature
    failure on either term raises ConvergenceError naming the offending range.
    """
    if tol <= 0.0:
        raise RejectedInputError("convolution tolerance must be positive")
    _require_integrable(g, "convolution")
    _require_integrable(h, "convolution")
    half = 0.5 * tol

    def value(x, y):
        lo1, hi1 = min(0.0, x), max(0.0, x)
        pts1 = list(g.singular_points(y, lo1, hi1))
        pts1 += [x - s for s in h.singular_points(y, x - hi1, x - lo1)]
        term1 = _oriented_integral(
            lambda t: g.value(t, y) * h.value(x - t, y),
            0.0, x, half, pts1, f"convolve({g.name},{h.name}) first term",
        )
        lo2, hi2 = min(x, y), max(x, y)
        pts2 = list(g.singular_points(y, lo2, hi2))
        pts2 += [x + y - s for s in h.singular_points(y, x + y - hi2, x + y - lo2)]
        term2 = _oriented_integral(
            lambda t: g.value(t, y) * h.value(x + y - t, y),
            x, y, half, pts2, f"convolve({g.name},{h.name}) second term",
        )
        return term1 + term2

    return InvariantFunction(
        name=f"conv({g.name},{h.name})",
        value=value,
        params={"g": g.name, "h": h.name, "tol": tol},
        series_tolerance=tol + g.series_tolerance + h.series_tolerance,
        flags=g.flags | h.flags,
    )


def antiderivative(f: InvariantFunction, tol: float = 1e-10) -> InvariantFunction:
    """F(x, y) = int_y^x f(t,y) dt + (1/y) int_0^y t f(t,y) dt.

    F is again invariant and dF/dx = f, so the descriptor's dx is f's value
    rule.
    """
    if tol <= 0.0:
        raise RejectedInputError("antiderivative tolerance must be positive")
    _require_integrable(f, "antiderivative")
    half = 0.5 * tol

    def value(x, y):
        lo, hi = min(x, y), max(x, y)
        run = _oriented_integral(
            lambda t: f.value(t, y),
            y, x, half, f.singular_points(y, lo, hi),
            f"antiderivative({f.name}) running term",
        )
        mean = _oriented_integral(
            lambda t: t * f.value(t, y),
            0.0, y, half, f.singular_points(y, 0.0, y),
            f"antiderivative({f.name}) mean term",
        )
        return run + mean / y

    return InvariantFunction(
        name=f"antider({f.name})",
        value=value,
        params={"f": f.name, "tol": tol},
        dx=f.value,
        series_tolerance=tol + 3.0 * f.series_tolerance,
        flags=f.flags,
    )


def geometric_convolve(g: InvariantFunction, a: float, tol: float = 1e-10) -> InvariantFunction:
    """Convolution of g with the exponential entry a^x/(a^y - 1), in closed split form:

        f(x,y) = a^x/(a^y-1) * int_0^y a^-t g(t,y) dt + a^x * int_x^y a^-t g(t,y) dt

    Equals convolve(E5(a), g) but spends one fewer adaptive pass on the
    exponential factor.
    """
    if not (a > 0.0) or a == 1.0 or not math.isfinite(a):
        raise RejectedInputError(f"geometric convolution needs a > 0, a != 1, got a={a}")
    if tol <= 0.0:
        raise RejectedInputError("tolerance must be positive")
    _require_integrable(g, "geometric convolution")
    L = math.log(a)
    half = 0.5 * tol

    def value(x, y):
        # a^x is folded into the integrands: computing a^x * int a^-t g dt
        # directly pairs a huge factor with a tiny integral (or vice versa)
        # once |x| grows, and the cancellation defeats absolute tolerances
        def phi(t):
            return math.exp((x - t) * L) * g.value(t, y)

        full = _oriented_integral(
            phi, 0.0, y, half, g.singular_points(y, 0.0, y),
            f"geometric_convolve({g.name}) period term",
        )
        lo, hi = min(x, y), max(x, y)
        partial = _oriented_integral(
            phi, x, y, half, g.singular_points(y, lo, hi),
            f"geometric_convolve({g.name}) running term",
        )
        return full / math.expm1(y * L) + partial

    return InvariantFunction(
        name=f"geomconv({g.name})",
        value=value,
        params={"a": a, "g": g.name, "tol": tol},
        series_tolerance=tol + 3.0 * g.series_tolerance,
        flags=g.flags,
    )
