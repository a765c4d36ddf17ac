"""Scalar special functions: exact Bernoulli data, Hurwitz zeta, log-gamma.

Bernoulli numbers are kept as exact rationals (``fractions.Fraction``) and only
converted to floating point at the evaluation boundary, so multiplication and
recurrence identities can be tested exactly.  Hurwitz zeta is supported on two
branches: ``s > 1`` by tail-corrected direct summation and ``s < 0`` by the
trigonometric series of its analytic continuation, which is 1-periodic in the
second argument.  The strip ``0 <= s <= 1`` is not supported.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import numpy as np

from .errors import (
    CapacityError,
    PoleError,
    RejectedInputError,
    UnsupportedRegionError,
)

_LD = np.longdouble
_TWO_PI = 2.0 * math.pi

# Hard cap on the Bernoulli table; the default build covers B_0..B_64.
TABLE_LIMIT = 256


class BernoulliTable:
    """Bernoulli numbers B_0..B_n as exact rationals, grown on demand.

    Uses the defining recurrence B_0 = 1, sum_{k<n} C(n,k) B_k = 0 for n >= 2.
    Growth is guarded by a lock so concurrent first use is safe; once written,
    entries are never mutated.
    """

    def __init__(self, n: int = 64):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        self.extend_to(n)

    def extend_to(self, n: int) -> None:
        if n > TABLE_LIMIT:
            raise CapacityError(f"Bernoulli table capped at B_{TABLE_LIMIT}, requested B_{n}")
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)  # computing B_m from the recurrence with n = m+1
                acc = Fraction(0)
                for k in range(m):
                    acc += math.comb(m + 1, k) * self._values[k]
                self._values.append(-acc / (m + 1))

    def __len__(self) -> int:
        return len(self._values)

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise RejectedInputError("Bernoulli index must be nonnegative")
        if n >= len(self._values):
            self.extend_to(max(n, 2 * len(self._values)) if n <= TABLE_LIMIT else n)
        return self._values[n]


_TABLE = BernoulliTable(64)


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    return _TABLE.number(n)


def _poly_coeffs(m: int) -> tuple[Fraction, ...]:
    # coefficient of t^j in B_m(t) is C(m, j) * B_{m-j}
    return tuple(math.comb(m, j) * bernoulli_number(m - j) for j in range(m + 1))


_COEFF_CACHE: dict[int, tuple[Fraction, ...]] = {}
_COEFF_CACHE_LD: dict[int, np.ndarray] = {}
_COEFF_LOCK = threading.Lock()


def bernoulli_poly_coeffs(m: int) -> tuple[Fraction, ...]:
    """Exact coefficients of B_m(t), index j holding the t^j coefficient."""
    if m < 0:
        raise RejectedInputError("polynomial degree must be nonnegative")
    with _COEFF_LOCK:
        if m not in _COEFF_CACHE:
            _COEFF_CACHE[m] = _poly_coeffs(m)
        return _COEFF_CACHE[m]


def _poly_coeffs_ld(m: int) -> np.ndarray:
    with _COEFF_LOCK:
        arr = _COEFF_CACHE_LD.get(m)
    if arr is None:
        cs = bernoulli_poly_coeffs(m)
        arr = np.array([_LD(c.numerator) / _LD(c.denominator) for c in cs], dtype=_LD)
        with _COEFF_LOCK:
            _COEFF_CACHE_LD[m] = arr
    return arr


def bernoulli_poly(m: int, t: float) -> float:
    """B_m(t) by Horner evaluation of the exact coefficient list.

    Internally evaluated in extended precision: the verification suites sum
    scaled values up to ~1e8 in magnitude and need absolute errors well under
    1e-8 after cancellation.
    """
    cs = _poly_coeffs_ld(m)
    td = _LD(t)
    acc = _LD(0.0)
    for j in range(m, -1, -1):
        acc = acc * td + cs[j]
    return float(acc)


def bernoulli_poly_exact(m: int, t: Fraction) -> Fraction:
    """B_m(t) for rational t, computed exactly."""
    cs = bernoulli_poly_coeffs(m)
    acc = Fraction(0)
    for j in range(m, -1, -1):
        acc = acc * t + cs[j]
    return acc


# ---------------------------------------------------------------------------
# Hurwitz zeta
# ---------------------------------------------------------------------------

_EM_BASE = 16.0          # tail-correction anchor for the s > 1 branch
_SERIES_TERM_BOUND = 1e-12
_KMAX_FOURIER = 200_000_000

_FOURIER_CACHE: dict[tuple[float, float], tuple] = {}
_FOURIER_CACHE_LOCK = threading.Lock()
_FOURIER_CACHE_BUDGET = 6_000_000  # total cached ndarray elements


def _hurwitz_sum_branch(s: float, x: float) -> float:
    """zeta(s, x) for s > 1, x > 0: direct sum plus tail corrections.

    Sums (n + x)^-s until the base exceeds a fixed anchor, then corrects the
    tail with the standard midpoint and even-derivative terms built from the
    Bernoulli numbers, stopping when the next term is below 1e-12 relative.
    """
    sd = _LD(s)
    xd = _LD(x)
    acc = _LD(0.0)
    n = 0
    while float(xd) + n < _EM_BASE:
        acc += (xd + n) ** (-sd)
        n += 1
    a = xd + n
    acc += a ** (1.0 - sd) / (sd - 1.0) + 0.5 * a ** (-sd)
    rising = sd                       # s (s+1) ... (s+2j-2)
    apow = a ** (-sd - 1.0)
    for j in range(1, 60):
        b = bernoulli_number(2 * j)
        term = (_LD(b.numerator) / _LD(b.denominator)) / _LD(math.factorial(2 * j)) * rising * apow
        acc += term
        # the contract needs the first omitted term below 1e-12 relative;
        # extended precision lets us run it to ~1e-17 for free
        if abs(float(term)) < 2e-17 * abs(float(acc)):
            break
        rising *= (sd + (2 * j - 1)) * (sd + 2 * j)
        apow /= a * a
    return float(acc)


def _fourier_cutoff(s: float, coef: float, term_bound: float) -> int:
    # smallest k with coef * k^(s-1) < term_bound (s < 0 so exponent < -1)
    if coef <= term_bound:
        return 1
    k = (coef / term_bound) ** (1.0 / (1.0 - s))
    return max(2, int(math.ceil(k)))


def _fourier_setup(s: float, term_bound: float) -> tuple:
    """(c_cos, c_sin, need_cos, need_sin, kmax, ks, kp) for the s < 0 series.

    Cached per (s, term_bound): the coefficient work and the k / k^(s-1)
    arrays dominate otherwise, and verification sweeps hit the same s tens of
    thousands of times.
    """
    key = (s, term_bound)
    with _FOURIER_CACHE_LOCK:
        hit = _FOURIER_CACHE.get(key)
    if hit is not None:
        return hit
    pref = 2.0 * math.exp(log_gamma_abs(1.0 - s)) / _TWO_PI ** (1.0 - s)
    c_cos = pref * math.sin(0.5 * math.pi * s)
    c_sin = pref * math.cos(0.5 * math.pi * s)
    coef = abs(c_cos) + abs(c_sin)
    kmax = _fourier_cutoff(s, coef, term_bound)
    if kmax > _KMAX_FOURIER:
        raise CapacityError(
            f"zeta({s}, x) needs {kmax} series terms for bound {term_bound:g}"
        )
    # either trig sum is skipped when its coefficient cannot matter; for
    # integer s one of the two vanishes up to roundoff
    skip = 0.01 * term_bound
    zbound = 1.0 + 1.0 / (-s)  # sum_k k^(s-1) <= 1 + integral tail
    need_cos = abs(c_cos) * zbound > skip
    need_sin = abs(c_sin) * zbound > skip
    ks = np.arange(1, kmax + 1, dtype=float)
    kp = ks ** (s - 1.0)
    entry = (c_cos, c_sin, need_cos, need_sin, kmax, ks, kp)
    with _FOURIER_CACHE_LOCK:
        used = sum(e[5].size * 2 for e in _FOURIER_CACHE.values())
        if used + 2 * kmax <= _FOURIER_CACHE_BUDGET:
            _FOURIER_CACHE[key] = entry
    return entry


def _hurwitz_fourier_branch(s: float, x: float, term_bound: float) -> float:
    """zeta(s, x) for s < 0 via its trigonometric expansion.

    The expansion is 1-periodic in x, so x is reduced to (0, 1]; callers that
    pass a non-reduced x receive the periodized value.  Truncated at the first
    k whose term magnitude bound drops below `term_bound`.
    """
    u = x - math.floor(x)
    if u == 0.0:
        u = 1.0
    c_cos, c_sin, need_cos, need_sin, kmax, ks, kp = _fourier_setup(s, term_bound)
    total = 0.0
    buf = np.multiply(ks, _TWO_PI * u)
    if need_cos and need_sin:
        total += c_cos * float(kp @ np.cos(buf))
        total += c_sin * float(kp @ np.sin(buf))
    elif need_cos:
        np.cos(buf, out=buf)
        total = c_cos * float(kp @ buf)
    elif need_sin:
        np.sin(buf, out=buf)
        total = c_sin * float(kp @ buf)
    return total


def hurwitz_zeta(s: float, x: float, term_bound: float = _SERIES_TERM_BOUND) -> float:
    """Hurwitz zeta zeta(s, x) on the branches s > 1 and s < 0.

    s > 1 requires x > 0.  For s < 0 the periodic expansion is used, and x is
    reduced modulo 1 into (0, 1]; the result is the periodized value, which is
    what the scale-sum catalog needs.  `term_bound` controls the truncation of
    the s < 0 series only.
    """
    if not math.isfinite(s) or not math.isfinite(x):
        raise RejectedInputError("zeta arguments must be finite")
    if 0.0 <= s <= 1.0:
        raise UnsupportedRegionError(f"zeta(s, x) unsupported for s in [0, 1], got s={s}")
    if s > 1.0:
        if x <= 0.0:
            raise RejectedInputError(f"zeta(s, x) with s > 1 needs x > 0, got x={x}")
        return _hurwitz_sum_branch(s, x)
    return _hurwitz_fourier_branch(s, x, term_bound)


# ---------------------------------------------------------------------------
# log |Gamma|
# ---------------------------------------------------------------------------

_LOG_2PI = math.log(_TWO_PI)
_STIRLING_MIN = 10.0


def _stirling(t: _LD) -> _LD:
    # asymptotic series, valid for t >= 10; terms shrink below 1e-21 relative
    # long before the divergent regime
    acc = (t - 0.5) * np.log(t) - t + 0.5 * _LD(_LOG_2PI)
    tpow = t
    t2 = t * t
    for j in range(1, 24):
        b = bernoulli_number(2 * j)
        term = (_LD(b.numerator) / _LD(b.denominator)) / (_LD(2 * j) * _LD(2 * j - 1) * tpow)
        acc += term
        if abs(float(term)) < 1e-20 * abs(float(acc)):
            break
        tpow *= t2
    return acc


def _log_gamma_pos(t: float) -> _LD:
    td = _LD(t)
    if t >= _STIRLING_MIN:
        return _stirling(td)
    k = int(math.ceil(_STIRLING_MIN - t))
    shift = _LD(0.0)
    for i in range(k):
        shift += np.log(td + i)
    return _stirling(td + k) - shift


def log_gamma_abs(t: float) -> float:
    """log |Gamma(t)| for real t away from the poles 0, -1, -2, ...

    Positive arguments use an asymptotic series with exact Bernoulli
    coefficients, shifting the argument up when t < 10.  Negative arguments
    go through the reflection |Gamma(t)| = pi / (|sin(pi t)| Gamma(1 - t)),
    with the sine factor computed from the distance to the nearest integer so
    accuracy survives near the poles.
    """
    if not math.isfinite(t):
        raise RejectedInputError("log_gamma_abs argument must be finite")
    if t <= 0.0 and t == math.floor(t):
        raise PoleError(f"Gamma pole at t={t}")
    if t > 0.0:
        return float(_log_gamma_pos(t))
    td = _LD(t)
    d = td - np.rint(td)
    sin_abs = np.abs(np.sin(_LD(math.pi) * d))
    return float(_LD(math.log(math.pi)) - np.log(sin_abs) - _log_gamma_pos(1.0 - t))
