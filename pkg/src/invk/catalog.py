"""Catalog of concrete invariant-function families E1..E14.

Each entry is a factory that validates its parameters and returns an
immutable descriptor.  Analytic partials are attached where a closed form
exists (E1, E2, E5..E9).  Branch-defined entries (floor, indicator, log-sine,
cotangent, log-gamma, sign) select their lattice branch with the shared
detection rule from `core`, and near-lattice trigonometry is computed from
the distance to the nearest lattice point so it stays accurate where the
verification grids probe closest.

Entry summary (x, y real, y > 0, u = x/y):

  E1            1/y
  E2(m)         y^(m-1) B_m(u), m >= 1
  E3a           floor(u)
  E3b           {u} - 1/2
  E4(a)         1 if (a-x)/y integer else 0
  E5(a)         a^x / (a^y - 1), a > 0, a != 1
  E6(r,th,part) real/imaginary part of z^x/(z^y - 1) with z = r e^(i th)
  E7(r)         log(1 - 2 r^(1/y) cos(2 pi u) + r^(2/y))
  E8(r)         r^(1/y) sin(2 pi u) / (y (1 - 2 r^(1/y) cos(2 pi u) + r^(2/y)))
  E9(r)         (1 - r^(2/y)) / (y (1 - 2 r^(1/y) cos(2 pi u) + r^(2/y))), 0<r<1
  E10           log|2 sin(pi u)| off-lattice, -log y on u integer
  E11           (1/y) cot(pi u) off-lattice, 0 on u integer
  E12           log|y^u Gamma(u) / sqrt(2 pi y)| off the nonpositive lattice,
                log(y^u sqrt(2 pi y) / (-u)!) on it
  E13(s)        y^(-s) zeta(s, u) for s > 1 (u > 0) or s < 0 (periodized)
  E14           sign of 1/2 - {u} collapsed to {+1, 0, -1}
"""

from __future__ import annotations

import cmath
import math
from typing import Callable

import numpy as np

from .core import (
    InvariantFunction,
    LATTICE_RTOL,
    floor_ratio,
    frac_ratio,
    is_lattice,
    lattice_points,
    ratio_nearest,
)
from .errors import RejectedInputError
from .special import _hurwitz_sum_branch, bernoulli_poly, hurwitz_zeta, log_gamma_abs

_LD = np.longdouble
_TWO_PI = 2.0 * math.pi
_LOG_2PI = math.log(2.0 * math.pi)


def _lattice_predicate(offset: float = 0.0, halves: bool = False):
    def singular(x, y):
        step = 0.5 if halves else 1.0
        u = (_LD(x) - _LD(offset)) / _LD(y) / _LD(step)
        k = np.rint(u)
        return abs(float(u - k)) <= LATTICE_RTOL * max(1.0, abs(float(u)))

    return singular


def _lattice_locator(offset: float = 0.0, halves: bool = False, nonpositive: bool = False):
    def points(y, lo, hi):
        step = y / 2.0 if halves else y
        pts = lattice_points(offset, step, lo, hi)
        if nonpositive:
            pts = tuple(p for p in pts if p <= 1e-12 * y)
        return pts

    return points


def _make_e1() -> InvariantFunction:
    return InvariantFunction(
        name="E1",
        value=lambda x, y: 1.0 / y,
        dx=lambda x, y: 0.0,
        dy=lambda x, y: -1.0 / (y * y),
    )


def _make_e2(m: int) -> InvariantFunction:
    m = _int_param("m", m)
    if m < 1:
        raise RejectedInputError(f"E2 needs integer m >= 1, got {m}")

    def value(x, y):
        yd = _LD(y)
        u = _LD(x) / yd
        return float(yd ** (m - 1) * _LD(bernoulli_poly(m, float(u))))

    def dx(x, y):
        if m == 1:
            return 1.0 / y
        return float(m * _LD(y) ** (m - 2) * _LD(bernoulli_poly(m - 1, x / y)))

    def dy(x, y):
        yd = _LD(y)
        u = x / y
        lead = (m - 1) * yd ** (m - 2) * _LD(bernoulli_poly(m, u)) if m >= 2 else _LD(0.0)
        chain = m * yd ** (m - 3) * _LD(x) * _LD(bernoulli_poly(m - 1, u))
        return float(lead - chain)

    return InvariantFunction(name="E2", value=value, params={"m": m}, dx=dx, dy=dy)


def _make_e3a() -> InvariantFunction:
    return InvariantFunction(
        name="E3a",
        value=lambda x, y: floor_ratio(x, y),
        singular_in_x=_lattice_predicate(),
        singular_points=_lattice_locator(),
        piecewise=True,
    )


def _make_e3b() -> InvariantFunction:
    return InvariantFunction(
        name="E3b",
        value=lambda x, y: frac_ratio(x, y) - 0.5,
        singular_in_x=_lattice_predicate(),
        singular_points=_lattice_locator(),
        piecewise=True,
    )


def _make_e4(a: float) -> InvariantFunction:
    a = _float_param("a", a)

    def value(x, y):
        return 1.0 if is_lattice(a - x, y) else 0.0

    return InvariantFunction(
        name="E4",
        value=value,
        params={"a": a},
        singular_in_x=lambda x, y: is_lattice(a - x, y),
        singular_points=_lattice_locator(offset=a),
        piecewise=True,
    )


def _make_e5(a: float) -> InvariantFunction:
    a = _float_param("a", a)
    if a <= 0.0 or a == 1.0:
        raise RejectedInputError(f"E5 needs a > 0, a != 1, got a={a}")
    L = math.log(a)

    def value(x, y):
        return math.exp(x * L) / math.expm1(y * L)

    def dx(x, y):
        return L * math.exp(x * L) / math.expm1(y * L)

    def dy(x, y):
        d = math.expm1(y * L)
        return -L * math.exp((x + y) * L) / (d * d)

    return InvariantFunction(name="E5", value=value, params={"a": a}, dx=dx, dy=dy)


def _make_e6(r: float, theta: float, part: str) -> InvariantFunction:
    r = _float_param("r", r)
    theta = _float_param("theta", theta)
    if r <= 0.0 or r == 1.0:
        raise RejectedInputError(f"E6 needs r > 0, r != 1, got r={r}")
    if part not in ("cos", "sin"):
        raise RejectedInputError(f"E6 part must be 'cos' or 'sin', got {part!r}")
    L = complex(math.log(r), theta)
    pick = (lambda z: z.real) if part == "cos" else (lambda z: z.imag)

    def f_complex(x, y):
        return cmath.exp(x * L) / (cmath.exp(y * L) - 1.0)

    def value(x, y):
        return pick(f_complex(x, y))

    def dx(x, y):
        return pick(L * f_complex(x, y))

    def dy(x, y):
        g = cmath.exp(y * L)
        return pick(-L * g * cmath.exp(x * L) / (g - 1.0) ** 2)

    return InvariantFunction(
        name="E6",
        value=value,
        params={"r": r, "theta": theta, "part": part},
        dx=dx,
        dy=dy,
    )


def _trig_parts(x: float, y: float) -> tuple[np.longdouble, np.longdouble]:
    """(sin(pi x/y), sin(2 pi x/y)) from the nearest-lattice offset.

    sin(pi u) only flips sign across the lattice; its magnitude equals
    |sin(pi d)| with d the offset, which keeps full relative accuracy when
    u is large or d is tiny.
    """
    u = _LD(x) / _LD(y)
    k = np.rint(u)
    d = u - k
    s1 = np.sin(_LD(math.pi) * d)
    if int(k) % 2 != 0:
        s1 = -s1
    s2 = np.sin(_LD(_TWO_PI) * d)
    return s1, s2


def _rho_parts(r: float, y: float) -> tuple[np.longdouble, np.longdouble]:
    """(r^(1/y), r^(1/y) - 1) with the difference free of cancellation."""
    e = _LD(math.log(r)) / _LD(y)
    rm1 = np.expm1(e)
    return rm1 + 1.0, rm1


def _make_e7(r: float) -> InvariantFunction:
    r = _float_param("r", r)
    if r <= 0.0 or r == 1.0:
        raise RejectedInputError(f"E7 needs r > 0, r != 1, got r={r}")
    L = math.log(r)

    def denom(x, y):
        rho, rm1 = _rho_parts(r, y)
        s1, _ = _trig_parts(x, y)
        return rho, rm1 * rm1 + 4.0 * rho * s1 * s1

    def value(x, y):
        _, D = denom(x, y)
        return float(np.log(D))

    def dx(x, y):
        rho, D = denom(x, y)
        _, s2 = _trig_parts(x, y)
        return float(_TWO_PI / _LD(y) * 2.0 * rho * s2 / D)

    def dy(x, y):
        rho, D = denom(x, y)
        s1, s2 = _trig_parts(x, y)
        c = 1.0 - 2.0 * s1 * s1  # cos(2 pi x / y)
        drho = -rho * _LD(L) / _LD(y) ** 2
        dc = s2 * _LD(_TWO_PI) * _LD(x) / _LD(y) ** 2
        dD = 2.0 * drho * (rho - c) - 2.0 * rho * dc
        return float(dD / D)

    return InvariantFunction(name="E7", value=value, params={"r": r}, dx=dx, dy=dy)


def _pole_free_w(r: float, x: float, y: float) -> tuple[complex, complex]:
    """w = r^(1/y) e^(2 pi i x/y) and 1 - w, the latter cancellation-free."""
    rho, rm1 = _rho_parts(r, y)
    s1, s2 = _trig_parts(x, y)
    w = complex(float(rho * (1.0 - 2.0 * s1 * s1)), float(rho * s2))
    one_minus = complex(float(-rm1 + 2.0 * rho * s1 * s1), float(-rho * s2))
    return w, one_minus


def _make_e8(r: float) -> InvariantFunction:
    r = _float_param("r", r)
    if r <= 0.0 or r == 1.0:
        raise RejectedInputError(f"E8 needs r > 0, r != 1, got r={r}")
    L = math.log(r)

    def value(x, y):
        w, omw = _pole_free_w(r, x, y)
        return (w / omw).imag / y

    def dx(x, y):
        w, omw = _pole_free_w(r, x, y)
        return (2.0j * math.pi * w / (omw * omw)).imag / (y * y)

    def dy(x, y):
        w, omw = _pole_free_w(r, x, y)
        term1 = -w / omw / (y * y)
        term2 = -w * complex(L, _TWO_PI * x) / (omw * omw) / y ** 3
        return (term1 + term2).imag

    return InvariantFunction(name="E8", value=value, params={"r": r}, dx=dx, dy=dy)


def _make_e9(r: float) -> InvariantFunction:
    r = _float_param("r", r)
    if not 0.0 < r < 1.0:
        raise RejectedInputError(f"E9 needs 0 < r < 1, got r={r}")
    L = math.log(r)

    def value(x, y):
        w, omw = _pole_free_w(r, x, y)
        return ((1.0 + w) / omw).real / y

    def dx(x, y):
        w, omw = _pole_free_w(r, x, y)
        return (4.0j * math.pi * w / (omw * omw)).real / (y * y)

    def dy(x, y):
        w, omw = _pole_free_w(r, x, y)
        term1 = -(1.0 + w) / omw / (y * y)
        term2 = -2.0 * w * complex(L, _TWO_PI * x) / (omw * omw) / y ** 3
        return (term1 + term2).real

    return InvariantFunction(name="E9", value=value, params={"r": r}, dx=dx, dy=dy)


def _make_e10() -> InvariantFunction:
    def value(x, y):
        if is_lattice(x, y):
            return -math.log(y)
        s1, _ = _trig_parts(x, y)
        return float(np.log(2.0 * np.abs(s1)))

    return InvariantFunction(
        name="E10",
        value=value,
        singular_in_x=_lattice_predicate(),
        singular_points=_lattice_locator(),
        piecewise=True,
    )


def _make_e11() -> InvariantFunction:
    def value(x, y):
        if is_lattice(x, y):
            return 0.0
        u = _LD(x) / _LD(y)
        d = u - np.rint(u)
        pd = _LD(math.pi) * d
        return float(np.cos(pd) / np.sin(pd) / _LD(y))

    return InvariantFunction(
        name="E11",
        value=value,
        singular_in_x=_lattice_predicate(),
        singular_points=_lattice_locator(),
        piecewise=True,
        integrable_in_x=False,
    )


def _make_e12() -> InvariantFunction:
    def value(x, y):
        k, _ = ratio_nearest(x, y)
        if k <= 0 and is_lattice(x, y):
            # on u in {0, -1, -2, ...}: log(y^u sqrt(2 pi y) / (-u)!)
            return k * math.log(y) + 0.5 * (_LOG_2PI + math.log(y)) - log_gamma_abs(1.0 - k)
        u = x / y
        return u * math.log(y) + log_gamma_abs(u) - 0.5 * (_LOG_2PI + math.log(y))

    def singular(x, y):
        k, _ = ratio_nearest(x, y)
        return k <= 0 and is_lattice(x, y)

    return InvariantFunction(
        name="E12",
        value=value,
        singular_in_x=singular,
        singular_points=_lattice_locator(nonpositive=True),
        piecewise=True,
    )


def _make_e13(s: float) -> InvariantFunction:
    s = _float_param("s", s)
    if 0.0 <= s <= 1.0:
        raise RejectedInputError(f"E13 needs s > 1 or s < 0, got s={s}")

    if s > 1.0:
        def value(x, y):
            # u and the zeta sum stay in extended precision: near u = 0 the
            # value grows like u^-s and the scale-sum identity needs the
            # leading terms of both sides to cancel to ~1e-8 absolute
            u = _LD(x) / _LD(y)
            if not u > 0.0:
                raise RejectedInputError(f"E13 with s > 1 needs x/y > 0, got {float(u)}")
            return float(_LD(y) ** _LD(-s) * _LD(_hurwitz_sum_branch(s, u)))

        return InvariantFunction(
            name="E13",
            value=value,
            params={"s": s},
            domain=lambda x, y: x > 0.0,
            singular_points=_lattice_locator(nonpositive=True),
            integrable_in_x=False,  # u^-s blows up non-integrably at u = 0
        )

    def value(x, y):
        return float(_LD(y) ** _LD(-s) * _LD(hurwitz_zeta(s, x / y)))

    return InvariantFunction(
        name="E13",
        value=value,
        params={"s": s},
        singular_points=_lattice_locator(),
        series_tolerance=1e-10,
        piecewise=True,  # periodized branch has lattice kinks
    )


def _make_e14() -> InvariantFunction:
    def value(x, y):
        u = _LD(x) / _LD(y)
        k2 = np.rint(2.0 * u)
        if abs(float(2.0 * u - k2)) <= 2.0 * LATTICE_RTOL * max(1.0, abs(float(u))):
            return 0.0 if int(k2) % 2 != 0 else 1.0
        return 1.0 if float(u - np.floor(u)) < 0.5 else -1.0

    return InvariantFunction(
        name="E14",
        value=value,
        singular_in_x=_lattice_predicate(halves=True),
        singular_points=_lattice_locator(halves=True),
        piecewise=True,
    )


def _int_param(name: str, v) -> int:
    try:
        if isinstance(v, bool):
            raise TypeError
        iv = int(v)
        if iv != v:
            raise ValueError
    except (TypeError, ValueError):
        raise RejectedInputError(f"parameter {name} must be an integer, got {v!r}") from None
    return iv


def _float_param(name: str, v) -> float:
    try:
        fv = float(v)
    except (TypeError, ValueError):
        raise RejectedInputError(f"parameter {name} must be a number, got {v!r}") from None
    if not math.isfinite(fv):
        raise RejectedInputError(f"parameter {name} must be finite, got {v!r}")
    return fv


_BUILDERS: dict[str, tuple[Callable[..., InvariantFunction], tuple[str, ...]]] = {
    "E1": (_make_e1, ()),
    "E2": (_make_e2, ("m",)),
    "E3a": (_make_e3a, ()),
    "E3b": (_make_e3b, ()),
    "E4": (_make_e4, ("a",)),
    "E5": (_make_e5, ("a",)),
    "E6": (_make_e6, ("r", "theta", "part")),
    "E7": (_make_e7, ("r",)),
    "E8": (_make_e8, ("r",)),
    "E9": (_make_e9, ("r",)),
    "E10": (_make_e10, ()),
    "E11": (_make_e11, ()),
    "E12": (_make_e12, ()),
    "E13": (_make_e13, ("s",)),
    "E14": (_make_e14, ()),
}

ENTRY_IDS = tuple(_BUILDERS)


def make(entry_id: str, **params) -> InvariantFunction:
    """Build a catalog entry by id with validated parameters."""
    if entry_id not in _BUILDERS:
        raise RejectedInputError(
            f"unknown catalog entry {entry_id!r}; known: {', '.join(ENTRY_IDS)}"
        )
    builder, names = _BUILDERS[entry_id]
    unknown = set(params) - set(names)
    if unknown:
        raise RejectedInputError(
            f"{entry_id} does not take parameter(s) {sorted(unknown)}; expects {list(names)}"
        )
    missing = [n for n in names if n not in params]
    if missing:
        raise RejectedInputError(f"{entry_id} requires parameter(s) {missing}")
    return builder(**params)


def standard_configs() -> list[tuple[str, dict]]:
    """The parameter matrix the verification suite sweeps per entry."""
    configs: list[tuple[str, dict]] = [("E1", {})]
    configs += [("E2", {"m": m}) for m in (1, 2, 3, 6)]
    configs += [("E3a", {}), ("E3b", {})]
    configs += [("E4", {"a": a}) for a in (2.0, 0.5, math.e)]
    configs += [("E5", {"a": a}) for a in (2.0, 0.5, math.e)]
    configs += [
        ("E6", {"r": r, "theta": th, "part": part})
        for r in (0.5, 2.0)
        for th in (0.0, 1.0)
        for part in ("cos", "sin")
    ]
    configs += [("E7", {"r": r}) for r in (0.5, 2.0)]
    configs += [("E8", {"r": r}) for r in (0.5, 2.0)]
    configs += [("E9", {"r": 0.5})]
    configs += [("E10", {}), ("E11", {})]
    configs += [("E12", {})]
    configs += [("E13", {"s": s}) for s in (2.0, 3.0, -1.0, -2.0)]
    configs += [("E14", {})]
    return configs
