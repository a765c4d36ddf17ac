#!/usr/bin/env python3
"""Limit and derivative identities for integrable invariant functions.

Three structural facts, each checked numerically here:

  1. int_x^{x+y} f(t, y) dt  =  lim_{a->0+} a f(x, a)
  2. f(x+y, y) - f(x, y)     =  lim_{a->0+} (f(x+a, a) - f(x, a))
  3. f(x, y) = int_x^{x-y} df/dy (t, y) dt, and
     df/dx = g(x-y, y) - g(x, y) with g = df/dy
"""

from invk import integrate, limit_scaled, make, step_difference, y_partial_fd
from invk.quadrature import extrapolate_limit

print("1. period integral vs scaled limit")
for eid, params, x, y in (
    ("E1", {}, 0.3, 1.0),
    ("E3a", {}, 0.7, 1.0),
    ("E2", {"m": 2}, 0.5, 1.0),
    ("E9", {"r": 0.5}, 0.0, 1.0),
):
    f = make(eid, **params)
    quad = integrate(lambda t: f.value(t, y), x, x + y, tol=1e-10,
                     interior_singularities=f.singular_points(y, x, x + y))
    lim = limit_scaled(f, x)
    print(f"  {eid:<4} integral {quad.value:+.8f}   limit {lim.value:+.8f}"
          f"   ({lim.steps} steps, smooth={not f.piecewise})")

print("\n2. step difference vs small-scale limit")
for eid, params in (("E2", {"m": 1}), ("E3a", {}), ("E3b", {}), ("E5", {"a": 2.0})):
    f = make(eid, **params)
    x, y = 0.6, 1.4
    delta = step_difference(f)(x, y)
    lim = extrapolate_limit(lambda a: f.value(x + a, a) - f.value(x, a),
                            smooth=not f.piecewise)
    print(f"  {eid:<4} delta {delta:+.10f}   limit {lim.value:+.10f}")

print("\n3. recovering f from its y-derivative (analytic rule or central difference)")
for eid, params in (("E2", {"m": 2}), ("E5", {"a": 2.0}), ("E9", {"r": 0.5})):
    f = make(eid, **params)
    x, y = 0.8, 1.2
    quad = integrate(lambda t: y_partial_fd(f, t, y), x, x - y, tol=1e-9)
    print(f"  {eid:<4} f(x,y) = {f.value(x, y):+.10f}   integral of df/dy = {quad.value:+.10f}")
