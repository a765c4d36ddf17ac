#!/usr/bin/env python3
"""Tour of the invariant-function catalog.

An invariant function satisfies sum_{r<n} f(x + r*y, n*y) = f(x, y) for every
positive integer n.  This script builds each catalog family, evaluates it at
a sample point, and shows the defining identity telescoping for n = 1..5.
"""

import math

from invk import EvalPoint, evaluate, make, standard_configs

x, y = 0.7, 1.3

print(f"catalog values at (x, y) = ({x}, {y})\n")
print(f"{'entry':<10} {'params':<34} {'value':>14}")
for eid, params in standard_configs():
    f = make(eid, **params)
    if f.domain is not None and not f.domain(x, y):
        continue
    print(f"{eid:<10} {str(params):<34} {evaluate(f, EvalPoint(x, y)):>14.8f}")

print("\nthe defining identity, spelled out for the exponential entry E5(a=2):")
f = make("E5", a=2.0)
rhs = f.value(x, y)
for n in range(1, 6):
    terms = [f.value(x + r * y, n * y) for r in range(n)]
    lhs = math.fsum(terms)
    pieces = " + ".join(f"{t:.6f}" for t in terms)
    print(f"  n={n}:  {pieces} = {lhs:.10f}   (target {rhs:.10f})")

print("\nbranch-defined entries pick a lattice value instead of diverging:")
e10 = make("E10")
print(f"  log-sine at x/y = 2 (on lattice):    {e10.value(2.0, 1.0):+.6f}  (-log y)")
print(f"  log-sine just off the lattice:       {e10.value(2.0 + 1e-5, 1.0):+.6f}")

print("\nthe sign entry E14 is the catalog's known defect: its identity only")
print("holds for odd n. A counterexample at x=0.2, y=1, n=2:")
e14 = make("E14")
print(f"  f(0.1 scale 2) + f(0.6 scale 2) = {e14.value(0.2, 2.0) + e14.value(1.2, 2.0):+.0f}"
      f"   but f(x, y) = {e14.value(0.2, 1.0):+.0f}")
