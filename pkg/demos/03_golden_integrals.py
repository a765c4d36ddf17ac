#!/usr/bin/env python3
"""The three golden integrals the adaptive quadrature reproduces.

The log-sine integrand is singular at 0; the integrator never samples panel
endpoints and refines toward the singular end geometrically, so no special
handling is needed at call sites.
"""

from invk import golden_integral

cases = [
    ("euler", {}, "int_0^{pi/2} log sin t dt"),
    ("poisson", {"r": 2.0}, "int_0^pi log(1 - 4 cos t + 4) dt"),
    ("poisson", {"r": 0.5}, "int_0^pi log(1 - cos t + 1/4) dt"),
    ("raabe", {"a": 1.0}, "int_1^2 log Gamma(t) dt"),
    ("raabe", {"a": 2.0}, "int_2^3 log Gamma(t) dt"),
    ("raabe", {"a": 0.5}, "int_{1/2}^{3/2} log Gamma(t) dt"),
]

print(f"{'integral':<34} {'computed':>16} {'expected':>16} {'abs err':>10}")
for name, params, pretty in cases:
    value, expected = golden_integral(name, **params)
    print(f"{pretty:<34} {value:>16.12f} {expected:>16.12f} {abs(value - expected):>10.2e}")
