#!/usr/bin/env python3
"""Disjoint covering systems and their invariant-function certificates.

A finite list of residue classes partitions the integers iff every residue
modulo the lcm is hit exactly once; the decision is exact.  An accepted
system satisfies sum_s f(x + a_s y, n_s y) = f(x, y) for every invariant f,
which makes a cheap numerical certificate.
"""

from invk import covering_identity_check, is_disjoint_covering, make, parse_system

for text in ("0/2,1/4,3/4", "0/2,0/3", "0/2,1/2", "0/2,1/4,3/8,7/8", "0/3,1/3,2/3"):
    system = parse_system(text)
    d = is_disjoint_covering(system)
    verdict = "partition" if d.accepted else f"rejected (witness {d.witness}, {d.witness_kind})"
    print(f"  {text:<22} lcm={d.lcm:<4} density={d.density!s:<6} -> {verdict}")

print("\ncertificates for the partition 0/2, 1/4, 3/4:")
system = parse_system("0/2,1/4,3/4")
for eid, params in (("E5", {"a": 2.0}), ("E2", {"m": 3}), ("E10", {}), ("E11", {})):
    f = make(eid, **params)
    rep = covering_identity_check(system, f, x=0.37, y=1.1, tol=1e-9)
    w = rep.worst_witness
    print(f"  {eid:<4} sum over classes = {w['lhs']:+.12f}   f(x, y) = {w['rhs']:+.12f}   pass={rep.passed}")

print("\nthe same identity specialized to (x, y) = (0, 1), exponential entry:")
rep = covering_identity_check(system, make("E5", a=2.0), 0.0, 1.0, tol=1e-12)
print(f"  1/3 + 2/15 + 8/15 = {rep.worst_witness['lhs']:.15f}")
