#!/usr/bin/env python3
"""The orbit product, three ways.

The product of two orbits expands over orbits with nonnegative integer
coefficients: the coefficient of [c] counts the orbits of triples
(x, y, z) with x in [a], y in [b], z in [c] and x + y = z mod N.  The
package computes it by brute-force triple counting ("definition"), by
canonicalising the second factor against the first factor's symmetry
("list"), and by distributing multiplicities over the standard form's
constant blocks without touching tuples at all ("blockwise").
"""

from orbitfusion import METHODS, OrbitLabel, product, standard_form, structure_constant

a = OrbitLabel((1, 1, 1))
print(f"Worked example mod 3, level 3: square of the orbit {a} "
      f"with standard form {standard_form(a)}\n")
for method in METHODS:
    expansion = product(a, a, method)
    print(f"  {method:10s}: {a} x {a} = {expansion}")
print("\nAll three agree; the headline coefficient is the structure constant")
print(f"  M[{a},{a} -> {a}] = {structure_constant(a, a, a)}")

print("\nThe all-zero orbit is the identity:")
zero = OrbitLabel((3, 0, 0))
for other in (a, OrbitLabel((0, 3, 0)), OrbitLabel((1, 0, 2))):
    print(f"  {zero} x {other} = {product(zero, other)}")

print("\nCoefficient totals count the redundancy-free expansion length:")
b = OrbitLabel((2, 1, 0))
expansion = product(a, b)
print(f"  {a} x {b} = {expansion}   (total {expansion.total()})")
