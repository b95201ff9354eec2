#!/usr/bin/env python3
"""Tour of the orbit layer: labels, standard forms, sizes, enumeration.

Tuples of length k with entries mod N fall into orbits under coordinate
permutation.  Each orbit is named by its multiplicity vector; the weakly
decreasing member is its standard form.
"""

from orbitfusion import (
    OrbitLabel,
    Params,
    enumerate_labels,
    enumerate_orbit,
    label_of_tuple,
    orbit_size,
    standard_form,
)

params = Params(modulus=3, level=4)
print(f"All orbits of Z_{params.modulus}^{params.level}:")
total = 0
for label in enumerate_labels(params):
    size = orbit_size(label)
    total += size
    print(f"  label {label}  standard form {standard_form(label)}  size {size}")
print(f"Sizes sum to {total} = {params.modulus}^{params.level} "
      f"= {params.modulus ** params.level}: the orbits partition the group.\n")

label = OrbitLabel((1, 2, 1))
print(f"Every element of the orbit {label}, in decreasing lex order:")
for t in enumerate_orbit(label):
    print("  ", t)
print("First row is the standard form; counting occurrences recovers the label:",
      label_of_tuple(params, standard_form(label)))
