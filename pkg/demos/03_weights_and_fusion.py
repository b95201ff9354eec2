#!/usr/bin/env python3
"""Weights, the orbit correspondence, and the Verlinde fusion oracle.

Level-k dominant weights of A_{N-1} biject with orbit labels: the weight's
coefficients fix how often each value appears in the standard form, zeros
pad the rest.  Fusion coefficients for su(N) at level k come from the
Verlinde formula in ratio form and can be cross-checked against the su(2)
closed form and the orbit structure constants.
"""

from orbitfusion import (
    Params,
    Weight,
    enumerate_level_weights,
    fusion_coefficient,
    standard_form,
    structure_constant,
    su2_fusion_closed_form,
    weight_to_orbit,
)

params = Params(modulus=3, level=3)
print("Level-3 weights of A_2 and their orbits:")
for w in enumerate_level_weights(params):
    label = weight_to_orbit(w)
    print(f"  weight {w}  ->  label {label}  standard form {standard_form(label)}")

print("\nsu(2) level 2 fusion table N_(a),(b)^(c) from the Verlinde formula,")
print("with the closed-form value in brackets:")
for a in range(3):
    for b in range(3):
        row = []
        for c in range(3):
            verlinde = fusion_coefficient(Weight((a,), 2), Weight((b,), 2), Weight((c,), 2))
            closed = su2_fusion_closed_form(a, b, c, 2)
            row.append(f"{verlinde}[{closed}]")
        print(f"  a={a} b={b}: {' '.join(row)}")

print("\nFusion equals the orbit structure constant when one factor is a")
print("multiple of the first fundamental weight, e.g. mod 3 at level 3:")
lam = Weight((2, 0), 3)
mu = Weight((1, 1), 3)
for nu in enumerate_level_weights(params):
    fused = fusion_coefficient(mu, lam, nu)
    orbital = structure_constant(weight_to_orbit(mu), weight_to_orbit(lam), weight_to_orbit(nu))
    marker = "  <- match" if fused == orbital else "  <- MISMATCH"
    if fused or orbital:
        print(f"  nu={nu}: fusion {fused}, orbit {orbital}{marker}")
