"""Shared brute-force oracles, kept independent of the package internals.

Everything here enumerates the full group Z_N^k with itertools.product and
counts orbits from first principles, so the package's multiset-permutation
and blockwise machinery is never on both sides of an assertion.
"""

import itertools
from collections import Counter


def mults_of(t, modulus):
    """Occurrence counts of each residue in the tuple."""
    return tuple(sum(1 for e in t if e == j) for j in range(modulus))


def group_by_orbit(modulus, level):
    """Map multiplicity vector -> list of all member tuples, via full N^k sweep."""
    orbits = {}
    for t in itertools.product(range(modulus), repeat=level):
        orbits.setdefault(mults_of(t, modulus), []).append(t)
    return orbits


def brute_product(modulus, level, a_mults, b_mults):
    """Structure constants of [a] x [b] by raw triple-orbit counting.

    Walks every pair (x, y) in [a] x [b], forms z = x + y mod N, and counts
    distinct sorted column multisets (x_i, y_i, z_i) per the multiplicity
    vector of z.
    """
    orbits = group_by_orbit(modulus, level)
    seen = set()
    coeffs = Counter()
    for x in orbits[tuple(a_mults)]:
        for y in orbits[tuple(b_mults)]:
            z = tuple((xi + yi) % modulus for xi, yi in zip(x, y))
            key = tuple(sorted(zip(x, y, z)))
            if key not in seen:
                seen.add(key)
                coeffs[mults_of(z, modulus)] += 1
    return dict(coeffs)


def brute_nonredundant_count(modulus, level, a_mults, b_mults):
    """Length of the redundancy-free list: distinct images of [b] under the
    symmetry of [a]'s standard form, counted by sorting within its blocks."""
    orbits = group_by_orbit(modulus, level)
    xhat = tuple(
        v for v in range(modulus - 1, -1, -1) for _ in range(a_mults[v])
    )
    canon = set()
    for y in orbits[tuple(b_mults)]:
        parts = []
        start = 0
        while start < level:
            end = start
            while end < level and xhat[end] == xhat[start]:
                end += 1
            parts.extend(sorted(y[start:end]))
            start = end
        canon.add(tuple(parts))
    return len(canon)


def su3_level1_group_ring(lam_coeffs, mu_coeffs, nu_coeffs):
    """Level-1 su(3) fusion is the Z_3 group ring on {0, w1, w2}."""
    charge = lambda c: (c[0] + 2 * c[1]) % 3
    return 1 if (charge(lam_coeffs) + charge(mu_coeffs)) % 3 == charge(nu_coeffs) else 0
