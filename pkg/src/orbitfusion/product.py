"""Orbit products and their structure constants, by three algorithms.

The product of orbits [a] and [b] expands as a finite nonnegative-integer
combination of orbits.  The coefficient of [c] counts the orbits of the
diagonal permutation action on

    {(x, y, z) in [a] x [b] x [c] | x + y = z componentwise mod N}.

Three routes compute the same expansion and cross-validate each other:

* definition -- brute force straight from the counting problem above.  A
  triple's orbit is exactly the multiset of its columns (x_i, y_i, z_i), so
  distinct sorted column multisets are counted per the label of z.
* list -- fix the standard form of [a] and walk the elements y of [b].  The
  stabiliser of the standard form is the product of symmetric groups on its
  constant blocks, so sorting y within each block is a canonical form; one
  z = standard + y is counted per distinct canonical form.  (The z side
  needs no separate check: z is determined by y once the first factor is
  pinned, so matching y's force matching z's.)
* blockwise -- no tuples at all.  A stabiliser class of y is an assignment
  of a multiset of residues to each constant block, sizes matching and the
  disjoint union recovering b's multiset; the z multiset is read off by
  shifting each block's residues by the block value.  Enumerated by
  distributing b's multiplicity vector over the blocks.

blockwise is the default and the fastest; definition and list enumerate
orbit elements and are bounded by the enumeration cap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import OrbitLabel, Params, enumerate_orbit, label_of_tuple, standard_form
from .errors import ParamsMismatch

METHODS = ("definition", "list", "blockwise")
DEFAULT_METHOD = "blockwise"


@dataclass
class ProductExpansion:
    """Finite map from orbit label to its (positive) coefficient."""

    params: Params
    coefficients: dict[OrbitLabel, int] = field(default_factory=dict)

    def __getitem__(self, label: OrbitLabel) -> int:
        return self.coefficients.get(label, 0)

    def total(self) -> int:
        """Sum of all coefficients: the length of the redundancy-free list."""
        return sum(self.coefficients.values())

    def sorted_items(self) -> list[tuple[OrbitLabel, int]]:
        return sorted(self.coefficients.items())

    def __str__(self) -> str:
        return " + ".join(f"{m}*{c}" for c, m in self.sorted_items()) or "0"


def product(a: OrbitLabel, b: OrbitLabel, method: str = DEFAULT_METHOD) -> ProductExpansion:
    """Expansion of [a] x [b] as a combination of orbit labels."""
    if a.modulus != b.modulus or a.level != b.level:
        raise ParamsMismatch(
            f"operands disagree: {a} is (N={a.modulus}, k={a.level}), "
            f"{b} is (N={b.modulus}, k={b.level})"
        )
    if method == "definition":
        coeffs = _product_definition(a, b)
    elif method == "list":
        coeffs = _product_list(a, b)
    elif method == "blockwise":
        coeffs = _product_blockwise(a, b)
    else:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    return ProductExpansion(a.params, dict(coeffs))


def structure_constant(
    a: OrbitLabel, b: OrbitLabel, c: OrbitLabel, method: str = DEFAULT_METHOD
) -> int:
    """Coefficient of [c] in [a] x [b] (0 when absent)."""
    if c.modulus != a.modulus or c.level != a.level:
        raise ParamsMismatch(
            f"target {c} is (N={c.modulus}, k={c.level}), "
            f"operands are (N={a.modulus}, k={a.level})"
        )
    return product(a, b, method)[c]


def append_zero(label: OrbitLabel) -> OrbitLabel:
    """Embed a level-k orbit at level k+1 by appending a 0 coordinate.

    Only the multiplicity of the residue 0 grows; the standard form gains a
    trailing zero.
    """
    mults = list(label.mults)
    mults[0] += 1
    return OrbitLabel(tuple(mults))


def _product_definition(a: OrbitLabel, b: OrbitLabel) -> Counter:
    modulus = a.modulus
    params = a.params
    seen = set()
    coeffs: Counter = Counter()
    for x in enumerate_orbit(a):
        for y in enumerate_orbit(b):
            z = tuple((xi + yi) % modulus for xi, yi in zip(x, y))
            columns = tuple(sorted(zip(x, y, z)))
            if columns in seen:
                continue
            seen.add(columns)
            coeffs[label_of_tuple(params, z)] += 1
    return coeffs


def _blocks_of(form: tuple[int, ...]) -> list[tuple[int, int]]:
    # Maximal runs of equal values; contiguous because the form is sorted.
    blocks = []
    start = 0
    for i in range(1, len(form) + 1):
        if i == len(form) or form[i] != form[start]:
            blocks.append((start, i))
            start = i
    return blocks


def _product_list(a: OrbitLabel, b: OrbitLabel) -> Counter:
    modulus = a.modulus
    params = a.params
    xhat = standard_form(a)
    blocks = _blocks_of(xhat)
    seen = set()
    coeffs: Counter = Counter()
    for y in enumerate_orbit(b):
        canon_parts = []
        for lo, hi in blocks:
            canon_parts.extend(sorted(y[lo:hi], reverse=True))
        canon = tuple(canon_parts)
        if canon in seen:
            continue
        seen.add(canon)
        z = tuple((xhat[i] + canon[i]) % modulus for i in range(len(xhat)))
        coeffs[label_of_tuple(params, z)] += 1
    return coeffs


def _product_blockwise(a: OrbitLabel, b: OrbitLabel) -> Counter:
    modulus = a.modulus
    blocks = [(v, a.mults[v]) for v in range(modulus) if a.mults[v] > 0]
    capacities = [size for _, size in blocks]
    b_counts = b.mults
    z_mults = [0] * modulus
    coeffs: Counter = Counter()

    def fill_residue(residue: int) -> None:
        if residue == modulus:
            # capacities are exhausted exactly since both sides sum to k
            coeffs[OrbitLabel(tuple(z_mults))] += 1
            return
        distribute(residue, 0, b_counts[residue])

    def distribute(residue: int, bi: int, remaining: int) -> None:
        if bi == len(blocks):
            if remaining == 0:
                fill_residue(residue + 1)
            return
        value = blocks[bi][0]
        target = (value + residue) % modulus
        for m in range(min(remaining, capacities[bi]) + 1):
            capacities[bi] -= m
            z_mults[target] += m
            distribute(residue, bi + 1, remaining - m)
            capacities[bi] += m
            z_mults[target] -= m

    fill_residue(0)
    return coeffs
