"""Orbits of length-k residue tuples under coordinate permutation.

The symmetric group on k letters acts on Z_N^k by permuting coordinates.
An orbit is the set of tuples sharing one multiplicity vector
(a_0, ..., a_{N-1}), where a_j counts occurrences of the residue j and the
entries sum to k.  That vector is the orbit's canonical name throughout the
package; the unique weakly decreasing member
((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}) is its standard form.

Everything here is pure and exact: orbit sizes are multinomials in Python's
unbounded integers, and the enumerators are restartable generators with a
configurable size cap.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

from .errors import ArityMismatch, BoundExceeded, EntryOutOfRange, SumMismatch

DEFAULT_ENUM_CAP = 10_000_000
ENUM_CAP_ENV = "ORBIT_FUSION_ENUM_CAP"


def enumeration_cap() -> int:
    """Largest orbit the element enumerator will materialise.

    Overridable through the ORBIT_FUSION_ENUM_CAP environment variable;
    read at call time so tests and long-running processes can adjust it.
    """
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class Params:
    """Problem size: tuples of length `level` with entries mod `modulus`."""

    modulus: int
    level: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if self.level < 1:
            raise ValueError(f"level must be at least 1, got {self.level}")


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """Multiplicity vector naming one orbit.

    Entry j counts the occurrences of residue j, so the modulus is the
    vector's length and the level is its sum.  Labels are immutable,
    hashable, and ordered lexicographically on the vector, which makes them
    the canonical dictionary key for expansions and reports.
    """

    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) < 2:
            raise ValueError("a label needs at least two multiplicities (modulus >= 2)")
        if any(m < 0 for m in self.mults):
            raise ValueError(f"negative multiplicity in {self.mults}")
        if sum(self.mults) < 1:
            raise ValueError("multiplicities sum to zero (level >= 1 required)")

    @property
    def modulus(self) -> int:
        return len(self.mults)

    @property
    def level(self) -> int:
        return sum(self.mults)

    @property
    def params(self) -> Params:
        return Params(len(self.mults), sum(self.mults))

    def __str__(self) -> str:
        return "(%s)" % ",".join(str(m) for m in self.mults)


def make_label(params: Params, mults) -> OrbitLabel:
    """Validate `mults` against `params` and wrap it as a label."""
    seq = tuple(mults)
    if len(seq) != params.modulus:
        raise ArityMismatch(
            f"expected {params.modulus} multiplicities, got {len(seq)}"
        )
    if sum(seq) != params.level:
        raise SumMismatch(
            f"multiplicities sum to {sum(seq)}, expected level {params.level}"
        )
    return OrbitLabel(seq)


def standard_form(label: OrbitLabel) -> tuple[int, ...]:
    """Weakly decreasing representative of the orbit."""
    out = []
    for value in range(label.modulus - 1, -1, -1):
        out.extend([value] * label.mults[value])
    return tuple(out)


def label_of_tuple(params: Params, t) -> OrbitLabel:
    """Label of the orbit containing tuple `t` (occurrence counts)."""
    seq = tuple(t)
    if len(seq) != params.level:
        raise ArityMismatch(f"tuple has length {len(seq)}, expected {params.level}")
    counts = [0] * params.modulus
    for entry in seq:
        if not 0 <= entry < params.modulus:
            raise EntryOutOfRange(
                f"entry {entry} not a residue mod {params.modulus}"
            )
        counts[entry] += 1
    return OrbitLabel(tuple(counts))


def is_row_label(label: OrbitLabel) -> bool:
    """True iff the standard form is (1^m, 0^{k-m}), i.e. only 0s and 1s occur."""
    return all(m == 0 for m in label.mults[2:])


def orbit_size(label: OrbitLabel) -> int:
    """Number of distinct tuples in the orbit: k! / (a_0! ... a_{N-1}!)."""
    size = math.factorial(label.level)
    for m in label.mults:
        size //= math.factorial(m)
    return size


def enumerate_orbit(label: OrbitLabel, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """All tuples of the orbit in decreasing lexicographic order.

    The first tuple yielded is the standard form and the total count is
    orbit_size(label).  Raises BoundExceeded up front when the orbit is
    larger than `cap` (default: enumeration_cap()).
    """
    limit = enumeration_cap() if cap is None else cap
    size = orbit_size(label)
    if size > limit:
        raise BoundExceeded(f"orbit of {label} has {size} elements, cap is {limit}")
    return _orbit_iter(standard_form(label))


def _orbit_iter(start: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Repeatedly steps to the previous multiset permutation in lex order,
    # starting from the weakly decreasing arrangement (the lex maximum).
    t = list(start)
    k = len(t)
    yield tuple(t)
    while True:
        i = k - 2
        while i >= 0 and t[i] <= t[i + 1]:
            i -= 1
        if i < 0:
            return
        j = k - 1
        while t[j] >= t[i]:
            j -= 1
        t[i], t[j] = t[j], t[i]
        t[i + 1 :] = reversed(t[i + 1 :])
        yield tuple(t)


def enumerate_labels(params: Params) -> Iterator[OrbitLabel]:
    """All C(k+N-1, N-1) orbit labels for (N, k), each exactly once.

    Ordered so the corresponding standard forms appear in decreasing
    lexicographic order, matching the element enumerator's convention.
    """
    for rev in _compositions_desc(params.level, params.modulus):
        yield OrbitLabel(rev[::-1])


def _compositions_desc(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # Weak compositions of `total` into `parts` parts, descending lex order.
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions_desc(total - first, parts - 1):
            yield (first,) + rest


def label_count(params: Params) -> int:
    """Number of orbits for (N, k): C(k+N-1, N-1)."""
    return math.comb(params.level + params.modulus - 1, params.modulus - 1)
