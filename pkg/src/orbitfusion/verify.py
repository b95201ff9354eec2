"""Exhaustive desk-scale scans over the package's central claims.

Five scan kinds are available:

* multiplicity-free     -- every structure constant with a row second factor
                           is 0 or 1.
* orbit-monotone        -- appending a zero coordinate to all three orbits
                           never decreases a structure constant (row second
                           factor).
* orbit-fusion-equality -- fusion coefficients equal orbit structure
                           constants when one factor is a multiple of the
                           first fundamental weight.
* fusion-monotone       -- fusion coefficients never decrease when the
                           level goes up by one (row factor).
* algorithm-equivalence -- the three product algorithms agree on every
                           label pair.

The first four claims are only asserted with the row restriction.  With
include_nonrow_b the scans also visit the unrestricted cases, but any
failures there land in the report's `evidence` list, never in `violations`,
and never affect pass/fail.  Violation records carry full witness data
(the row-restricted operand always sits in slot b) so a single failing case
can be rechecked by hand.

Scans are deterministic: cases are visited in a canonical nested order and
per-level partial results are merged in level order, so a multi-threaded
run produces the identical report.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import OrbitLabel, Params, enumerate_labels, is_row_label
from .fusion import fusion_table
from .product import append_zero, product
from .weights import Weight, is_row_weight, lift_level, weight_to_orbit

SCAN_KINDS = (
    "multiplicity-free",
    "orbit-monotone",
    "orbit-fusion-equality",
    "fusion-monotone",
    "algorithm-equivalence",
)


@dataclass(frozen=True)
class ScanSpec:
    kind: str
    modulus: int
    k_max: int
    include_nonrow_b: bool = False

    def __post_init__(self):
        if self.kind not in SCAN_KINDS:
            raise ValueError(f"unknown scan kind {self.kind!r}, expected one of {SCAN_KINDS}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if self.k_max < 1:
            raise ValueError(f"k_max must be at least 1, got {self.k_max}")


@dataclass(frozen=True)
class Violation:
    """One failing case: level, the three witnesses, and both compared values.

    For orbit scans a/b/c are multiplicity vectors; for fusion scans they
    are fundamental-weight coefficient vectors.  Slot b holds the operand
    the row restriction applies to.
    """

    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass
class Report:
    """Outcome of one scan: exact case count, violations, evidence, timing."""

    spec: ScanSpec
    cases_checked: int
    violations: list[Violation]
    evidence: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


def run_scan(spec: ScanSpec, threads: int = 1) -> Report:
    """Visit every case of the claim up to spec.k_max and report.

    `threads` partitions the work by level; results never depend on it.
    """
    worker = _WORKERS[spec.kind]
    start = time.perf_counter()
    levels = range(1, spec.k_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(lambda k: worker(spec, k), levels))
    else:
        partials = [worker(spec, k) for k in levels]
    cases = 0
    violations: list[Violation] = []
    evidence: list[Violation] = []
    for part_cases, part_violations, part_evidence in partials:
        cases += part_cases
        violations.extend(part_violations)
        evidence.extend(part_evidence)
    elapsed = time.perf_counter() - start
    return Report(spec, cases, violations, evidence, elapsed)


def _row_labels(params: Params) -> list[OrbitLabel]:
    # standard forms (1^m, 0^{k-m}) for m = 0..k, ascending in m
    out = []
    for m in range(params.level + 1):
        mults = [0] * params.modulus
        mults[0] = params.level - m
        mults[1] = m
        out.append(OrbitLabel(tuple(mults)))
    return out


def _scan_multiplicity_free(spec: ScanSpec, k: int):
    params = Params(spec.modulus, k)
    labels = list(enumerate_labels(params))
    rows = _row_labels(params)
    cases = 0
    violations = []
    evidence = []
    for a in labels:
        for b in rows:
            expansion = product(a, b)
            for c in labels:
                cases += 1
                value = expansion[c]
                if value > 1:
                    violations.append(Violation(k, a.mults, b.mults, c.mults, value, 1))
    if spec.include_nonrow_b:
        for a in labels:
            for b in labels:
                if is_row_label(b):
                    continue
                expansion = product(a, b)
                for c in labels:
                    cases += 1
                    value = expansion[c]
                    if value > 1:
                        evidence.append(Violation(k, a.mults, b.mults, c.mults, value, 1))
    return cases, violations, evidence


def _scan_orbit_monotone(spec: ScanSpec, k: int):
    params = Params(spec.modulus, k)
    labels = list(enumerate_labels(params))
    rows = _row_labels(params)
    cases = 0
    violations = []
    evidence = []

    def compare(a, b, sink):
        nonlocal cases
        low = product(a, b)
        high = product(append_zero(a), append_zero(b))
        for c in labels:
            cases += 1
            lhs = low[c]
            rhs = high[append_zero(c)]
            if lhs > rhs:
                sink.append(Violation(k, a.mults, b.mults, c.mults, lhs, rhs))

    for a in labels:
        for b in rows:
            compare(a, b, violations)
    if spec.include_nonrow_b:
        for a in labels:
            for b in labels:
                if not is_row_label(b):
                    compare(a, b, evidence)
    return cases, violations, evidence


def _scan_orbit_fusion_equality(spec: ScanSpec, k: int):
    table = fusion_table(spec.modulus, k)
    weights = table.weights
    cases = 0
    violations = []
    evidence = []

    def compare(lam: Weight, sink):
        nonlocal cases
        lam_orbit = weight_to_orbit(lam)
        for mu in weights:
            expansion = product(weight_to_orbit(mu), lam_orbit)
            for nu in weights:
                cases += 1
                lhs = table.coefficient(mu, lam, nu)
                rhs = expansion[weight_to_orbit(nu)]
                if lhs != rhs:
                    sink.append(Violation(k, mu.coeffs, lam.coeffs, nu.coeffs, lhs, rhs))

    for lam in weights:
        if is_row_weight(lam):
            compare(lam, violations)
    if spec.include_nonrow_b:
        for lam in weights:
            if not is_row_weight(lam):
                compare(lam, evidence)
    return cases, violations, evidence


def _scan_fusion_monotone(spec: ScanSpec, k: int):
    low = fusion_table(spec.modulus, k)
    high = fusion_table(spec.modulus, k + 1)
    weights = low.weights
    cases = 0
    violations = []
    evidence = []

    def compare(lam: Weight, sink):
        nonlocal cases
        for mu in weights:
            for nu in weights:
                cases += 1
                lhs = low.coefficient(mu, lam, nu)
                rhs = high.coefficient(lift_level(mu), lift_level(lam), lift_level(nu))
                if lhs > rhs:
                    sink.append(Violation(k, mu.coeffs, lam.coeffs, nu.coeffs, lhs, rhs))

    for lam in weights:
        if is_row_weight(lam):
            compare(lam, violations)
    if spec.include_nonrow_b:
        for lam in weights:
            if not is_row_weight(lam):
                compare(lam, evidence)
    return cases, violations, evidence


def _scan_algorithm_equivalence(spec: ScanSpec, k: int):
    params = Params(spec.modulus, k)
    labels = list(enumerate_labels(params))
    cases = 0
    violations = []
    for a in labels:
        for b in labels:
            reference = product(a, b, "blockwise")
            others = {name: product(a, b, name) for name in ("definition", "list")}
            keys = set(reference.coefficients)
            for expansion in others.values():
                keys.update(expansion.coefficients)
            for c in sorted(keys):
                cases += 1
                rhs = reference[c]
                for expansion in others.values():
                    lhs = expansion[c]
                    if lhs != rhs:
                        violations.append(Violation(k, a.mults, b.mults, c.mults, lhs, rhs))
    return cases, violations, []


_WORKERS = {
    "multiplicity-free": _scan_multiplicity_free,
    "orbit-monotone": _scan_orbit_monotone,
    "orbit-fusion-equality": _scan_orbit_fusion_equality,
    "fusion-monotone": _scan_fusion_monotone,
    "algorithm-equivalence": _scan_algorithm_equivalence,
}
