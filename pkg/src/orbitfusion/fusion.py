"""su(N) level-k fusion coefficients via the Verlinde formula, ratio form.

For each weight sigma in the level-k alcove we build N evaluation points on
the unit circle from the shifted, traceless partition coordinates of sigma:

    parts      p_j = a_j + a_{j+1} + ... + a_{N-1},   p_N = 0
    shifted    phi_t = p_t + N - t - (|p| + N(N-1)/2) / N
    points     x_t = exp(-2*pi*i * phi_t / (k + N))

Characters are Schur determinant ratios at those points,

    chi_lambda(sigma) = det(x_t ** (p_s(lambda) + N - s)) / det(x_t ** (N - s)),

and each sigma carries the weight 1 / sum_rho |chi_rho(sigma)|^2.  The
fusion coefficient is then

    N_{lambda,mu}^nu = sum_sigma chi_lambda chi_mu conj(chi_nu) * weight,

which must land within TOLERANCE of a nonnegative integer; anything farther
raises NumericalDrift rather than being rounded silently.  Only character
ratios enter, so no S-matrix normalisation constant can be wrong.  The
shifted coordinates of distinct alcove weights are distinct mod k+N, so the
Vandermonde denominators never vanish.

Determinants are expanded directly over permutations; at the intended desk
scale the matrices are at most a handful of rows.
"""

from __future__ import annotations

import cmath
import itertools
import math
from functools import lru_cache
from typing import Iterator

from .core import Params
from .errors import NumericalDrift, ParamsMismatch, RangeError
from .weights import Weight

TOLERANCE = 1e-6


def enumerate_level_weights(params: Params) -> Iterator[Weight]:
    """All weights with coefficient sum <= k, in a fixed deterministic order.

    Multiples of the first fundamental weight come first; the count is
    C(k+N-1, N-1), matching the orbit labels.
    """
    for key in _bounded_keys(params.modulus - 1, params.level):
        yield Weight(key[::-1], params.level)


def _bounded_keys(positions: int, budget: int) -> Iterator[tuple[int, ...]]:
    # ascending lex on (a_{N-1}, ..., a_1) with sum <= budget
    if positions == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _bounded_keys(positions - 1, budget - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def _det(matrix: list[list[complex]]) -> complex:
    n = len(matrix)
    total = 0j
    for perm, sign in _signed_permutations(n):
        term = complex(sign)
        for row in range(n):
            term *= matrix[row][perm[row]]
        total += term
    return total


def _partition_parts(w: Weight) -> tuple[int, ...]:
    # p_j = sum of coefficients from j on; p_N = 0
    coeffs = w.coeffs
    parts = []
    tail = 0
    for c in reversed(coeffs):
        tail += c
        parts.append(tail)
    parts.reverse()
    parts.append(0)
    return tuple(parts)


class FusionTable:
    """Cached Verlinde data for all level-k weights of su(N).

    Builds the full character table chi_rho(sigma) once; individual
    coefficients are then short weighted sums over the alcove.
    """

    def __init__(self, modulus: int, level: int):
        self.modulus = modulus
        self.level = level
        self.weights = tuple(enumerate_level_weights(Params(modulus, level)))
        self._index = {w.coeffs: i for i, w in enumerate(self.weights)}
        n = modulus
        height = level + n
        point_angles = []
        for sigma in self.weights:
            parts = _partition_parts(sigma)
            shift = (sum(parts) + n * (n - 1) / 2) / n
            point_angles.append(
                [-2 * math.pi * (parts[t] + n - 1 - t - shift) / height for t in range(n)]
            )
        denominators = [
            _det([[cmath.exp(1j * angles[t] * (n - 1 - s)) for t in range(n)] for s in range(n)])
            for angles in point_angles
        ]
        self._chi = []
        for lam in self.weights:
            exponents = [p + n - 1 - s for s, p in enumerate(_partition_parts(lam))]
            row = []
            for angles, den in zip(point_angles, denominators):
                num = _det(
                    [[cmath.exp(1j * angles[t] * e) for t in range(n)] for e in exponents]
                )
                row.append(num / den)
            self._chi.append(row)
        count = len(self.weights)
        self._weight_factor = [
            1.0 / sum(abs(self._chi[i][j]) ** 2 for i in range(count))
            for j in range(count)
        ]

    def _slot(self, w: Weight) -> int:
        if w.level != self.level or w.modulus != self.modulus:
            raise ParamsMismatch(
                f"weight {w} at level {w.level} does not belong to the "
                f"(N={self.modulus}, k={self.level}) table"
            )
        return self._index[w.coeffs]

    def raw_coefficient(self, lam: Weight, mu: Weight, nu: Weight) -> complex:
        """Unrounded Verlinde sum, for drift diagnostics."""
        i, j, l = self._slot(lam), self._slot(mu), self._slot(nu)
        return sum(
            self._chi[i][s] * self._chi[j][s] * self._chi[l][s].conjugate()
            * self._weight_factor[s]
            for s in range(len(self.weights))
        )

    def coefficient(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        return _round_checked(self.raw_coefficient(lam, mu, nu))


def _round_checked(raw: complex) -> int:
    nearest = max(0, round(raw.real))
    if abs(raw.imag) > TOLERANCE or abs(raw.real - nearest) > TOLERANCE:
        raise NumericalDrift(
            f"raw fusion value {raw!r} not within {TOLERANCE} of a nonnegative integer"
        )
    return nearest


@lru_cache(maxsize=64)
def fusion_table(modulus: int, level: int) -> FusionTable:
    return FusionTable(modulus, level)


def fusion_coefficient(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Multiplicity of nu in the level-k fusion product of lam and mu."""
    _check_query(lam, mu, nu)
    return fusion_table(lam.modulus, lam.level).coefficient(lam, mu, nu)


def fusion_coefficient_raw(lam: Weight, mu: Weight, nu: Weight) -> complex:
    """The raw complex Verlinde sum behind fusion_coefficient."""
    _check_query(lam, mu, nu)
    return fusion_table(lam.modulus, lam.level).raw_coefficient(lam, mu, nu)


def _check_query(lam: Weight, mu: Weight, nu: Weight) -> None:
    for w in (mu, nu):
        if w.modulus != lam.modulus or w.level != lam.level:
            raise ParamsMismatch(
                f"weights {lam}@{lam.level}, {mu}@{mu.level}, {nu}@{nu.level} "
                "must share modulus and level"
            )


def su2_fusion_closed_form(a: int, b: int, c: int, k: int) -> int:
    """Truncated angular-momentum rule for su(2) at level k.

    Arguments are the multiples of the fundamental weight.  Returns 1 iff
    |a-b| <= c <= min(a+b, 2k-a-b) with c = a+b (mod 2), else 0.  The
    factors a and b must be valid level-k multiples; the target c may
    exceed k, where the two upper bounds force 0 on their own.
    """
    for arg in (a, b):
        if not 0 <= arg <= k:
            raise RangeError(f"factor {arg} outside [0, {k}]")
    if c < 0:
        raise RangeError(f"target {c} is negative")
    if (a + b - c) % 2 != 0:
        return 0
    return 1 if abs(a - b) <= c <= min(a + b, 2 * k - a - b) else 0
