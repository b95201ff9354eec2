"""Bridge between level-k dominant weights of A_{N-1} and orbit labels.

A weight a_1*w_1 + ... + a_{N-1}*w_{N-1} of level k (coefficient sum at most
k) corresponds to the orbit whose standard form repeats the value j exactly
a_j times and pads with zeros up to length k.  The map is a bijection, and
raising the ambient level by one matches appending a zero coordinate to the
orbit.  Weights carry their level explicitly because the same coefficients
name different orbits at different levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import OrbitLabel
from .errors import LevelExceeded


@dataclass(frozen=True, order=True)
class Weight:
    """Fundamental-weight coefficients (a_1, ..., a_{N-1}) at an ambient level."""

    coeffs: tuple[int, ...]
    level: int

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a weight needs at least one coefficient (modulus >= 2)")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in {self.coeffs}")
        if self.level < 1:
            raise ValueError(f"level must be at least 1, got {self.level}")
        if sum(self.coeffs) > self.level:
            raise LevelExceeded(
                f"coefficients {self.coeffs} sum to {sum(self.coeffs)}, "
                f"past level {self.level}"
            )

    @property
    def modulus(self) -> int:
        return len(self.coeffs) + 1

    def __str__(self) -> str:
        return "(%s)" % ",".join(str(c) for c in self.coeffs)


def weight_to_orbit(w: Weight) -> OrbitLabel:
    """Orbit label whose standard form realises the weight at its level."""
    return OrbitLabel((w.level - sum(w.coeffs),) + w.coeffs)


def orbit_to_weight(label: OrbitLabel) -> Weight:
    """Inverse of weight_to_orbit."""
    return Weight(label.mults[1:], label.level)


def is_row_weight(w: Weight) -> bool:
    """True iff the weight is a multiple of the first fundamental weight.

    The zero weight counts (the multiple may be zero).
    """
    return all(c == 0 for c in w.coeffs[1:])


def lift_level(w: Weight) -> Weight:
    """Same coefficients one level up; matches append_zero on orbits."""
    return Weight(w.coeffs, w.level + 1)
