"""Exception types raised across the package.

Validation failures (bad multiplicity vectors, mismatched sizes, out-of-range
residues) and runtime guards (enumeration caps, numeric drift in the fusion
oracle) get distinct classes so callers can react precisely.
"""


class OrbitFusionError(Exception):
    """Base class for every error raised by this package."""


class ArityMismatch(OrbitFusionError):
    """A multiplicity vector or tuple has the wrong number of entries."""


class SumMismatch(OrbitFusionError):
    """Multiplicities do not sum to the ambient tuple length."""


class EntryOutOfRange(OrbitFusionError):
    """A tuple entry is not a residue in {0, ..., N-1}."""


class ParamsMismatch(OrbitFusionError):
    """Operands disagree on modulus or level."""


class LevelExceeded(OrbitFusionError):
    """Weight coefficients sum past the ambient level."""


class RangeError(OrbitFusionError):
    """An su(2) closed-form argument lies outside [0, k]."""


class BoundExceeded(OrbitFusionError):
    """An orbit is larger than the configured enumeration cap."""


class NumericalDrift(OrbitFusionError):
    """A raw fusion value is too far from a nonnegative integer."""
