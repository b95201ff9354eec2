"""Exact orbit combinatorics on Z_N^k and su(N) level-k fusion checks.

The package computes structure constants of the orbit product on Z_N^k
under coordinate permutation (three independent algorithms), bridges orbits
to dominant weights of A_{N-1}, evaluates su(N) fusion coefficients through
the Verlinde formula, and runs exhaustive verification scans comparing the
two sides.
"""

from .core import (
    DEFAULT_ENUM_CAP,
    ENUM_CAP_ENV,
    OrbitLabel,
    Params,
    enumerate_labels,
    enumerate_orbit,
    enumeration_cap,
    is_row_label,
    label_count,
    label_of_tuple,
    make_label,
    orbit_size,
    standard_form,
)
from .errors import (
    ArityMismatch,
    BoundExceeded,
    EntryOutOfRange,
    LevelExceeded,
    NumericalDrift,
    OrbitFusionError,
    ParamsMismatch,
    RangeError,
    SumMismatch,
)
from .fusion import (
    TOLERANCE,
    FusionTable,
    enumerate_level_weights,
    fusion_coefficient,
    fusion_coefficient_raw,
    fusion_table,
    su2_fusion_closed_form,
)
from .product import (
    DEFAULT_METHOD,
    METHODS,
    ProductExpansion,
    append_zero,
    product,
    structure_constant,
)
from .verify import SCAN_KINDS, Report, ScanSpec, Violation, run_scan
from .weights import Weight, is_row_weight, lift_level, orbit_to_weight, weight_to_orbit

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BoundExceeded",
    "DEFAULT_ENUM_CAP",
    "DEFAULT_METHOD",
    "ENUM_CAP_ENV",
    "EntryOutOfRange",
    "FusionTable",
    "LevelExceeded",
    "METHODS",
    "NumericalDrift",
    "OrbitFusionError",
    "OrbitLabel",
    "Params",
    "ParamsMismatch",
    "ProductExpansion",
    "RangeError",
    "Report",
    "SCAN_KINDS",
    "ScanSpec",
    "SumMismatch",
    "TOLERANCE",
    "Violation",
    "Weight",
    "append_zero",
    "enumerate_labels",
    "enumerate_level_weights",
    "enumerate_orbit",
    "enumeration_cap",
    "fusion_coefficient",
    "fusion_coefficient_raw",
    "fusion_table",
    "is_row_label",
    "is_row_weight",
    "label_count",
    "label_of_tuple",
    "lift_level",
    "make_label",
    "orbit_size",
    "orbit_to_weight",
    "product",
    "run_scan",
    "standard_form",
    "structure_constant",
    "su2_fusion_closed_form",
    "weight_to_orbit",
]
