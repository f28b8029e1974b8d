"""Stability refinements of Young, Hölder and Minkowski inequalities on
finite weighted measure spaces, with numerical checks."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateSumError,
    DomainError,
    InputError,
    LpStabError,
    UnsupportedCaseError,
    ZeroFunctionError,
)
from .measure import MeasureSpace, SimpleFunction, dual_norm, inner, norm  # noqa: E402
from .holder import holder_general, holder_modified, holder_report, young_bounds  # noqa: E402
from .interpolation import (  # noqa: E402
    containment_bounds,
    midpoint_compare,
    two_exponent_bounds,
    variance_bounds,
)
from .convexity import (  # noqa: E402
    conditional_midpoint_bounds,
    delta_lower_bound,
    mazur_map,
    refined_minkowski,
    sign_cancellation,
    trianpos_bound,
)
from .modulus import estimate_modulus, hanner_modulus  # noqa: E402

__all__ = [
    "DegenerateSumError", "DomainError", "InputError", "LpStabError",
    "UnsupportedCaseError", "ZeroFunctionError", "MeasureSpace", "SimpleFunction",
    "dual_norm", "inner", "norm", "holder_general", "holder_modified", "holder_report",
    "young_bounds", "containment_bounds", "midpoint_compare", "two_exponent_bounds",
    "variance_bounds", "conditional_midpoint_bounds", "delta_lower_bound", "mazur_map",
    "refined_minkowski", "sign_cancellation", "trianpos_bound", "estimate_modulus",
    "hanner_modulus",
]
