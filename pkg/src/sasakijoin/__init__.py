"""Exact-arithmetic toolkit for Sasakian structures on weighted-sphere joins.

The package solves the extremal momentum-profile boundary value problem
in exact rational arithmetic, certifies positivity by Sturm sequences,
scans the two-dimensional cone of Reeb rays for constant scalar
curvature and Einstein representatives, and computes the contact and
topological invariants (Chern coefficient, cohomology presentation,
bouquet structure) of the resulting manifolds.
"""

__version__ = "0.1.0"

from .join_core import (  # noqa: F401
    CP1,
    CP2,
    K3,
    AdmissibleData,
    BaseGeometry,
    FiberQuotientData,
    JoinSpec,
    RayVector,
    WeightVector,
    admissible_data_for_ray,
    base_by_name,
    classify_ray,
    contact_invariants,
    fiber_quotient,
    load_base_catalog,
    relative_fano_indices,
    riemann_surface,
    validate_join,
)
from .admissible import (  # noqa: F401
    CscClosedForm,
    ExtremalSolution,
    KeResiduals,
    PositivityReport,
    csc_closed_form,
    csc_residual,
    extremal_exists,
    ke_residuals,
    positivity,
    solve_extremal,
)
from .polynomial import RationalPolynomial  # noqa: F401
