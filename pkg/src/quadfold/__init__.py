"""Four-bar linkage configuration spaces: curves, elliptic parametrizations,
folding dynamics, periodicity tests and conjugate quadrilaterals."""

from ._kernels import BACKEND
from .conjugacy import ConfocalSpec, conjugate_quad, identity_suite, ivory_check
from .curves import angle_curves, complete_solution, diagonal_curve, normal_form, solve_diagonal_curve
from .errors import ComputationError, QuadfoldError, ValidationError
from .geometry import (
    AngleData,
    Geometry,
    Kind,
    Method,
    PeriodReport,
    Quadrilateral,
    SideLengths,
    congruent,
    detect_period_numeric,
    embed,
    fold,
    fold_orbit,
    measure,
    validate_and_classify,
)
from .parametrization import build, folding_shifts, locate, period_from_sigma
from .periodicity import (
    branch_value_crosscheck,
    closed_form_test,
    find_periodic,
    hankel_test,
    invariants,
    p_q_data,
    period_report,
)

__version__ = "0.1.0"
