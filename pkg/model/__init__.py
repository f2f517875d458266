from .errors import (
    NumberTheoryError,
    PreconditionError,
    DegenerateModelError,
    BadReductionError,
    DegreeCapError,
    ConfigError,
    DivisibilityError,
    CriterionInapplicableError,
    HasseBoundError,
    CountMismatchError,
    ClaimError
)
from .weierstrass import (
    WeierstrassModel,
    CurveInvariants,
    LocalReduction,
    ReductionKind,
    compute_invariants,
    frey_curve,
    transform,
    scale,
    completed_square,
    valuation,
    local_data,
    semistable_away_from_2
)
from .finite_field import (
    ReducedCurve,
    FrobeniusTrace,
    reduce_mod_p,
    count_points,
    trace_of_frobenius,
    hasse_interval,
    quadratic_twist
)
from .polynomial import IntegerPolynomial, roots_in_interval
