"""Completed interlacing of zeros for Jacobi, Meixner-Pollaczek and Pseudo-Jacobi polynomials."""
from .errors import (
    ArityError,
    ComplexRootsError,
    DegenerateConfigurationError,
    DegreeOutOfRangeError,
    DiscriminantNegativeError,
    HypothesisError,
    InadmissibleError,
    InterlacingError,
    InvalidParameterError,
    InvalidTableError,
    NumericalFailureError,
    OrderingError,
    RealizationError,
)
from .families import (
    ExtraPoints,
    Jacobi,
    MeixnerPollaczek,
    PseudoJacobi,
    extra_points,
    jacobi_extra_points,
    jacobi_recurrence,
    make_family,
    mixed_relation,
    mixed_residual,
    mp_extra_points,
    mp_phi_window,
    mp_recurrence,
    parse_angle,
    pj_admissible,
    pj_extra_points,
    pj_recurrence,
    sign_checks,
)
from .hypergeometric import MonomialPoly, hyp2f1_terminating, jacobi_poly_oracle, mp_poly, pj_poly
from .interlace import (
    InterlaceReport,
    Placement,
    Variant,
    Verdict,
    alternate,
    classify,
    hk_sign,
    place_point,
    strict_interlace,
    verify_chain,
)
from .recurrence import RecurrenceTable, ZeroSet, eval_monic, refine_zero, zeros
from .scan import (
    ScanResult,
    SweepSpec,
    default_spec,
    reproduce_table,
    run_draw,
    scan_conjecture1,
    scan_conjecture2,
    theorem_sweep,
)

__version__ = "0.1.0"
