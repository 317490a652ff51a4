"""Numerical toolkit for sector and radius estimates of analytic disk maps."""

from .core import (
    ATag,
    AnalyticFunction,
    HTag,
    Variant,
    half_plane_map,
    identity_map,
    koebe_like,
    principal_arg,
    principal_power,
)
from .constants import (
    ArgConstants,
    Direction,
    OptResult,
    Ray,
    RegionKind,
    RegionSpec,
    SlitSpec,
    StrongOrders,
    Thm3Constants,
    a_min,
    arg_kernel,
    arg_theorem_constants,
    build_region,
    c_lambda,
    eta,
    lambda_tilt,
    m_alpha,
    optimize_1d,
    radius_convexity,
    radius_inv_alpha_convexity,
    slit_constants,
    slit_ray_objective,
    strong_orders,
    thm3_constants,
    tilt_ray_objective,
    weighted_ray_objective,
)
from .errors import (
    BadFamilySpec,
    BadGridSpec,
    DegenerateDenominator,
    DegenerateSum,
    DiskRequiresLambdaZero,
    DivisionByZeroInFunctional,
    EvaluationError,
    GftError,
    InvalidBracket,
    MissingSecondFunction,
    NoSignChange,
    OrderOutOfRange,
    OutOfRange,
    SingularPoint,
    ValidationError,
    ZeroBase,
)
from .functionals import (
    FunctionalKind,
    FunctionalSpec,
    evaluate_functional,
    power_target,
    ratio_target,
)
from .membership import (
    DEFAULT_RADII,
    ClassKind,
    ClassSpec,
    DiskGrid,
    MembershipReport,
    RegionCheck,
    SlitCheck,
    Verdict,
    check_membership,
    default_grid,
    region_containment,
    sample_grid,
    sector_margins,
    slit_avoidance,
)
from .radii import (
    FamilyRadius,
    caratheodory_log_derivative_bound,
    caratheodory_log_derivative_min,
    constant_schwarz_term_bound,
    constant_schwarz_term_min,
    family_property_radius,
    poly_root_bisect,
    property_radius,
)
from .theorems import (
    CASE_IDS,
    FamilyKind,
    FamilyMember,
    FunctionFamily,
    MemberOutcome,
    TheoremCase,
    VerificationReport,
    default_family_for,
    make_family,
    mobius_ratio_family,
    random_taylor_family,
    sector_map,
    sector_power_family,
    verify_lemma_tilt,
    verify_theorem,
)

__version__ = "1.0.0"
