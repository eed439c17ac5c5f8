"""Exact power-series toolkit for generalized Janowski function classes.

Constructs class members and extremal functions, computes inverse-function
coefficients two independent ways, evaluates every closed-form coefficient
bound, and verifies attainment and inequalities in exact rational
arithmetic.  A numeric grid search probes sharpness in double precision;
everything else is exact.
"""

from .classes import (
    ClassSpec,
    Kind,
    SchwarzSpec,
    extremal,
    janowski_ratio,
    member,
    rotate_half_turn,
    schwarz_series,
    validate,
)
from .config import SuiteConfig, load_suite_config, parse_suite_config
from .errors import (
    ConditionNotMet,
    ConfigError,
    DomainError,
    InvalidSpec,
    JanowskiError,
    NonSchwarz,
    NonzeroInnerConstant,
    NotNormalized,
    ParameterOutOfRange,
    RegimeError,
    ZeroConstantTerm,
    ZeroIndex,
)
from .inversion import (
    LaurentTail,
    direct_power_coeff,
    inverse_power_coeff,
    log_derivative,
    meromorphic_inverse,
    negative_power_coeffs,
    over_derivative,
    revert_lagrange,
    to_meromorphic,
)
from .series import FloatSeries, TaylorSeries, as_fraction, exp, log, revert
from .verify import (
    SearchGrid,
    SearchResult,
    VerificationReport,
    check_extremal_attainment,
    check_member_bounds,
    check_schur_relation,
    run_suite,
    sharpness_search,
)

__version__ = "0.1.0"

__all__ = [
    # series core
    "TaylorSeries",
    "FloatSeries",
    "as_fraction",
    "exp",
    "log",
    "revert",
    # inversion
    "LaurentTail",
    "negative_power_coeffs",
    "revert_lagrange",
    "inverse_power_coeff",
    "direct_power_coeff",
    "log_derivative",
    "over_derivative",
    "to_meromorphic",
    "meromorphic_inverse",
    # classes
    "Kind",
    "ClassSpec",
    "SchwarzSpec",
    "validate",
    "schwarz_series",
    "janowski_ratio",
    "member",
    "extremal",
    "rotate_half_turn",
    # verification
    "VerificationReport",
    "SearchGrid",
    "SearchResult",
    "check_extremal_attainment",
    "check_member_bounds",
    "check_schur_relation",
    "run_suite",
    "sharpness_search",
    # config
    "SuiteConfig",
    "parse_suite_config",
    "load_suite_config",
    # errors
    "JanowskiError",
    "ZeroConstantTerm",
    "NonzeroInnerConstant",
    "DomainError",
    "NotNormalized",
    "ZeroIndex",
    "ParameterOutOfRange",
    "InvalidSpec",
    "NonSchwarz",
    "RegimeError",
    "ConditionNotMet",
    "ConfigError",
    "__version__",
]
