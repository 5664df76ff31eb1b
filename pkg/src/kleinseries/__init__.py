"""Exact equivariant Poincare series for real and quaternionic bundles on Klein surfaces."""

from .exact import BigRat, Poly, VariableMismatch, format_rat, poly_add, poly_divrem, poly_gcd, poly_mul, rat
from .series import (
    DEFAULT_ORDER,
    ScaledSeries,
    ScaleError,
    ScaleMismatch,
    descale,
    monomial_frac,
    series_from_products,
    series_mul,
)
from .ratfunc import (
    PoleError,
    RationalFn,
    duality_check,
    limit_at_one,
    rf_add,
    rf_div,
    rf_is_polynomial,
    rf_mul,
    rf_reciprocal,
    rf_to_series,
)
from .hn import (
    BundleType,
    HNType,
    InvalidType,
    KleinTopType,
    Tau,
    codim_dmu,
    compositions,
    count_bundle_types,
    enumerate_hn_types,
    frac_bracket,
    klein_types,
    orientability_obstruction,
    real_multiplicity,
    tau_admissible,
    validate_bundle,
    validate_klein,
    zagier_exponent_M,
)
from .engine import (
    Method,
    Quantity,
    SeriesRequest,
    complex_moduli_poincare,
    compute,
    f_tau,
    fixed_determinant_poincare,
    moduli_poincare,
    p_closed,
    p_complex_recursive,
    p_complex_zagier,
    p_recursive,
    p_tau_closed,
    p_tau_recursive,
    q_complex,
    q_tau,
)

__version__ = "0.1.0"
