"""Torus GIT stability workbench for degree-d surface sections of the smooth
quadric threefold x0*x4 + x1*x3 + x2^2 = 0 in P^4.

Exact symbolic analysis throughout: quotient-basis reduction, Hilbert-Mumford
weights of normalized one-parameter subgroups, maximal destabilizing monomial
families, affine-chart singularity measurements (multiplicities and log
canonical threshold upper bounds), torus-orbit closedness of invariant forms,
and complete-intersection Chow weights.
"""

__version__ = "0.1.0"

from .charts import (
    DEFAULT_CHART_WEIGHTS,
    ChartPolynomial,
    WeightVector,
    chart_at_line_point,
    chart_at_p0,
    generic_member,
    lct_upper_bound,
    leading_form,
    line_vanishing_order,
    multiplicity,
    weighted_multiplicity,
)
from .chow import ChowVerdict, ci_chow_weight
from .families import (
    DestabilizingFamily,
    InclusionVerification,
    StabilityReport,
    basis,
    check_torus_stability,
    classify_family,
    enumerate_maximal_families,
    family_at,
    verify_inclusion_lemmas,
)
from .orbits import (
    OrbitVerdict,
    h_fixed_space,
    invariant_monomials,
    stabilized_by_h,
    stabilizing_one_ps,
    torus_orbit_closed,
    two_torus_weight,
    type_xi,
)
from .parsing import ParseError, format_monomial, format_polynomial, parse_polynomial
from .polynomials import (
    Monomial,
    ParamCoefficient,
    Polynomial,
    QUADRIC,
    quadric,
    reduce_mod_quadric,
    substitute,
)
from .weights import (
    DiagonalOnePS,
    LimitUndefined,
    NormalizedOnePS,
    RAY,
    mu,
    take_limit,
    weight,
)

__all__ = [
    "__version__",
    "Monomial",
    "ParamCoefficient",
    "Polynomial",
    "QUADRIC",
    "quadric",
    "reduce_mod_quadric",
    "substitute",
    "ParseError",
    "parse_polynomial",
    "format_polynomial",
    "format_monomial",
    "NormalizedOnePS",
    "DiagonalOnePS",
    "RAY",
    "LimitUndefined",
    "weight",
    "mu",
    "take_limit",
    "basis",
    "DestabilizingFamily",
    "StabilityReport",
    "InclusionVerification",
    "enumerate_maximal_families",
    "family_at",
    "verify_inclusion_lemmas",
    "classify_family",
    "check_torus_stability",
    "ChartPolynomial",
    "WeightVector",
    "DEFAULT_CHART_WEIGHTS",
    "chart_at_p0",
    "chart_at_line_point",
    "multiplicity",
    "leading_form",
    "line_vanishing_order",
    "weighted_multiplicity",
    "lct_upper_bound",
    "generic_member",
    "type_xi",
    "invariant_monomials",
    "stabilizing_one_ps",
    "h_fixed_space",
    "stabilized_by_h",
    "two_torus_weight",
    "torus_orbit_closed",
    "OrbitVerdict",
    "ChowVerdict",
    "ci_chow_weight",
]
