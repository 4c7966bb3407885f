"""Exact and simulated moments of sum_k X_k / (2 k pi), X_k i.i.d. Laplace(0, 1)."""

from .exact_core import (
    ExactRational,
    NonInvertibleSeriesError,
    PowerSeries,
    binomial,
    format_rational,
    parse_rational,
    rat,
    rat_arith,
    series_mul,
    series_reciprocal,
)
from .moments import (
    DomainError,
    LaplaceParams,
    MomentEntry,
    asymptotic_ratio,
    even_moment_remark,
    even_moment_theorem,
    laplace_pdf,
    mgf_closed,
    mgf_product,
    mgf_series_coefficients,
    moment,
    moment_table,
)
from .montecarlo import (
    EstimateReport,
    SimConfig,
    estimate_mgf,
    estimate_moments,
    sample_laplace,
    sample_truncated_y,
    simulate,
    tail_variance_bound,
)
from .special_numbers import bernoulli, check_bernoulli_euler_identity, check_identity_eq8, euler

__version__ = "0.1.0"
