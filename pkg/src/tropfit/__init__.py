"""tropfit: max-plus (tropical) regression.

Fits Puiseux polynomials and rational functions (ratios of two such
polynomials) to sampled data, minimizing the tropical Chebyshev-type
distance.  In the max-plus semifield the fitted functions are convex and
difference-of-convex piecewise-linear functions; the max-times semifield is
supported through its log/exp isomorphism.
"""

from .maxplus import (
    ONE,
    ZERO,
    DomainError,
    MaxPlusScalar,
    inv,
    is_zero,
    leq,
    maxplus_to_maxtimes,
    maxtimes_to_maxplus,
    oplus,
    otimes,
    tmin,
    tpow,
)
from .linalg import (
    INFINITE,
    ApproxSolution,
    TropMatrix,
    TropVector,
    TwoSidedSolution,
    alternating_solve,
    best_approx_solve,
    conjugate,
    distance,
    matvec,
)
from .puiseux import (
    PolyMinimum,
    PuiseuxPoly,
    PuiseuxRational,
    eval_poly,
    eval_rational,
    min_poly,
    poly_sum,
    vandermonde,
)
from .clustering import (
    ExponentResult,
    Partition,
    PartitionBlock,
    SampleSet,
    agglomerate,
    error_polynomials,
    merged_minimum,
)
from .fitting import (
    FitConfig,
    PolyFit,
    RationalFit,
    brute_force_poly_fit,
    fit_polynomial,
    fit_rational,
)
from .report import FitReport, load_samples

__all__ = [
    "ONE",
    "ZERO",
    "INFINITE",
    "DomainError",
    "MaxPlusScalar",
    "ApproxSolution",
    "TropMatrix",
    "TropVector",
    "TwoSidedSolution",
    "PolyMinimum",
    "PuiseuxPoly",
    "PuiseuxRational",
    "ExponentResult",
    "Partition",
    "PartitionBlock",
    "SampleSet",
    "FitConfig",
    "PolyFit",
    "RationalFit",
    "FitReport",
    "oplus",
    "otimes",
    "inv",
    "tpow",
    "tmin",
    "leq",
    "is_zero",
    "maxplus_to_maxtimes",
    "maxtimes_to_maxplus",
    "matvec",
    "conjugate",
    "distance",
    "best_approx_solve",
    "alternating_solve",
    "eval_poly",
    "eval_rational",
    "min_poly",
    "poly_sum",
    "vandermonde",
    "error_polynomials",
    "merged_minimum",
    "agglomerate",
    "fit_polynomial",
    "fit_rational",
    "brute_force_poly_fit",
    "load_samples",
]

__version__ = "0.1.0"
