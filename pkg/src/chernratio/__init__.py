"""Exact Chern numbers and Chern ratios of complete-intersection surfaces in products of curves."""
from .bogomolov import HypothesisReport, check as check_hypothesis
from .chern import (
    DegreeVector,
    SurfaceInvariants,
    chern_numbers,
    convergence_constant,
    ratio_at_scale,
    ratio_closed_form,
)
from .density import (
    ApproximationResult,
    DirectionVector,
    approximate_f_target,
    approximate_surface_ratio,
    asymptotic_ratio,
    epsilon,
    f,
    required_scale,
)
from .errors import (
    ChernRatioError,
    ConsistencyError,
    InfeasibleError,
    NonterminationError,
    ValidationError,
)
from .finiteness import EnumerationReport, enumerate_ge2, slope_bound
from .geometry import (
    AmbientInvariants,
    CurveProductConfig,
    CurveSpec,
    alpha,
    curve_product_invariants,
)

__version__ = "0.1.0"
