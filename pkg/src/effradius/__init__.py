"""Radius-of-convergence estimates and effective radius for truncated Taylor series."""

from .coincidence import (
    CoincidenceReport,
    EffectiveRadius,
    coincide,
    effective_radius,
    graph_distance,
)
from .errors import (
    DomainError,
    EffRadiusError,
    EstimationError,
    NumericError,
    ParseError,
    SeriesError,
)
from .estimators import (
    FitResult,
    RadiusSequence,
    RootEstimate,
    divergence_screen,
    ols_estimate,
    root_estimate,
    root_sequence,
)
from .expr import eval_ast, parse
from .series import (
    Grid,
    ParitySplit,
    PowerSeries,
    classify_parity,
    evaluate,
    make_grid,
    split_parity,
)
from .seriesio import load_series
from .expansion import taylor

__all__ = [
    "CoincidenceReport", "DomainError", "EffRadiusError", "EffectiveRadius", "EstimationError",
    "FitResult", "Grid", "NumericError", "ParitySplit", "ParseError", "PowerSeries",
    "RadiusSequence", "RootEstimate", "SeriesError", "classify_parity", "coincide",
    "divergence_screen", "effective_radius", "eval_ast", "evaluate", "graph_distance",
    "load_series", "make_grid", "ols_estimate", "parse", "root_estimate", "root_sequence",
    "split_parity", "taylor",
]
