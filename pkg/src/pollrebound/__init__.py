"""Pollution rebound effect estimation from annual transport time series."""

__version__ = "0.1.0"

from .coint import CointegrationResult, johansen_critical_values, johansen_test
from .exceptions import (
    AlignmentError,
    ConfigError,
    DecompositionError,
    DegenerateModelError,
    DomainError,
    IngestError,
    InsufficientDataError,
    NumericError,
    ReboundError,
    SingularDesignError,
)
from .kernels import EigenPair, OlsFit, default_bandwidth, newey_west_lrv, ols_fit, solve_gev
from .rebound import (
    Convention,
    EmissionFactors,
    PreCategory,
    PreResult,
    VkmModelFit,
    classify_pre,
    compute_pre,
    emissions_from_fuel,
    fit_vkm_model,
    pre_from_coefficients,
)
from .series import (
    Dataset,
    DescriptiveStats,
    TimeSeries,
    describe,
    difference,
    lag,
    log_transform,
    per_capita,
)
from .synth import GenSpec, gen_ar1, gen_cointegrated_pair, gen_random_walk, gen_vkm_dataset
from .unitroot import UnitRootResult, adf_test, pp_test, unit_root_critical_values

__all__ = [
    "__version__",
    "CointegrationResult",
    "johansen_critical_values",
    "johansen_test",
    "AlignmentError",
    "ConfigError",
    "DecompositionError",
    "DegenerateModelError",
    "DomainError",
    "IngestError",
    "InsufficientDataError",
    "NumericError",
    "ReboundError",
    "SingularDesignError",
    "EigenPair",
    "OlsFit",
    "default_bandwidth",
    "newey_west_lrv",
    "ols_fit",
    "solve_gev",
    "Convention",
    "EmissionFactors",
    "PreCategory",
    "PreResult",
    "VkmModelFit",
    "classify_pre",
    "compute_pre",
    "emissions_from_fuel",
    "fit_vkm_model",
    "pre_from_coefficients",
    "Dataset",
    "DescriptiveStats",
    "TimeSeries",
    "describe",
    "difference",
    "lag",
    "log_transform",
    "per_capita",
    "GenSpec",
    "gen_ar1",
    "gen_cointegrated_pair",
    "gen_random_walk",
    "gen_vkm_dataset",
    "UnitRootResult",
    "adf_test",
    "pp_test",
    "unit_root_critical_values",
]
