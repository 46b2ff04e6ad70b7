"""Fractional Ornstein-Uhlenbeck simulation and least-squares inference."""

from ._fou import (
    EstimateResult,
    MeanVar,
    ModelParams,
    PeriodicBasis,
    RatioLimit,
    SamplePath,
    SimulatedPair,
    ZeroIntegralVariance,
    estimate,
    estimate_path,
    fbm_covariance,
    fgn_spectrum,
    laplace_unit_integral,
    limit_cov_matrix,
    ratio_cdf,
    ratio_limit_params,
    ratio_quantile,
    sample_fbm,
    simulate,
    variance_convention_factor,
    xi_infty_mean_var,
    zero_integral_variance,
)

__all__ = [
    "EstimateResult",
    "MeanVar",
    "ModelParams",
    "PeriodicBasis",
    "RatioLimit",
    "SamplePath",
    "SimulatedPair",
    "ZeroIntegralVariance",
    "estimate",
    "estimate_path",
    "fbm_covariance",
    "fgn_spectrum",
    "laplace_unit_integral",
    "limit_cov_matrix",
    "ratio_cdf",
    "ratio_limit_params",
    "ratio_quantile",
    "sample_fbm",
    "simulate",
    "variance_convention_factor",
    "xi_infty_mean_var",
    "zero_integral_variance",
]
