#pragma once

#include "fou/matrix.hpp"
#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"

namespace fou {

// Limit of the n^{1-H}-scaled coefficient errors: sigma times a centred
// Gaussian vector with the rank-one covariance (int phi_i)(int phi_j).
struct GaussianLimit {
    Matrix cov;
    double scale = 1.0;  // sigma
};

GaussianLimit limit_cov_matrix(const PeriodicBasis& basis, double sigma);

// Parameters of the ratio law 2 alpha N / M for the e^{alpha n}-scaled
// mean-reversion error, with N ~ N(0,1) and M ~ N(m,1) independent.
struct RatioLimit {
    double alpha = 1.0;
    double m = 0.0;
};

RatioLimit ratio_limit_params(const ModelParams& params);

// P(2 alpha N / M <= z), by adaptive quadrature over the denominator
// density; absolute error <= 1e-8, exactly 0.5 at z = 0.
double ratio_cdf(const RatioLimit& law, double z);

double ratio_quantile(const RatioLimit& law, double prob);

// The multiplier resolving the variance convention of the sqrt(n)-scaled
// zero-integral components: H (2H - 1), fixed against the finite-n oracle.
double variance_convention_factor(double hurst);

// Raw zeta-series evaluation of the zero-integral variance expression.
// Requires |int phi_k| <= 1e-8. If tail_bound is non-null it receives a
// geometric bound on the truncated series remainder.
double zero_integral_variance_series(const PeriodicBasis& basis, int k, double hurst,
                                     int l_max = 40, double* tail_bound = nullptr);

// Raw integral-representation evaluation of the same expression, the outer
// improper integral truncated at u = 60 with the remainder reported.
double zero_integral_variance_integral(const PeriodicBasis& basis, int k, double hurst,
                                       double* tail_bound = nullptr);

// Exact variance of n^{-1/2} int_0^n phi_k dB^H via the periodic cell
// decomposition; already on the resolved scale (no convention ambiguity).
double scaled_integral_variance_oracle(const PeriodicBasis& basis, int k, double hurst,
                                       int n);

// Closed form of the raw expression for the Fourier elements sqrt2 sin(2 pi
// n_freq t) and sqrt2 cos(2 pi n_freq t).
double fourier_variance_closed_form(int n_freq, double hurst);

// Kernel integral of the Fourier family: 2 (e^u - 1) u / ((2 pi n)^2 + u^2)
// when m = n, zero otherwise.
double fourier_kernel_integral(int n, int m, double u);

struct ZeroIntegralVariance {
    double by_series = 0.0;    // raw scale
    double by_integral = 0.0;  // raw scale
    double by_oracle = 0.0;    // resolved scale
    double convention_factor = 0.0;
    double series_tail_bound = 0.0;
    double integral_tail_bound = 0.0;

    double resolved_series() const { return convention_factor * by_series; }
    double resolved_integral() const { return convention_factor * by_integral; }
    double max_rel_dev() const;
};

ZeroIntegralVariance zero_integral_variance(const PeriodicBasis& basis, int k,
                                            double hurst, int l_max = 40,
                                            int oracle_n = 128);

}  // namespace fou
