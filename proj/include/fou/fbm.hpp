#pragma once

#include <cstddef>
#include <vector>

#include "fou/types.hpp"

namespace fou {

// Covariance 0.5 (t^{2H} + s^{2H} - |t-s|^{2H}) of fractional Brownian motion.
double fbm_covariance(double t, double s, double hurst);

// Autocovariance gamma(k), k = 0..n_lags, of the increment sequence on a
// uniform grid with step dt.
std::vector<double> fgn_autocovariance(std::size_t n_lags, double dt, double hurst);

// Eigenvalues of the circulant embedding (size 2 n_steps) of the increment
// covariance. Negative values are reported as-is; the sampler decides.
std::vector<double> fgn_spectrum(std::size_t n_steps, double dt, double hurst);

// Exact fBm path of n_steps+1 nodes starting at 0. Default route is
// circulant embedding; if the embedding has an eigenvalue below
// -1e-12 relative to the largest, falls back to dense Cholesky.
SamplePath sample_fbm(std::size_t n_steps, double dt, double hurst, Seed seed);

// Dense Cholesky sampler (the fallback route), exposed for direct testing.
SamplePath sample_fbm_cholesky(std::size_t n_steps, double dt, double hurst, Seed seed);

}  // namespace fou
