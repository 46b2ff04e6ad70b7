#pragma once

#include <cstddef>

#include "fou/periodic_basis.hpp"
#include "fou/types.hpp"

namespace fou {

// Parameters of dX_t = (L(t) + alpha X_t) dt + sigma dB^H_t in the
// non-ergodic regime alpha > 0, H in (0.5, 1). sigma = 0 is allowed for
// noiseless diagnostics.
struct ModelParams {
    double hurst = 0.7;
    double alpha = 1.0;
    double sigma = 1.0;
    double x0 = 0.0;
    DriftFunction drift;
};

void validate_params(const ModelParams& params);

// Solution path together with the driving fBm it was built from.
struct SimulatedPair {
    SamplePath X;
    SamplePath B;
    ModelParams params;
};

// Default grid rule: max(4096, ceil(256 T)), rounded up to an even count.
std::size_t default_n_steps(double T);

SimulatedPair simulate(const ModelParams& params, double T, std::size_t n_steps,
                       Seed seed);

// Same solution map applied to a caller-supplied driver (zero path, refined
// path, ...). The grid is taken from B.
SimulatedPair simulate_with_driver(const ModelParams& params, const SamplePath& B);

// e^{-alpha T} X_T, the finite-horizon version of the almost-sure limit.
double xi_tilde_terminal(const SimulatedPair& pair);

struct MeanVar {
    double mean = 0.0;
    double var = 0.0;
};

// Limit law of e^{-alpha t} X_t: mean x0 + int_0^inf e^{-alpha s} L(s) ds,
// variance sigma^2 H Gamma(2H) / alpha^{2H}.
MeanVar xi_infty_mean_var(const ModelParams& params);

}  // namespace fou
