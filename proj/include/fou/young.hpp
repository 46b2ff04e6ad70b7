#pragma once

#include <cstddef>
#include <span>

#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"
#include "fou/types.hpp"

namespace fou {

enum class QuadRule {
    left_riemann_stieltjes,
    trapezoid,
    exact_identity,
};

struct IntegralReport {
    double value = 0.0;
    QuadRule rule = QuadRule::left_riemann_stieltjes;
    std::size_t n_nodes = 0;
};

// Left-endpoint Riemann-Stieltjes sum of f against the path increments.
// Converges to the Young integral when the Hoelder exponents of integrand
// and integrator sum above 1.
IntegralReport rs_integral(std::span<const double> f_values, const SamplePath& path);

double integral_phi_dX(const PeriodicBasis& basis, int i, const SimulatedPair& pair);

// int X dX by the chain-rule identity (X_T^2 - X_0^2) / 2, exact at grid
// resolution for Hoelder paths with exponent above 1/2.
double integral_X_dX(const SimulatedPair& pair);

double integral_phi_X_dt(const PeriodicBasis& basis, int i, const SimulatedPair& pair);
double integral_X_sq_dt(const SimulatedPair& pair);

double integral_phi_dB(const PeriodicBasis& basis, int i, const SamplePath& B);

}  // namespace fou
