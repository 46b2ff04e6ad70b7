#pragma once

#include <stdexcept>
#include <vector>

#include "fou/matrix.hpp"
#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"
#include "fou/types.hpp"

namespace fou {

struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalized ingredients of the least-squares system: P is the (p+1)-vector
// of stochastic integrals, Lambda_i = (1/n) int phi_i X dt, mean_sq =
// (1/n) int X^2 dt, n the horizon.
struct EstimatorInputs {
    std::vector<double> P;
    std::vector<double> Lambda;
    double mean_sq = 0.0;
    double n = 0.0;

    double D() const;
};

struct EstimateResult {
    std::vector<double> theta_hat;  // mu_hat_1..p, alpha_hat
    double D = 0.0;
    double gamma = 0.0;
    std::vector<double> Lambda;
    double n = 0.0;
    double condition_proxy = 0.0;  // gamma * n
};

// Terms of the error decomposition
//   mu_hat_i - mu_i = sigma (M1_i + sum_j M2_ij - M3_i)
//   alpha_hat - alpha = -sigma (sum_i A1_i - A2)
struct ErrorDecomposition {
    std::vector<double> M1;
    Matrix M2;
    std::vector<double> M3;
    std::vector<double> A1;
    double A2 = 0.0;
};

EstimatorInputs assemble_inputs(const SamplePath& X, const PeriodicBasis& basis);
EstimatorInputs assemble_inputs(const SimulatedPair& pair, const PeriodicBasis& basis);

// Explicit block inverse of Q = [[n I, n Lambda], [n Lambda^T, n mean_sq]].
// Refuses when D = mean_sq - |Lambda|^2 is at or below 1e-12 relative.
Matrix invert_Q(const EstimatorInputs& inputs);

EstimateResult estimate(const EstimatorInputs& inputs);
EstimateResult estimate(const SamplePath& X, const PeriodicBasis& basis);
EstimateResult estimate(const SimulatedPair& pair, const PeriodicBasis& basis);

ErrorDecomposition decompose_error(const SimulatedPair& pair, const PeriodicBasis& basis,
                                   const ModelParams& true_params);

}  // namespace fou
