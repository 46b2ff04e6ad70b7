#include "fou/estimator.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "fou/quadrature.hpp"
#include "fou/young.hpp"

namespace fou {

namespace {

std::string format_singular_message(double D) {
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer),
                  "normal matrix is numerically singular: D = %.17g", D);
    return std::string(buffer);
}

void check_inputs(const EstimatorInputs& inputs) {
    if (!(inputs.n > 0.0)) {
        throw std::invalid_argument("estimator inputs need horizon n > 0");
    }
    if (inputs.P.size() != inputs.Lambda.size() + 1) {
        throw std::invalid_argument("P must have exactly one more entry than Lambda");
    }
}

}  // namespace

double EstimatorInputs::D() const {
    double sum_sq = 0.0;
    for (double lam : Lambda) {
        sum_sq += lam * lam;
    }
    return mean_sq - sum_sq;
}

EstimatorInputs assemble_inputs(const SamplePath& X, const PeriodicBasis& basis) {
    if (X.n_nodes() < 3) {
        throw std::invalid_argument("path needs at least three nodes");
    }
    const int p = basis.size();
    const std::size_t m = X.n_nodes();
    const double T = X.duration();
    const double x_first = X.values.front();
    const double x_last = X.values.back();

    EstimatorInputs inputs;
    inputs.n = T;
    inputs.P.resize(static_cast<std::size_t>(p) + 1);
    inputs.Lambda.resize(static_cast<std::size_t>(p));

    std::vector<double> integrand(m);
    for (int i = 0; i < p; ++i) {
        // int phi dX by parts: phi(T) X_T - phi(0) X_0 - int X phi' dt, so the
        // stochastic integral is carried by the endpoints and a dt quadrature.
        for (std::size_t k = 0; k < m; ++k) {
            integrand[k] = X.values[k] * basis.eval_derivative(i, X.time(k));
        }
        const double correction = simpson(integrand, X.dt);
        inputs.P[static_cast<std::size_t>(i)] =
            basis.eval(i, T) * x_last - basis.eval(i, 0.0) * x_first - correction;

        for (std::size_t k = 0; k < m; ++k) {
            integrand[k] = X.values[k] * basis.eval(i, X.time(k));
        }
        inputs.Lambda[static_cast<std::size_t>(i)] = simpson(integrand, X.dt) / T;
    }
    inputs.P[static_cast<std::size_t>(p)] = 0.5 * (x_last * x_last - x_first * x_first);

    for (std::size_t k = 0; k < m; ++k) {
        integrand[k] = X.values[k] * X.values[k];
    }
    inputs.mean_sq = simpson(integrand, X.dt) / T;
    return inputs;
}

EstimatorInputs assemble_inputs(const SimulatedPair& pair, const PeriodicBasis& basis) {
    return assemble_inputs(pair.X, basis);
}

Matrix invert_Q(const EstimatorInputs& inputs) {
    check_inputs(inputs);
    const std::size_t p = inputs.Lambda.size();
    const double D = inputs.D();
    if (D <= 1e-12 * std::abs(inputs.mean_sq)) {
        throw singular_matrix_error(format_singular_message(D));
    }
    const double gamma = 1.0 / D;
    const double inv_n = 1.0 / inputs.n;
    Matrix Qinv(p + 1, p + 1);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            double entry = gamma * inputs.Lambda[i] * inputs.Lambda[j];
            if (i == j) {
                entry += 1.0;
            }
            Qinv(i, j) = inv_n * entry;
        }
        Qinv(i, p) = -inv_n * gamma * inputs.Lambda[i];
        Qinv(p, i) = -inv_n * gamma * inputs.Lambda[i];
    }
    Qinv(p, p) = inv_n * gamma;
    return Qinv;
}

EstimateResult estimate(const EstimatorInputs& inputs) {
    const Matrix Qinv = invert_Q(inputs);
    const std::size_t p = inputs.Lambda.size();
    EstimateResult result;
    result.theta_hat.assign(p + 1, 0.0);
    for (std::size_t i = 0; i <= p; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j <= p; ++j) {
            sum += Qinv(i, j) * inputs.P[j];
        }
        result.theta_hat[i] = sum;
    }
    result.D = inputs.D();
    result.gamma = 1.0 / result.D;
    result.Lambda = inputs.Lambda;
    result.n = inputs.n;
    result.condition_proxy = result.gamma * inputs.n;
    return result;
}

EstimateResult estimate(const SamplePath& X, const PeriodicBasis& basis) {
    return estimate(assemble_inputs(X, basis));
}

EstimateResult estimate(const SimulatedPair& pair, const PeriodicBasis& basis) {
    return estimate(assemble_inputs(pair, basis));
}

ErrorDecomposition decompose_error(const SimulatedPair& pair, const PeriodicBasis& basis,
                                   const ModelParams& true_params) {
    if (pair.B.empty()) {
        throw std::invalid_argument("error decomposition needs the driving path B");
    }
    if (!(true_params.sigma > 0.0)) {
        throw std::invalid_argument("error decomposition needs sigma > 0");
    }
    const std::size_t p = static_cast<std::size_t>(basis.size());
    if (true_params.drift.mu.size() != p) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }

    const EstimatorInputs inputs = assemble_inputs(pair, basis);
    const double D = inputs.D();
    if (D <= 1e-12 * std::abs(inputs.mean_sq)) {
        throw singular_matrix_error(format_singular_message(D));
    }
    const double gamma = 1.0 / D;
    const double n = inputs.n;
    const double alpha = true_params.alpha;

    // Recover R = (P - Q theta) / sigma, so the reconstruction identities
    // hold exactly for the same discretization rules used by the estimator.
    std::vector<double> R(p + 1);
    double lambda_dot_mu = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        const double q_row = n * true_params.drift.mu[j] + n * inputs.Lambda[j] * alpha;
        R[j] = (inputs.P[j] - q_row) / true_params.sigma;
        lambda_dot_mu += inputs.Lambda[j] * true_params.drift.mu[j];
    }
    const double q_last = n * lambda_dot_mu + n * inputs.mean_sq * alpha;
    R[p] = (inputs.P[p] - q_last) / true_params.sigma;

    ErrorDecomposition decomp;
    decomp.M1.resize(p);
    decomp.M2 = Matrix(p, p);
    decomp.M3.resize(p);
    decomp.A1.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        decomp.M1[i] = R[i] / n;
        for (std::size_t j = 0; j < p; ++j) {
            decomp.M2(i, j) = gamma * inputs.Lambda[i] * inputs.Lambda[j] * R[j] / n;
        }
        decomp.M3[i] = gamma * inputs.Lambda[i] * R[p] / n;
        decomp.A1[i] = gamma * inputs.Lambda[i] * R[i] / n;
    }
    decomp.A2 = gamma * R[p] / n;
    return decomp;
}

}  // namespace fou
