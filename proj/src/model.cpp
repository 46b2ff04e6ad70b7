#include "fou/model.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fou/fbm.hpp"
#include "fou/quadrature.hpp"

namespace fou {

void validate_params(const ModelParams& params) {
    check_hurst_inference(params.hurst);
    if (params.alpha <= 0.0) {
        throw std::domain_error("non-ergodic case requires alpha > 0");
    }
    if (params.sigma < 0.0) {
        throw std::domain_error("sigma must be >= 0");
    }
    if (params.drift.mu.size() != static_cast<std::size_t>(params.drift.basis.size())) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }
}

std::size_t default_n_steps(double T) {
    if (!(T > 0.0)) {
        throw std::domain_error("horizon T must be > 0");
    }
    std::size_t n = static_cast<std::size_t>(std::ceil(256.0 * T));
    if (n < 4096) {
        n = 4096;
    }
    if (n % 2 != 0) {
        ++n;
    }
    return n;
}

SimulatedPair simulate_with_driver(const ModelParams& params, const SamplePath& B) {
    validate_params(params);
    if (B.n_nodes() < 2) {
        throw std::invalid_argument("driver path needs at least two nodes");
    }
    const std::size_t n = B.n_nodes() - 1;
    const double dt = B.dt;
    const double alpha = params.alpha;

    std::vector<double> drift_decay(n + 1);
    std::vector<double> driver_decay(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double decay = std::exp(-alpha * t);
        drift_decay[k] = decay * eval_drift(params.drift, t);
        driver_decay[k] = decay * B.values[k];
    }
    const std::vector<double> G = cumulative_trapezoid(drift_decay, dt);
    const std::vector<double> Hc = cumulative_trapezoid(driver_decay, dt);

    SimulatedPair pair;
    pair.params = params;
    pair.B = B;
    pair.X.t0 = B.t0;
    pair.X.dt = dt;
    pair.X.values.resize(n + 1);
    pair.X.values[0] = params.x0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double growth = std::exp(alpha * t);
        const double deterministic = growth * (params.x0 + G[k]);
        const double xi = B.values[k] + alpha * growth * Hc[k];
        pair.X.values[k] = deterministic + params.sigma * xi;
    }
    return pair;
}

SimulatedPair simulate(const ModelParams& params, double T, std::size_t n_steps,
                       Seed seed) {
    validate_params(params);
    if (!(T > 0.0)) {
        throw std::domain_error("horizon T must be > 0");
    }
    if (n_steps < 2) {
        throw std::invalid_argument("n_steps must be >= 2");
    }
    const double dt = T / static_cast<double>(n_steps);
    const SamplePath B = sample_fbm(n_steps, dt, params.hurst, seed);
    return simulate_with_driver(params, B);
}

double xi_tilde_terminal(const SimulatedPair& pair) {
    const double T = pair.X.duration();
    return std::exp(-pair.params.alpha * T) * pair.X.values.back();
}

MeanVar xi_infty_mean_var(const ModelParams& params) {
    // The limit-law formulas extend continuously to the classical boundary
    // H = 1/2, so this accepts it even though simulation does not.
    if (!(params.hurst >= 0.5 && params.hurst < 1.0)) {
        throw std::domain_error("limit laws require hurst in [0.5, 1)");
    }
    if (params.alpha <= 0.0) {
        throw std::domain_error("non-ergodic case requires alpha > 0");
    }
    if (params.sigma < 0.0) {
        throw std::domain_error("sigma must be >= 0");
    }
    if (params.drift.mu.size() != static_cast<std::size_t>(params.drift.basis.size())) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }
    MeanVar out;
    out.mean = params.x0 + laplace_unit_integral(params.drift, params.alpha);
    const double H = params.hurst;
    out.var = params.sigma * params.sigma * H * std::tgamma(2.0 * H) /
              std::pow(params.alpha, 2.0 * H);
    return out;
}

}  // namespace fou
