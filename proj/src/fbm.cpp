#include "fou/fbm.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

#include "fou/rng.hpp"

namespace fou {

namespace {

// FFTW planning is not thread-safe; executing distinct plans is.
std::mutex& fftw_planner_mutex() {
    static std::mutex mutex;
    return mutex;
}

constexpr double kEigenvalueTolerance = 1e-12;  // relative to the largest

std::vector<double> embedded_circulant_row(std::size_t n_steps, double dt, double hurst) {
    const std::size_t m = 2 * n_steps;
    const std::vector<double> gamma = fgn_autocovariance(n_steps, dt, hurst);
    std::vector<double> row(m);
    for (std::size_t j = 0; j < m; ++j) {
        row[j] = gamma[std::min(j, m - j)];
    }
    return row;
}

std::vector<double> cumulative_path(const std::vector<double>& increments) {
    std::vector<double> values(increments.size() + 1, 0.0);
    for (std::size_t k = 0; k < increments.size(); ++k) {
        values[k + 1] = values[k] + increments[k];
    }
    return values;
}

}  // namespace

void check_hurst(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0)) {
        throw std::domain_error("hurst index must lie in (0,1)");
    }
}

void check_hurst_inference(double hurst) {
    if (!(hurst > 0.5 && hurst < 1.0)) {
        throw std::domain_error("inference requires a hurst index in (0.5,1)");
    }
}

double fbm_covariance(double t, double s, double hurst) {
    check_hurst(hurst);
    if (t < 0.0 || s < 0.0) {
        throw std::domain_error("fbm_covariance: negative time");
    }
    const double h2 = 2.0 * hurst;
    return 0.5 * (std::pow(t, h2) + std::pow(s, h2) - std::pow(std::abs(t - s), h2));
}

std::vector<double> fgn_autocovariance(std::size_t n_lags, double dt, double hurst) {
    check_hurst(hurst);
    if (dt <= 0.0) throw std::domain_error("fgn_autocovariance: dt must be positive");
    const double h2 = 2.0 * hurst;
    const double scale = std::pow(dt, h2);
    std::vector<double> gamma(n_lags + 1);
    for (std::size_t k = 0; k <= n_lags; ++k) {
        const double kd = static_cast<double>(k);
        gamma[k] = 0.5 * scale *
                   (std::pow(kd + 1.0, h2) - 2.0 * std::pow(kd, h2) +
                    std::pow(std::abs(kd - 1.0), h2));
    }
    return gamma;
}

std::vector<double> fgn_spectrum(std::size_t n_steps, double dt, double hurst) {
    if (n_steps < 1) throw std::invalid_argument("fgn_spectrum: n_steps must be >= 1");
    const std::size_t m = 2 * n_steps;
    std::vector<double> row = embedded_circulant_row(n_steps, dt, hurst);

    std::vector<double> in(m);
    std::vector<std::complex<double>> out(m / 2 + 1);
    std::copy(row.begin(), row.end(), in.begin());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }

    // The symmetric first row gives a real spectrum; mirror the half output.
    std::vector<double> lambda(m);
    for (std::size_t j = 0; j <= m / 2; ++j) lambda[j] = out[j].real();
    for (std::size_t j = m / 2 + 1; j < m; ++j) lambda[j] = lambda[m - j];
    return lambda;
}

SamplePath sample_fbm(std::size_t n_steps, double dt, double hurst, Seed seed) {
    if (n_steps < 1) throw std::invalid_argument("sample_fbm: n_steps must be >= 1");
    const std::vector<double> lambda = fgn_spectrum(n_steps, dt, hurst);
    const std::size_t m = 2 * n_steps;

    double lambda_max = 0.0;
    double lambda_min = lambda[0];
    for (double v : lambda) {
        lambda_max = std::max(lambda_max, v);
        lambda_min = std::min(lambda_min, v);
    }
    if (lambda_min < -kEigenvalueTolerance * lambda_max) {
        return sample_fbm_cholesky(n_steps, dt, hurst, seed);
    }

    const CounterRng rng(seed);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<std::complex<double>> half(n_steps + 1);
    const auto clipped = [&](std::size_t j) { return std::max(lambda[j], 0.0); };
    half[0] = std::sqrt(clipped(0)) * rng.normal_at(0);
    half[n_steps] = std::sqrt(clipped(n_steps)) * rng.normal_at(1);
    for (std::size_t k = 1; k < n_steps; ++k) {
        const double amp = std::sqrt(0.5 * clipped(k));
        half[k] = {amp * rng.normal_at(2 * k), amp * rng.normal_at(2 * k + 1)};
    }

    std::vector<double> synth(m);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(m),
                                    reinterpret_cast<fftw_complex*>(half.data()),
                                    synth.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> increments(n_steps);
    for (std::size_t k = 0; k < n_steps; ++k) increments[k] = synth[k] * inv_sqrt_m;

    SamplePath path;
    path.t0 = 0.0;
    path.dt = dt;
    path.values = cumulative_path(increments);
    return path;
}

SamplePath sample_fbm_cholesky(std::size_t n_steps, double dt, double hurst, Seed seed) {
    if (n_steps < 1) throw std::invalid_argument("sample_fbm_cholesky: n_steps must be >= 1");
    const std::vector<double> gamma = fgn_autocovariance(n_steps, dt, hurst);
    const auto n = static_cast<Eigen::Index>(n_steps);
    Eigen::MatrixXd cov(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            cov(i, j) = gamma[static_cast<std::size_t>(std::abs(i - j))];
        }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error(
            "sample_fbm_cholesky: increment covariance is numerically non-PSD");
    }
    const CounterRng rng(seed);
    Eigen::VectorXd g(n);
    for (Eigen::Index k = 0; k < n; ++k) g(k) = rng.normal_at(static_cast<std::uint64_t>(k));
    const Eigen::VectorXd z = llt.matrixL() * g;

    std::vector<double> increments(n_steps);
    for (std::size_t k = 0; k < n_steps; ++k) increments[k] = z(static_cast<Eigen::Index>(k));

    SamplePath path;
    path.t0 = 0.0;
    path.dt = dt;
    path.values = cumulative_path(increments);
    return path;
}

}  // namespace fou
