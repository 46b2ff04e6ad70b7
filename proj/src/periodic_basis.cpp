#include "fou/periodic_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "fou/quadrature.hpp"

namespace fou {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kSqrt2 = std::sqrt(2.0);

double wrap_unit(double t) {
    double w = t - std::floor(t);
    if (w >= 1.0) {
        w -= 1.0;
    }
    return w;
}

}  // namespace

PeriodicBasis PeriodicBasis::fourier(int order) {
    if (order < 0) {
        throw std::invalid_argument("fourier order must be >= 0");
    }
    PeriodicBasis basis;
    basis.p_ = 1 + 2 * order;
    basis.fourier_order_ = order;
    basis.unit_integrals_.assign(static_cast<std::size_t>(basis.p_), 0.0);
    basis.unit_integrals_[0] = 1.0;
    basis.gram_deviation_ = 0.0;
    return basis;
}

PeriodicBasis PeriodicBasis::custom(const std::vector<std::vector<double>>& tabulated) {
    if (tabulated.empty()) {
        throw std::invalid_argument("custom basis needs at least one function");
    }
    const std::size_t m = tabulated.front().size();
    if (m < 3) {
        throw std::invalid_argument("custom basis table needs at least 3 nodes");
    }
    for (const auto& column : tabulated) {
        if (column.size() != m) {
            throw std::invalid_argument("custom basis table columns differ in length");
        }
    }
    PeriodicBasis basis;
    basis.p_ = static_cast<int>(tabulated.size());
    basis.fourier_order_ = -1;
    basis.tab_ = tabulated;
    const double dt = 1.0 / static_cast<double>(m - 1);
    basis.unit_integrals_.resize(tabulated.size());
    for (std::size_t i = 0; i < tabulated.size(); ++i) {
        basis.unit_integrals_[i] = trapezoid(basis.tab_[i], dt);
    }
    OrthonormalityReport report = check_orthonormality(basis, 1e-6);
    basis.gram_deviation_ = report.max_deviation;
    return basis;
}

double PeriodicBasis::eval(int i, double t) const {
    if (i < 0 || i >= p_) {
        throw std::out_of_range("basis function index out of range");
    }
    if (is_fourier()) {
        if (i == 0) {
            return 1.0;
        }
        const double u = wrap_unit(t);
        if (i % 2 == 1) {
            const double k = static_cast<double>((i + 1) / 2);
            return kSqrt2 * std::sin(kTwoPi * k * u);
        }
        const double k = static_cast<double>(i / 2);
        return kSqrt2 * std::cos(kTwoPi * k * u);
    }
    const auto& column = tab_[static_cast<std::size_t>(i)];
    const std::size_t m = column.size();
    const double u = wrap_unit(t);
    const double x = u * static_cast<double>(m - 1);
    std::size_t j = static_cast<std::size_t>(x);
    if (j >= m - 1) {
        j = m - 2;
    }
    const double frac = x - static_cast<double>(j);
    return column[j] + frac * (column[j + 1] - column[j]);
}

double PeriodicBasis::eval_derivative(int i, double t) const {
    if (i < 0 || i >= p_) {
        throw std::out_of_range("basis function index out of range");
    }
    if (is_fourier()) {
        if (i == 0) {
            return 0.0;
        }
        const double u = wrap_unit(t);
        if (i % 2 == 1) {
            const double k = static_cast<double>((i + 1) / 2);
            return kSqrt2 * kTwoPi * k * std::cos(kTwoPi * k * u);
        }
        const double k = static_cast<double>(i / 2);
        return -kSqrt2 * kTwoPi * k * std::sin(kTwoPi * k * u);
    }
    const auto& column = tab_[static_cast<std::size_t>(i)];
    const std::size_t m = column.size();
    const double u = wrap_unit(t);
    const double x = u * static_cast<double>(m - 1);
    std::size_t j = static_cast<std::size_t>(x);
    if (j >= m - 1) {
        j = m - 2;
    }
    return (column[j + 1] - column[j]) * static_cast<double>(m - 1);
}

OrthonormalityReport check_orthonormality(const PeriodicBasis& basis, double tol,
                                          std::size_t n_nodes) {
    if (n_nodes < (std::size_t{1} << 14)) {
        n_nodes = std::size_t{1} << 14;
    }
    const int p = basis.size();
    const double dt = 1.0 / static_cast<double>(n_nodes);
    std::vector<std::vector<double>> samples(static_cast<std::size_t>(p),
                                             std::vector<double>(n_nodes + 1));
    for (int i = 0; i < p; ++i) {
        for (std::size_t k = 0; k <= n_nodes; ++k) {
            samples[static_cast<std::size_t>(i)][k] =
                basis.eval(i, static_cast<double>(k) * dt);
        }
    }
    double max_dev = 0.0;
    std::vector<double> product(n_nodes + 1);
    for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
            const auto& fi = samples[static_cast<std::size_t>(i)];
            const auto& fj = samples[static_cast<std::size_t>(j)];
            for (std::size_t k = 0; k <= n_nodes; ++k) {
                product[k] = fi[k] * fj[k];
            }
            const double gram = trapezoid(product, dt);
            const double target = (i == j) ? 1.0 : 0.0;
            const double dev = std::abs(gram - target);
            if (dev > max_dev) {
                max_dev = dev;
            }
        }
    }
    OrthonormalityReport report;
    report.max_deviation = max_dev;
    report.ok = max_dev <= tol;
    return report;
}

double eval_drift(const DriftFunction& drift, double t) {
    if (drift.mu.size() != static_cast<std::size_t>(drift.basis.size())) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }
    double value = 0.0;
    for (std::size_t i = 0; i < drift.mu.size(); ++i) {
        value += drift.mu[i] * drift.basis.eval(static_cast<int>(i), t);
    }
    return value;
}

double eval_drift_derivative(const DriftFunction& drift, double t) {
    if (drift.mu.size() != static_cast<std::size_t>(drift.basis.size())) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }
    double value = 0.0;
    for (std::size_t i = 0; i < drift.mu.size(); ++i) {
        value += drift.mu[i] * drift.basis.eval_derivative(static_cast<int>(i), t);
    }
    return value;
}

double laplace_unit_integral(const DriftFunction& drift, double alpha) {
    if (alpha <= 0.0) {
        throw std::domain_error("non-ergodic case requires alpha > 0");
    }
    if (drift.mu.size() != static_cast<std::size_t>(drift.basis.size())) {
        throw std::invalid_argument("drift coefficient count does not match basis size");
    }
    const auto integrand = [&](double s) { return std::exp(-alpha * s) * eval_drift(drift, s); };
    const double numerator = adaptive_quadrature(integrand, 0.0, 1.0, 1e-12);
    return numerator / (1.0 - std::exp(-alpha));
}

}  // namespace fou
