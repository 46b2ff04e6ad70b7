#include "fou/young.hpp"

#include <stdexcept>
#include <vector>

#include "fou/quadrature.hpp"

namespace fou {

namespace {

std::vector<double> basis_samples(const PeriodicBasis& basis, int i,
                                  const SamplePath& path) {
    const std::size_t m = path.n_nodes();
    std::vector<double> f(m);
    for (std::size_t k = 0; k < m; ++k) {
        f[k] = basis.eval(i, path.time(k));
    }
    return f;
}

}  // namespace

IntegralReport rs_integral(std::span<const double> f_values, const SamplePath& path) {
    if (path.n_nodes() < 2) {
        throw std::invalid_argument("path needs at least two nodes");
    }
    if (f_values.size() != path.n_nodes()) {
        throw std::invalid_argument("integrand length does not match path grid");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < path.n_nodes(); ++k) {
        sum += f_values[k] * (path.values[k + 1] - path.values[k]);
    }
    IntegralReport report;
    report.value = sum;
    report.rule = QuadRule::left_riemann_stieltjes;
    report.n_nodes = path.n_nodes();
    return report;
}

double integral_phi_dX(const PeriodicBasis& basis, int i, const SimulatedPair& pair) {
    const std::vector<double> f = basis_samples(basis, i, pair.X);
    return rs_integral(f, pair.X).value;
}

double integral_X_dX(const SimulatedPair& pair) {
    const double xT = pair.X.values.back();
    const double x0 = pair.X.values.front();
    return 0.5 * (xT * xT - x0 * x0);
}

double integral_phi_X_dt(const PeriodicBasis& basis, int i, const SimulatedPair& pair) {
    const std::size_t m = pair.X.n_nodes();
    std::vector<double> f(m);
    for (std::size_t k = 0; k < m; ++k) {
        f[k] = basis.eval(i, pair.X.time(k)) * pair.X.values[k];
    }
    return trapezoid(f, pair.X.dt);
}

double integral_X_sq_dt(const SimulatedPair& pair) {
    const std::size_t m = pair.X.n_nodes();
    std::vector<double> f(m);
    for (std::size_t k = 0; k < m; ++k) {
        f[k] = pair.X.values[k] * pair.X.values[k];
    }
    return trapezoid(f, pair.X.dt);
}

double integral_phi_dB(const PeriodicBasis& basis, int i, const SamplePath& B) {
    const std::vector<double> f = basis_samples(basis, i, B);
    return rs_integral(f, B).value;
}

}  // namespace fou
