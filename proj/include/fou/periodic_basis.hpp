#pragma once

#include <cstddef>
#include <vector>

namespace fou {

// Bounded 1-periodic basis functions phi_0..phi_{p-1} with their exact (or
// quadrature) unit-interval integrals. Two kinds: a Fourier family
// {1, sqrt2 sin(2 pi k t), sqrt2 cos(2 pi k t)} and tabulated custom
// functions interpolated linearly on a uniform grid over [0,1].
class PeriodicBasis {
public:
    // Default state is the empty basis (p = 0).
    PeriodicBasis() = default;

    static PeriodicBasis fourier(int order);
    // One inner vector per function; values on the uniform grid 0..1
    // (both endpoints included, so each vector needs >= 3 entries).
    static PeriodicBasis custom(const std::vector<std::vector<double>>& tabulated);

    int size() const { return p_; }
    bool is_fourier() const { return fourier_order_ >= 0; }
    int fourier_order() const { return fourier_order_; }

    double eval(int i, double t) const;
    double eval_derivative(int i, double t) const;
    const std::vector<double>& unit_integrals() const { return unit_integrals_; }

    // Max |Gram - I| entry measured at construction (0 for Fourier).
    double gram_deviation() const { return gram_deviation_; }

private:
    int p_ = 0;
    int fourier_order_ = -1;  // -1 marks a custom basis
    std::vector<std::vector<double>> tab_;
    std::vector<double> unit_integrals_;
    double gram_deviation_ = 0.0;
};

struct OrthonormalityReport {
    bool ok = false;
    double max_deviation = 0.0;
};

// Gram matrix check by composite quadrature with n_nodes intervals.
OrthonormalityReport check_orthonormality(const PeriodicBasis& basis, double tol,
                                          std::size_t n_nodes = std::size_t{1} << 14);

// Drift L(t) = sum_i mu_i phi_i(t mod 1).
struct DriftFunction {
    PeriodicBasis basis;
    std::vector<double> mu;
};

double eval_drift(const DriftFunction& drift, double t);
double eval_drift_derivative(const DriftFunction& drift, double t);

// int_0^inf e^{-alpha s} L(s) ds via geometric summation over periods.
double laplace_unit_integral(const DriftFunction& drift, double alpha);

}  // namespace fou
