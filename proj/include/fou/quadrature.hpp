#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fou {

double trapezoid(std::span<const double> f, double dt);

// Running trapezoid integral; result[0] = 0, same length as the input.
std::vector<double> cumulative_trapezoid(std::span<const double> f, double dt);

// Composite Simpson on a uniform grid. An odd interval count is handled by
// a 3/8 panel at the end, preserving fourth-order accuracy.
double simpson(std::span<const double> f, double dt);

// Gauss-Legendre nodes and weights on [-1,1]; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int order);

// Adaptive Simpson with absolute tolerance.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double abs_tol);

}  // namespace fou
