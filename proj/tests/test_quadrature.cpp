#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "fou/quadrature.hpp"

using Catch::Approx;
using namespace fou;

namespace {

std::vector<double> tabulate(double (*f)(double), double a, double dt, std::size_t n_nodes) {
    std::vector<double> out(n_nodes);
    for (std::size_t k = 0; k < n_nodes; ++k) out[k] = f(a + dt * double(k));
    return out;
}

}  // namespace

TEST_CASE("trapezoid is exact on linear functions", "[quadrature]") {
    auto f = tabulate(+[](double t) { return 2.0 * t + 1.0; }, 0.0, 0.25, 5);
    REQUIRE(trapezoid(f, 0.25) == Approx(2.0).margin(1e-15));
}

TEST_CASE("cumulative trapezoid starts at zero and ends at the total", "[quadrature]") {
    auto f = tabulate(+[](double t) { return t * t; }, 0.0, 0.1, 11);
    auto cum = cumulative_trapezoid(f, 0.1);
    REQUIRE(cum.size() == f.size());
    REQUIRE(cum.front() == 0.0);
    REQUIRE(cum.back() == Approx(trapezoid(f, 0.1)).margin(1e-15));
    // constant integrand gives a linear ramp
    std::vector<double> ones(7, 2.0);
    auto ramp = cumulative_trapezoid(ones, 0.5);
    for (std::size_t k = 0; k < ramp.size(); ++k) {
        REQUIRE(ramp[k] == Approx(double(k)).margin(1e-15));
    }
}

TEST_CASE("simpson is exact on cubics for even and odd interval counts", "[quadrature]") {
    auto cubic = +[](double t) { return t * t * t; };
    // 10 intervals (even count)
    auto f_even = tabulate(cubic, 0.0, 0.1, 11);
    REQUIRE(simpson(f_even, 0.1) == Approx(0.25).margin(1e-14));
    // 9 intervals (odd count, ends with a 3/8 panel)
    auto f_odd = tabulate(cubic, 0.0, 1.0 / 9.0, 10);
    REQUIRE(simpson(f_odd, 1.0 / 9.0) == Approx(0.25).margin(1e-14));
}

TEST_CASE("simpson converges at fourth order on smooth integrands", "[quadrature]") {
    auto f = +[](double t) { return std::exp(t); };
    double exact = std::exp(1.0) - 1.0;
    double err_coarse = std::abs(simpson(tabulate(f, 0.0, 1.0 / 16.0, 17), 1.0 / 16.0) - exact);
    double err_fine = std::abs(simpson(tabulate(f, 0.0, 1.0 / 32.0, 33), 1.0 / 32.0) - exact);
    REQUIRE(err_fine < err_coarse / 12.0);
}

TEST_CASE("gauss legendre rules integrate high degree polynomials exactly", "[quadrature]") {
    const auto& rule = gauss_legendre(8);
    REQUIRE(rule.size() == 8);
    double wsum = 0.0;
    for (const auto& [x, w] : rule) {
        wsum += w;
        REQUIRE(std::abs(x) < 1.0);
    }
    REQUIRE(wsum == Approx(2.0).margin(1e-13));
    // order 8 is exact through degree 15
    double v = gl_integrate([](double t) { return std::pow(t, 15); }, 0.0, 1.0, 8);
    REQUIRE(v == Approx(1.0 / 16.0).margin(1e-13));
    double c = gl_integrate([](double t) { return std::cos(t); }, 0.0, 1.5707963267948966, 32);
    REQUIRE(c == Approx(1.0).margin(1e-13));
}

TEST_CASE("adaptive quadrature meets its tolerance", "[quadrature]") {
    double v = adaptive_quadrature([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-12);
    REQUIRE(v == Approx(std::exp(1.0) - 1.0).margin(1e-10));
    double s = adaptive_quadrature([](double t) { return std::sin(t); }, 0.0,
                                   3.141592653589793, 1e-10);
    REQUIRE(s == Approx(2.0).margin(1e-9));
    // integrand with a kink
    double k = adaptive_quadrature([](double t) { return std::abs(t - 1.0 / 3.0); }, 0.0, 1.0,
                                   1e-10);
    REQUIRE(k == Approx(5.0 / 18.0).margin(1e-8));
}
