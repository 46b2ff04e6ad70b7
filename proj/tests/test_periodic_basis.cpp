#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fou/periodic_basis.hpp"
#include "fou/rng.hpp"
#include "fou/types.hpp"

using Catch::Approx;
using namespace fou;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("fourier basis layout and pointwise values", "[basis]") {
    auto basis = PeriodicBasis::fourier(2);
    REQUIRE(basis.size() == 5);
    REQUIRE(basis.is_fourier());
    REQUIRE(basis.fourier_order() == 2);
    REQUIRE(basis.gram_deviation() == 0.0);
    REQUIRE(basis.unit_integrals().size() == 5);
    REQUIRE(basis.unit_integrals()[0] == Approx(1.0).margin(1e-15));
    for (int i = 1; i < 5; ++i) {
        REQUIRE(basis.unit_integrals()[i] == Approx(0.0).margin(1e-15));
    }
    const double sq2 = std::sqrt(2.0);
    REQUIRE(basis.eval(0, 0.37) == Approx(1.0).margin(1e-15));
    REQUIRE(basis.eval(1, 0.25) == Approx(sq2).margin(1e-14));
    REQUIRE(basis.eval(2, 0.25) == Approx(0.0).margin(1e-14));
    REQUIRE(basis.eval(3, 0.125) == Approx(sq2).margin(1e-14));
    REQUIRE(basis.eval(4, 0.5) == Approx(sq2 * std::cos(kTwoPi)).margin(1e-14));
    REQUIRE_THROWS_AS(PeriodicBasis::fourier(-1), std::invalid_argument);
}

TEST_CASE("basis functions are one periodic", "[basis]") {
    auto basis = PeriodicBasis::fourier(2);
    CounterRng rng(Seed{41, 0});
    for (int trial = 0; trial < 200; ++trial) {
        double t = 10.0 * rng.next_uniform() - 5.0;
        for (int i = 0; i < basis.size(); ++i) {
            REQUIRE(basis.eval(i, t + 1.0) == Approx(basis.eval(i, t)).margin(1e-10));
            REQUIRE(basis.eval(i, t + 3.0) == Approx(basis.eval(i, t)).margin(1e-10));
        }
    }
}

TEST_CASE("fourier derivatives match finite differences", "[basis]") {
    auto basis = PeriodicBasis::fourier(2);
    const double h = 1e-6;
    for (int i = 0; i < basis.size(); ++i) {
        for (double t : {0.1, 0.3, 0.77}) {
            double fd = (basis.eval(i, t + h) - basis.eval(i, t - h)) / (2.0 * h);
            REQUIRE(basis.eval_derivative(i, t) == Approx(fd).margin(1e-4));
        }
    }
    REQUIRE(basis.eval_derivative(0, 0.4) == Approx(0.0).margin(1e-15));
    REQUIRE(basis.eval_derivative(1, 0.0) == Approx(std::sqrt(2.0) * kTwoPi).margin(1e-12));
}

TEST_CASE("orthonormality check accepts fourier and flags duplicates", "[basis]") {
    auto report = check_orthonormality(PeriodicBasis::fourier(3), 1e-6);
    REQUIRE(report.ok);
    REQUIRE(report.max_deviation < 1e-10);

    // two identical constant rows give a singular gram matrix
    std::vector<double> row(9, 1.0);
    auto dup = PeriodicBasis::custom({row, row});
    auto bad = check_orthonormality(dup, 1e-6);
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.max_deviation == Approx(1.0).margin(1e-9));
}

TEST_CASE("custom basis interpolates its table", "[basis]") {
    const std::size_t m = 513;
    std::vector<double> tab(m);
    for (std::size_t k = 0; k < m; ++k) {
        tab[k] = std::sqrt(2.0) * std::sin(kTwoPi * double(k) / double(m - 1));
    }
    auto basis = PeriodicBasis::custom({tab});
    REQUIRE(basis.size() == 1);
    REQUIRE_FALSE(basis.is_fourier());
    REQUIRE(basis.unit_integrals()[0] == Approx(0.0).margin(1e-12));
    REQUIRE(basis.gram_deviation() < 1e-3);
    CounterRng rng(Seed{42, 0});
    for (int trial = 0; trial < 100; ++trial) {
        double t = rng.next_uniform();
        double exact = std::sqrt(2.0) * std::sin(kTwoPi * t);
        REQUIRE(basis.eval(0, t) == Approx(exact).margin(1e-3));
    }
    REQUIRE_THROWS_AS(PeriodicBasis::custom({}), std::invalid_argument);
    REQUIRE_THROWS_AS(PeriodicBasis::custom({{1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("drift evaluation and coefficient checks", "[basis]") {
    DriftFunction drift{PeriodicBasis::fourier(1), {1.0, 1.0, 0.0}};
    REQUIRE(eval_drift(drift, 0.25) == Approx(1.0 + std::sqrt(2.0)).margin(1e-13));
    REQUIRE(eval_drift(drift, 1.25) == Approx(1.0 + std::sqrt(2.0)).margin(1e-13));
    double fd = (eval_drift(drift, 0.3 + 1e-6) - eval_drift(drift, 0.3 - 1e-6)) / 2e-6;
    REQUIRE(eval_drift_derivative(drift, 0.3) == Approx(fd).margin(1e-4));

    DriftFunction bad{PeriodicBasis::fourier(1), {1.0, 2.0}};
    REQUIRE_THROWS_AS(eval_drift(bad, 0.1), std::invalid_argument);
}

TEST_CASE("laplace transform of the periodic drift", "[basis]") {
    DriftFunction constant{PeriodicBasis::fourier(0), {1.0}};
    REQUIRE(laplace_unit_integral(constant, 2.0) == Approx(0.5).epsilon(1e-10));

    DriftFunction sine{PeriodicBasis::fourier(1), {0.0, 1.0, 0.0}};
    double closed = std::sqrt(2.0) * kTwoPi / (1.0 + kTwoPi * kTwoPi);
    REQUIRE(laplace_unit_integral(sine, 1.0) == Approx(closed).margin(1e-9));
    REQUIRE(laplace_unit_integral(sine, 1.0) == Approx(0.2195186077).margin(1e-9));

    REQUIRE_THROWS_AS(laplace_unit_integral(constant, 0.0), std::domain_error);
    REQUIRE_THROWS_WITH(laplace_unit_integral(constant, -1.0),
                        "non-ergodic case requires alpha > 0");
}
