#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fou/asymptotics.hpp"
#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"

using Catch::Approx;
using namespace fou;

namespace {

ModelParams make_params(double hurst, double alpha, double sigma, double x0,
                        int order, std::vector<double> mu) {
    ModelParams params;
    params.hurst = hurst;
    params.alpha = alpha;
    params.sigma = sigma;
    params.x0 = x0;
    params.drift.basis = PeriodicBasis::fourier(order);
    params.drift.mu = std::move(mu);
    return params;
}

}  // namespace

TEST_CASE("variance convention factor", "[asymptotics]") {
    REQUIRE(variance_convention_factor(0.75) == Approx(0.375).margin(1e-15));
    REQUIRE(variance_convention_factor(0.7) == Approx(0.28).margin(1e-14));
    REQUIRE_THROWS_AS(variance_convention_factor(0.4), std::domain_error);
}

TEST_CASE("closed form of the fourier variance", "[asymptotics]") {
    REQUIRE(fourier_variance_closed_form(1, 0.55) == Approx(15.6376903740).margin(1e-8));
    REQUIRE(fourier_variance_closed_form(1, 0.65) == Approx(3.0715383467).margin(1e-9));
    REQUIRE(fourier_variance_closed_form(1, 0.75) == Approx(1.0).margin(1e-12));
    REQUIRE(fourier_variance_closed_form(1, 0.85) == Approx(0.3255697592).margin(1e-9));
    REQUIRE(fourier_variance_closed_form(2, 0.75) == Approx(0.7071067812).margin(1e-9));
    REQUIRE(fourier_variance_closed_form(1, 0.7) == Approx(1.7207131314).margin(1e-9));
    REQUIRE_THROWS_AS(fourier_variance_closed_form(0, 0.75), std::invalid_argument);
}

TEST_CASE("series and integral representations hit the closed form", "[asymptotics]") {
    auto basis = PeriodicBasis::fourier(2);
    struct Case {
        int k;
        int n_freq;
        double hurst;
    };
    // k = 1 is sqrt2 sin(2 pi t), k = 2 is sqrt2 cos(2 pi t), k = 3 is
    // sqrt2 sin(4 pi t)
    const Case cases[] = {
        {1, 1, 0.55}, {1, 1, 0.65}, {1, 1, 0.75}, {1, 1, 0.85},
        {2, 1, 0.65}, {2, 1, 0.75}, {3, 2, 0.55}, {3, 2, 0.75},
    };
    for (const auto& c : cases) {
        double closed = fourier_variance_closed_form(c.n_freq, c.hurst);
        double tail_i = 0.0;
        double by_integral = zero_integral_variance_integral(basis, c.k, c.hurst, &tail_i);
        REQUIRE(by_integral == Approx(closed).margin(1e-8 + tail_i));
        double tail_s = 0.0;
        double by_series = zero_integral_variance_series(basis, c.k, c.hurst, 40, &tail_s);
        REQUIRE(tail_s >= 0.0);
        REQUIRE(std::abs(by_series - closed) <= tail_s + 1e-6 * closed + 1e-9);
        REQUIRE(by_series > 0.0);
        REQUIRE(by_integral > 0.0);
    }
}

TEST_CASE("series truncation is stable", "[asymptotics]") {
    auto basis = PeriodicBasis::fourier(1);
    double v30 = zero_integral_variance_series(basis, 1, 0.75, 30);
    double v40 = zero_integral_variance_series(basis, 1, 0.75, 40);
    REQUIRE(std::abs(v40 - v30) < 1e-4);
    double c30 = zero_integral_variance_series(basis, 2, 0.75, 30);
    double c40 = zero_integral_variance_series(basis, 2, 0.75, 40);
    REQUIRE(std::abs(c40 - c30) < 5e-3);
    REQUIRE_THROWS_AS(zero_integral_variance_series(basis, 1, 0.75, -1),
                      std::invalid_argument);
}

TEST_CASE("zero integral precondition is enforced", "[asymptotics]") {
    auto basis = PeriodicBasis::fourier(1);
    REQUIRE_THROWS_AS(zero_integral_variance_series(basis, 0, 0.75), std::domain_error);
    REQUIRE_THROWS_AS(zero_integral_variance_integral(basis, 0, 0.75), std::domain_error);
}

TEST_CASE("finite horizon oracle", "[asymptotics]") {
    auto basis = PeriodicBasis::fourier(1);
    // constant element: variance of B_n / sqrt(n) is n^{2H-1}
    REQUIRE(scaled_integral_variance_oracle(basis, 0, 0.75, 4) == Approx(2.0).epsilon(1e-10));
    REQUIRE(scaled_integral_variance_oracle(basis, 0, 0.75, 16) == Approx(4.0).epsilon(1e-10));
    // sine element spot values
    REQUIRE(scaled_integral_variance_oracle(basis, 1, 0.75, 1) ==
            Approx(0.427678395147).margin(1e-9));
    REQUIRE(scaled_integral_variance_oracle(basis, 1, 0.75, 4) ==
            Approx(0.392642788792).margin(1e-9));
    REQUIRE(scaled_integral_variance_oracle(basis, 1, 0.75, 16) ==
            Approx(0.380001700157).margin(1e-9));
    REQUIRE(scaled_integral_variance_oracle(basis, 1, 0.75, 128) ==
            Approx(0.375673174287).margin(1e-9));
    REQUIRE(scaled_integral_variance_oracle(basis, 1, 0.7, 20) ==
            Approx(0.4854644586).margin(1e-9));
    REQUIRE_THROWS_AS(scaled_integral_variance_oracle(basis, 1, 0.75, 0),
                      std::invalid_argument);
}

TEST_CASE("triple agreement of the variance representations", "[asymptotics]") {
    auto basis = PeriodicBasis::fourier(1);
    auto v = zero_integral_variance(basis, 1, 0.75);
    REQUIRE(v.convention_factor == Approx(0.375).margin(1e-15));
    REQUIRE(v.resolved_series() == Approx(0.375).epsilon(1e-4));
    REQUIRE(v.resolved_integral() == Approx(0.375).epsilon(1e-8));
    REQUIRE(v.by_oracle == Approx(0.375673174287).margin(1e-9));
    REQUIRE(v.max_rel_dev() < 0.005);
    REQUIRE(std::abs(v.by_series - v.by_integral) <=
            v.series_tail_bound + v.integral_tail_bound + 1e-8);

    auto w = zero_integral_variance(basis, 1, 0.7);
    REQUIRE(w.resolved_integral() == Approx(0.4817996768).margin(1e-8));
    REQUIRE(w.max_rel_dev() < 0.005);
}

TEST_CASE("kernel integral of the fourier family", "[asymptotics]") {
    REQUIRE(fourier_kernel_integral(1, 1, 1.0) == Approx(0.0848986660128).margin(1e-10));
    REQUIRE(fourier_kernel_integral(2, 2, 1.0) ==
            Approx(0.021625349461069186).margin(1e-12));
    REQUIRE(fourier_kernel_integral(3, 3, 5.0) ==
            Approx(3.8761747838781987).margin(1e-10));
    REQUIRE(fourier_kernel_integral(1, 2, 1.0) == 0.0);
    REQUIRE(fourier_kernel_integral(2, 1, 5.0) == 0.0);
    REQUIRE_THROWS_AS(fourier_kernel_integral(0, 1, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(fourier_kernel_integral(1, 1, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(fourier_kernel_integral(1, 1, -2.0), std::domain_error);
}

TEST_CASE("gaussian limit covariance is rank one", "[asymptotics]") {
    auto gl = limit_cov_matrix(PeriodicBasis::fourier(1), 2.0);
    REQUIRE(gl.scale == 2.0);
    REQUIRE(gl.cov.rows == 3);
    REQUIRE(gl.cov.cols == 3);
    REQUIRE(gl.cov(0, 0) == Approx(1.0).margin(1e-14));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == 0 && j == 0) continue;
            REQUIRE(gl.cov(i, j) == Approx(0.0).margin(1e-14));
        }
    }
}

TEST_CASE("ratio law parameters", "[asymptotics]") {
    // classical boundary case with zero drift: m = sqrt(2)
    auto boundary = make_params(0.7, 1.0, 1.0, 1.0, 0, {0.0});
    boundary.hurst = 0.5;
    auto law = ratio_limit_params(boundary);
    REQUIRE(law.alpha == 1.0);
    REQUIRE(law.m == Approx(std::sqrt(2.0)).margin(1e-9));

    auto params = make_params(0.7, 1.0, 1.0, 1.0, 1, {3.0, 0.5, -0.5});
    REQUIRE(ratio_limit_params(params).m == Approx(5.1926739863547).margin(1e-8));
}

TEST_CASE("ratio distribution function", "[asymptotics]") {
    RatioLimit cauchy{1.0, 0.0};
    // with a centred denominator the law is cauchy with scale 2 alpha
    const double pi = 3.14159265358979323846;
    for (double z : {-3.0, -1.0, -0.25, 0.5, 2.0, 7.0}) {
        double closed = 0.5 + std::atan(z / 2.0) / pi;
        REQUIRE(ratio_cdf(cauchy, z) == Approx(closed).margin(1e-6));
    }
    REQUIRE(ratio_cdf(cauchy, 0.0) == 0.5);
    REQUIRE(ratio_cdf(cauchy, 2.0) == Approx(0.75).margin(1e-7));

    RatioLimit law{0.7, 1.2};
    REQUIRE(ratio_cdf(law, 0.0) == 0.5);
    REQUIRE(ratio_cdf(law, -1.0) == Approx(0.2130520781).margin(1e-6));
    REQUIRE(ratio_cdf(law, 0.3) == Approx(0.6087824624).margin(1e-6));
    REQUIRE(ratio_cdf(law, 1.7) == Approx(0.8682588902).margin(1e-6));
    double prev = 0.0;
    for (double z = -6.0; z <= 6.0; z += 0.5) {
        double cur = ratio_cdf(law, z);
        REQUIRE(cur >= prev);
        REQUIRE(cur <= 1.0);
        prev = cur;
    }

    RatioLimit sharp{1.0, 10.0};
    REQUIRE(ratio_cdf(sharp, 0.5) == Approx(0.9923533145).margin(1e-6));
}

TEST_CASE("ratio quantile inverts the distribution function", "[asymptotics]") {
    RatioLimit law{0.7, 1.2};
    for (double prob : {0.05, 0.3, 0.5, 0.77, 0.95}) {
        double q = ratio_quantile(law, prob);
        REQUIRE(ratio_cdf(law, q) == Approx(prob).margin(1e-7));
    }
    REQUIRE(ratio_quantile(law, 0.5) == Approx(0.0).margin(1e-8));
    REQUIRE_THROWS_AS(ratio_quantile(law, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(ratio_quantile(law, 1.0), std::domain_error);
}
