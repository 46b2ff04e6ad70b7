#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fou/rng.hpp"
#include "fou/special.hpp"
#include "fou/types.hpp"

using Catch::Approx;
using namespace fou;

TEST_CASE("counter generator is reproducible", "[rng]") {
    CounterRng a(Seed{12345, 7});
    CounterRng b(Seed{12345, 7});
    for (std::uint64_t k = 0; k < 100; ++k) {
        REQUIRE(a.word_at(k) == b.word_at(k));
        REQUIRE(a.uniform_at(k) == b.uniform_at(k));
        REQUIRE(a.normal_at(k) == b.normal_at(k));
    }
}

TEST_CASE("sequential draws match counter access", "[rng]") {
    CounterRng seq(Seed{99, 3});
    CounterRng idx(Seed{99, 3});
    for (std::uint64_t k = 0; k < 50; ++k) {
        REQUIRE(seq.next_uniform() == idx.uniform_at(k));
    }
    CounterRng seq2(Seed{99, 3});
    for (std::uint64_t k = 0; k < 50; ++k) {
        REQUIRE(seq2.next_normal() == idx.normal_at(k));
    }
}

TEST_CASE("streams and masters decorrelate", "[rng]") {
    CounterRng a(Seed{1, 0});
    CounterRng b(Seed{1, 1});
    CounterRng c(Seed{2, 0});
    int diff_stream = 0;
    int diff_master = 0;
    for (std::uint64_t k = 0; k < 16; ++k) {
        if (a.word_at(k) != b.word_at(k)) ++diff_stream;
        if (a.word_at(k) != c.word_at(k)) ++diff_master;
    }
    REQUIRE(diff_stream == 16);
    REQUIRE(diff_master == 16);
}

TEST_CASE("uniforms lie strictly inside the unit interval", "[rng]") {
    CounterRng rng(Seed{2026, 0});
    const std::size_t n = 20000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double u = rng.next_uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    REQUIRE(mean == Approx(0.5).margin(0.01));
    REQUIRE(var == Approx(1.0 / 12.0).margin(0.005));
}

TEST_CASE("normals have the right first two moments", "[rng]") {
    CounterRng rng(Seed{2026, 1});
    const std::size_t n = 20000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double z = rng.next_normal();
        REQUIRE(std::isfinite(z));
        sum += z;
        sum_sq += z * z;
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    REQUIRE(mean == Approx(0.0).margin(4.0 / std::sqrt(double(n))));
    REQUIRE(var == Approx(1.0).margin(0.05));
}

TEST_CASE("inverse normal cdf reproduces reference values", "[special]") {
    REQUIRE(inverse_normal_cdf(0.975) == Approx(1.959963984540054).margin(1e-12));
    REQUIRE(inverse_normal_cdf(1e-10) == Approx(-6.361340902404056).margin(1e-10));
    REQUIRE(inverse_normal_cdf(0.3) == Approx(-0.5244005127080408).margin(1e-12));
    REQUIRE(inverse_normal_cdf(0.5) == Approx(0.0).margin(1e-15));
}

TEST_CASE("normal cdf and inverse are consistent", "[special]") {
    REQUIRE(normal_cdf(1.96) == Approx(0.97500210485177957).margin(1e-12));
    REQUIRE(normal_cdf(-1.0) == Approx(0.15865525393145705).margin(1e-12));
    for (double p : {0.001, 0.05, 0.3, 0.5, 0.77, 0.999}) {
        REQUIRE(normal_cdf(inverse_normal_cdf(p)) == Approx(p).margin(1e-12));
    }
    for (double x : {-3.0, -0.7, 0.0, 1.3, 4.0}) {
        REQUIRE(normal_cdf(x) + normal_cdf(-x) == Approx(1.0).margin(1e-14));
    }
    REQUIRE(normal_pdf(0.0) == Approx(1.0 / std::sqrt(2.0 * 3.14159265358979323846)).margin(1e-15));
}

TEST_CASE("riemann zeta matches reference values", "[special]") {
    REQUIRE(riemann_zeta(1.5) == Approx(2.6123753486854883).epsilon(1e-12));
    REQUIRE(riemann_zeta(2.1) == Approx(1.5602165335033621).epsilon(1e-12));
    REQUIRE(riemann_zeta(2.5) == Approx(1.3414872572509172).epsilon(1e-12));
    REQUIRE(riemann_zeta(3.0) == Approx(1.2020569031595943).epsilon(1e-12));
    REQUIRE(riemann_zeta(4.0) == Approx(1.0823232337111382).epsilon(1e-12));
}

TEST_CASE("generalized binomial coefficients", "[special]") {
    REQUIRE(general_binomial(5.0, 0) == Approx(1.0).margin(1e-15));
    REQUIRE(general_binomial(5.0, 2) == Approx(10.0).epsilon(1e-13));
    REQUIRE(general_binomial(-0.5, 2) == Approx(0.375).epsilon(1e-13));
    REQUIRE(general_binomial(-0.5, 3) == Approx(-0.3125).epsilon(1e-13));
    // binom(2H-2, 2) at H = 0.75 equals binom(-1/2, 2)
    REQUIRE(general_binomial(2.0 * 0.75 - 2.0, 2) == Approx(0.375).epsilon(1e-13));
}

TEST_CASE("kolmogorov tail probability matches reference values", "[special]") {
    REQUIRE(kolmogorov_sf(0.5) == Approx(0.96394524366487509).margin(1e-10));
    REQUIRE(kolmogorov_sf(0.8) == Approx(0.54414241157419808).margin(1e-10));
    REQUIRE(kolmogorov_sf(1.0) == Approx(0.26999967167735452).margin(1e-10));
    REQUIRE(kolmogorov_sf(1.36) == Approx(0.049485876755377884).margin(1e-10));
    REQUIRE(kolmogorov_sf(2.0) == Approx(0.00067092525577969535).margin(1e-12));
    REQUIRE(kolmogorov_sf(0.5) > kolmogorov_sf(0.8));
    REQUIRE(kolmogorov_sf(0.8) > kolmogorov_sf(1.0));
    REQUIRE(kolmogorov_sf(1.0) > kolmogorov_sf(2.0));
}
