#include "fou/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fou/quadrature.hpp"
#include "fou/special.hpp"
#include "fou/types.hpp"

namespace fou {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kZeroIntegralTol = 1e-8;

void check_zero_integral(const PeriodicBasis& basis, int k) {
    if (k < 0 || k >= basis.size()) {
        throw std::out_of_range("basis function index out of range");
    }
    const double unit = basis.unit_integrals()[static_cast<std::size_t>(k)];
    if (std::abs(unit) > kZeroIntegralTol) {
        throw std::domain_error("basis element must have zero unit-interval integral");
    }
}

// Autocorrelation r(u) = int_0^{1-u} phi(t) phi(t+u) dt of one basis element.
double autocorrelation(const PeriodicBasis& basis, int k, double u) {
    if (u >= 1.0) {
        return 0.0;
    }
    const auto f = [&](double t) { return basis.eval(k, t) * basis.eval(k, t + u); };
    return gl_integrate(f, 0.0, 1.0 - u, 64);
}

struct NodeCache {
    std::vector<double> nodes;    // abscissae on [0,1]
    std::vector<double> weights;  // matching weights on [0,1]
    std::vector<double> values;   // cached integrand values
};

// Evaluate f on the Gauss-Legendre rule mapped to [0,1] and keep the samples.
NodeCache cache_on_unit(const std::function<double(double)>& f, int order) {
    const auto& rule = gauss_legendre(order);
    NodeCache cache;
    cache.nodes.reserve(rule.size());
    cache.weights.reserve(rule.size());
    cache.values.reserve(rule.size());
    for (const auto& [x, w] : rule) {
        const double node = 0.5 * (x + 1.0);
        cache.nodes.push_back(node);
        cache.weights.push_back(0.5 * w);
        cache.values.push_back(f(node));
    }
    return cache;
}

double weighted_sum(const NodeCache& cache, const std::function<double(double)>& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < cache.nodes.size(); ++i) {
        sum += cache.weights[i] * cache.values[i] * g(cache.nodes[i]);
    }
    return sum;
}

}  // namespace

GaussianLimit limit_cov_matrix(const PeriodicBasis& basis, double sigma) {
    const std::size_t p = static_cast<std::size_t>(basis.size());
    const std::vector<double>& unit = basis.unit_integrals();
    GaussianLimit limit;
    limit.scale = sigma;
    limit.cov = Matrix(p, p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            limit.cov(i, j) = unit[i] * unit[j];
        }
    }
    return limit;
}

RatioLimit ratio_limit_params(const ModelParams& params) {
    // Like xi_infty_mean_var, the formula is valid down to the classical
    // boundary H = 1/2.
    if (!(params.hurst >= 0.5 && params.hurst < 1.0)) {
        throw std::domain_error("limit laws require hurst in [0.5, 1)");
    }
    if (params.alpha <= 0.0) {
        throw std::domain_error("non-ergodic case requires alpha > 0");
    }
    const double H = params.hurst;
    const double alpha = params.alpha;
    RatioLimit law;
    law.alpha = alpha;
    const double denom_scale = std::sqrt(H * std::tgamma(2.0 * H));
    law.m = std::pow(alpha, H) / denom_scale *
            (params.x0 + laplace_unit_integral(params.drift, alpha));
    return law;
}

double ratio_cdf(const RatioLimit& law, double z) {
    if (!(law.alpha > 0.0)) {
        throw std::domain_error("ratio law requires alpha > 0");
    }
    if (z == 0.0) {
        return 0.5;
    }
    const double m = std::abs(law.m);
    const double half_slope = z / (2.0 * law.alpha);
    const auto integrand = [&](double u) {
        return normal_cdf(half_slope * u) * (normal_pdf(u - m) + normal_pdf(u + m));
    };
    const double value = adaptive_quadrature(integrand, 0.0, m + 12.0, 1e-9);
    return std::clamp(value, 0.0, 1.0);
}

double ratio_quantile(const RatioLimit& law, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::domain_error("quantile probability must lie in (0,1)");
    }
    double lo = -1.0;
    double hi = 1.0;
    while (ratio_cdf(law, lo) > prob) {
        lo *= 2.0;
        if (lo < -1e12) {
            throw std::runtime_error("quantile bracket failed on the left");
        }
    }
    while (ratio_cdf(law, hi) < prob) {
        hi *= 2.0;
        if (hi > 1e12) {
            throw std::runtime_error("quantile bracket failed on the right");
        }
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-10 * (1.0 + std::abs(lo)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (ratio_cdf(law, mid) < prob) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double variance_convention_factor(double hurst) {
    check_hurst_inference(hurst);
    return hurst * (2.0 * hurst - 1.0);
}

double zero_integral_variance_series(const PeriodicBasis& basis, int k, double hurst,
                                     int l_max, double* tail_bound) {
    check_hurst_inference(hurst);
    check_zero_integral(basis, k);
    if (l_max < 0) {
        throw std::invalid_argument("series truncation order must be >= 0");
    }
    const double H = hurst;
    const double x = 2.0 * H - 2.0;

    // r sampled once on the unit Gauss-Legendre rule serves every J_{2l}.
    const auto r_of = [&](double u) { return autocorrelation(basis, k, u); };
    NodeCache r_cache = cache_on_unit(r_of, 96);

    // T0 = 2 int_0^1 u^{2H-2} r(u) du, regularized by w = u^{2H-1}.
    const double sub_power = 1.0 / (2.0 * H - 1.0);
    const double t0 =
        2.0 * sub_power *
        gl_integrate([&](double w) { return r_of(std::pow(w, sub_power)); }, 0.0, 1.0, 96);

    const auto j_moment = [&](int q) {
        double sum = 0.0;
        for (std::size_t i = 0; i < r_cache.nodes.size(); ++i) {
            sum += r_cache.weights[i] * r_cache.values[i] *
                   std::pow(r_cache.nodes[i], static_cast<double>(q));
        }
        return 2.0 * sum;
    };

    const auto term_at = [&](int l) {
        return 2.0 * general_binomial(x, 2 * l) * riemann_zeta(2.0 * l + 2.0 - 2.0 * H) *
               j_moment(2 * l);
    };

    double total = t0;
    for (int l = 1; l <= l_max; ++l) {
        total += term_at(l);
    }
    if (tail_bound != nullptr) {
        // The terms decay like l^{-(2H+1)}, so a geometric extrapolation from
        // the measured ratio underestimates the remainder. Fit the decay
        // exponent from the next two terms and use the integral comparison
        // bound sum_{l > L} C l^{-q} <= t1 (1 + (L+1)/(q-1)).
        const double l1 = static_cast<double>(l_max + 1);
        const double t1 = std::abs(term_at(l_max + 1));
        const double t2 = std::abs(term_at(l_max + 2));
        double ratio = (t1 > 0.0) ? t2 / t1 : 0.0;
        ratio = std::clamp(ratio, 0.0, 0.999);
        const double geometric = t1 / (1.0 - ratio);
        double polynomial = geometric;
        if (t1 > 0.0 && t2 > 0.0 && t2 < t1) {
            const double q = std::log(t1 / t2) / std::log((l1 + 1.0) / l1);
            if (q > 1.0) {
                polynomial = t1 * (1.0 + l1 / (q - 1.0));
            }
        }
        *tail_bound = std::max(geometric, polynomial);
    }
    return total;
}

double zero_integral_variance_integral(const PeriodicBasis& basis, int k, double hurst,
                                       double* tail_bound) {
    check_hurst_inference(hurst);
    check_zero_integral(basis, k);
    const double H = hurst;
    const double gamma_factor = std::tgamma(2.0 - 2.0 * H);

    const auto r_of = [&](double u) { return autocorrelation(basis, k, u); };
    const auto gr_of = [&](double v) { return r_of(v) + r_of(1.0 - v); };

    // Split off the exactly-representable part: the full double integral
    // equals 2 int_0^1 gr(v) v^{2H-2} dv plus the remainder below, whose
    // u-integrand is exponentially damped instead of exponentially growing.
    const double sub_power = 1.0 / (2.0 * H - 1.0);
    const double boundary =
        2.0 * sub_power *
        gl_integrate([&](double w) { return gr_of(std::pow(w, sub_power)); }, 0.0, 1.0, 96);

    NodeCache gr_cache = cache_on_unit(gr_of, 64);
    const auto q_of = [&](double u) {
        if (u == 0.0) {
            return -2.0 * weighted_sum(gr_cache, [](double v) { return v; });
        }
        double num = 0.0;
        for (std::size_t i = 0; i < gr_cache.nodes.size(); ++i) {
            num += gr_cache.weights[i] * gr_cache.values[i] *
                   std::expm1(-u * gr_cache.nodes[i]);
        }
        return 2.0 * num / std::expm1(u);
    };

    // int_0^1 u^{1-2H} q(u) du, regularized by w = u^{2-2H}.
    const double head_power = 1.0 / (2.0 - 2.0 * H);
    const double head =
        head_power *
        gl_integrate([&](double w) { return q_of(std::pow(w, head_power)); }, 0.0, 1.0, 96);

    const double kCutoff = 60.0;
    const double body = adaptive_quadrature(
        [&](double u) { return std::pow(u, 1.0 - 2.0 * H) * q_of(u); }, 1.0, kCutoff,
        1e-12);

    if (tail_bound != nullptr) {
        double abs_gr = 0.0;
        for (std::size_t i = 0; i < gr_cache.nodes.size(); ++i) {
            abs_gr += gr_cache.weights[i] * std::abs(gr_cache.values[i]);
        }
        const double C = 2.0 * abs_gr;
        *tail_bound = C * std::pow(kCutoff, 1.0 - 2.0 * H) * std::exp(-kCutoff) /
                      (1.0 - std::exp(-kCutoff)) / gamma_factor;
    }
    return boundary + (head + body) / gamma_factor;
}

double scaled_integral_variance_oracle(const PeriodicBasis& basis, int k, double hurst,
                                       int n) {
    check_hurst_inference(hurst);
    if (k < 0 || k >= basis.size()) {
        throw std::out_of_range("basis function index out of range");
    }
    if (n < 1) {
        throw std::invalid_argument("oracle horizon n must be >= 1");
    }
    const double H = hurst;
    const double exponent = 2.0 * H - 2.0;
    const auto r_of = [&](double u) { return autocorrelation(basis, k, u); };

    // Lag-0 cell: 2 int_0^1 u^{2H-2} r(u) du with the w = u^{2H-1} change.
    const double sub_power = 1.0 / (2.0 * H - 1.0);
    const double c0 =
        2.0 * sub_power *
        gl_integrate([&](double w) { return r_of(std::pow(w, sub_power)); }, 0.0, 1.0, 96);

    // r cached on [0,1] nodes serves every smooth lag cell.
    NodeCache r_cache = cache_on_unit(r_of, 64);

    double total = c0;
    for (int lag = 1; lag < n; ++lag) {
        double c_lag;
        if (lag == 1) {
            // The x in [-1,0] half touches the kernel singularity at x=-1;
            // regularize it with the same power substitution.
            const double left =
                sub_power * gl_integrate(
                                [&](double w) {
                                    return r_of(1.0 - std::pow(w, sub_power));
                                },
                                0.0, 1.0, 96);
            double right = 0.0;
            for (std::size_t i = 0; i < r_cache.nodes.size(); ++i) {
                right += r_cache.weights[i] * r_cache.values[i] *
                         std::pow(1.0 + r_cache.nodes[i], exponent);
            }
            c_lag = left + right;
        } else {
            double both = 0.0;
            for (std::size_t i = 0; i < r_cache.nodes.size(); ++i) {
                const double v = r_cache.nodes[i];
                both += r_cache.weights[i] * r_cache.values[i] *
                        (std::pow(lag + v, exponent) + std::pow(lag - v, exponent));
            }
            c_lag = both;
        }
        total += 2.0 * (1.0 - static_cast<double>(lag) / n) * c_lag;
    }
    return variance_convention_factor(hurst) * total;
}

double fourier_variance_closed_form(int n_freq, double hurst) {
    check_hurst_inference(hurst);
    if (n_freq == 0) {
        throw std::invalid_argument("frequency index must be nonzero");
    }
    const double H = hurst;
    const double a = kTwoPi * std::abs(n_freq);
    const double pi = 3.14159265358979323846;
    return pi / std::tgamma(2.0 - 2.0 * H) * std::pow(a, 1.0 - 2.0 * H) /
           std::sin(pi * (3.0 - 2.0 * H) / 2.0);
}

double fourier_kernel_integral(int n, int m, double u) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("frequency indices must be nonzero");
    }
    if (!(u > 0.0)) {
        throw std::domain_error("kernel argument u must be > 0");
    }
    if (n != m) {
        return 0.0;
    }
    const double a = kTwoPi * std::abs(n);
    return 2.0 * std::expm1(u) * u / (a * a + u * u);
}

double ZeroIntegralVariance::max_rel_dev() const {
    const double rs = resolved_series();
    const double ri = resolved_integral();
    const double ro = by_oracle;
    const double scale =
        std::max({std::abs(rs), std::abs(ri), std::abs(ro), 1e-300});
    const double spread =
        std::max({std::abs(rs - ri), std::abs(rs - ro), std::abs(ri - ro)});
    return spread / scale;
}

ZeroIntegralVariance zero_integral_variance(const PeriodicBasis& basis, int k,
                                            double hurst, int l_max, int oracle_n) {
    ZeroIntegralVariance out;
    out.convention_factor = variance_convention_factor(hurst);
    out.by_series = zero_integral_variance_series(basis, k, hurst, l_max,
                                                  &out.series_tail_bound);
    out.by_integral =
        zero_integral_variance_integral(basis, k, hurst, &out.integral_tail_bound);
    out.by_oracle = scaled_integral_variance_oracle(basis, k, hurst, oracle_n);
    return out;
}

}  // namespace fou
