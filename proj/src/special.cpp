#include "fou/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fou {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double polevl(double x, const double* c, int n) {
    double r = c[n];
    for (int i = n - 1; i >= 0; --i) r = r * x + c[i];
    return r;
}

}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("inverse_normal_cdf: p must lie strictly inside (0,1)");
    }
    static const double a[8] = {
        3.3871328727963666080e0,  1.3314166789178437745e2, 1.9715909503065514427e3,
        1.3731693765509461125e4,  4.5921953931549871457e4, 6.7265770927008700853e4,
        3.3430575583588128105e4,  2.5090809287301226727e3};
    static const double b[8] = {
        1.0,                      4.2313330701600911252e1, 6.8718700749205790830e2,
        5.3941960214247511077e3,  2.1213794301586595867e4, 3.9307895800092710610e4,
        2.8729085735721942674e4,  5.2264952788528545610e3};
    static const double c[8] = {
        1.42343711074968357734,    4.63033784615654529590,   5.76949722146069140550,
        3.64784832476320460504,    1.27045825245236838258,   2.41780725177450611770e-1,
        2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static const double d[8] = {
        1.0,                       2.05319162663775882187,   1.67638483018380384940,
        6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
        5.47593808499534494600e-4, 1.05075007164441684324e-9};
    static const double e[8] = {
        6.65790464350110377720,    5.46378491116411436990,   1.78482653991729133580,
        2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
        2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static const double f[8] = {
        1.0,                       5.99832206555887937690e-1, 1.36929880922735805310e-1,
        1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
        1.42151175831644588870e-7, 2.04426310338993978564e-15};

    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * polevl(r, a, 7) / polevl(r, b, 7);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = polevl(r, c, 7) / polevl(r, d, 7);
    } else {
        r -= 5.0;
        value = polevl(r, e, 7) / polevl(r, f, 7);
    }
    return q < 0.0 ? -value : value;
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) {
        throw std::domain_error("riemann_zeta: requires s > 1");
    }
    // Euler-Maclaurin with N = 20 terms and Bernoulli corrections B_2..B_14.
    static const double bernoulli[7] = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
    const double n = 20.0;
    double sum = 0.0;
    for (int k = 1; k < 20; ++k) sum += std::pow(static_cast<double>(k), -s);
    sum += 0.5 * std::pow(n, -s);
    sum += std::pow(n, 1.0 - s) / (s - 1.0);
    double rising = s;           // s (s+1) ... (s+2j-2)
    double factorial = 2.0;      // (2j)!
    double npow = std::pow(n, -s - 1.0);
    for (int j = 1; j <= 7; ++j) {
        sum += bernoulli[j - 1] / factorial * rising * npow;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        npow /= n * n;
    }
    return sum;
}

double general_binomial(double a, unsigned k) {
    if (k == 0) return 1.0;
    double log_abs = 0.0;
    double sign = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        const double factor = a - static_cast<double>(j);
        if (factor == 0.0) return 0.0;
        if (factor < 0.0) sign = -sign;
        log_abs += std::log(std::abs(factor)) - std::log(static_cast<double>(j + 1));
    }
    return sign * std::exp(log_abs);
}

double kolmogorov_sf(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;  // series is numerically useless here
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 20; ++j) {
        sum += sign * std::exp(-2.0 * j * j * lambda * lambda);
        sign = -sign;
    }
    const double p = 2.0 * sum;
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

}  // namespace fou
