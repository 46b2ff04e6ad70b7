#include "fou/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fou {

double trapezoid(std::span<const double> f, double dt) {
    if (f.size() < 2) return 0.0;
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t k = 1; k + 1 < f.size(); ++k) sum += f[k];
    return sum * dt;
}

std::vector<double> cumulative_trapezoid(std::span<const double> f, double dt) {
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t k = 1; k < f.size(); ++k) {
        out[k] = out[k - 1] + 0.5 * dt * (f[k - 1] + f[k]);
    }
    return out;
}

double simpson(std::span<const double> f, double dt) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;  // interval count
    if (m == 1) return trapezoid(f, dt);
    if (m == 3) {
        return 0.375 * dt * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
    }
    std::size_t limit = m;
    double tail = 0.0;
    if (m % 2 != 0) {
        // 3/8 panel on the last three intervals keeps fourth order
        limit = m - 3;
        tail = 0.375 * dt *
               (f[m - 3] + 3.0 * f[m - 2] + 3.0 * f[m - 1] + f[m]);
    }
    double sum = f[0] + f[limit];
    for (std::size_t k = 1; k < limit; k += 2) sum += 4.0 * f[k];
    for (std::size_t k = 2; k < limit; k += 2) sum += 2.0 * f[k];
    return sum * dt / 3.0 + tail;
}

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<double, double>> nodes(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = {-x, w};
        nodes[order - 1 - i] = {x, w};
    }
    return cache.emplace(order, std::move(nodes)).first->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int order) {
    const auto& nodes = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (const auto& [x, w] : nodes) sum += w * f(mid + halfwidth * x);
    return sum * halfwidth;
}

namespace {

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double abs_tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, abs_tol, 48);
}

}  // namespace fou
