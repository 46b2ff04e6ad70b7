#pragma once

namespace fou {

double normal_pdf(double x);
double normal_cdf(double x);

// Wichura's AS241 rational approximation, accurate to ~1e-15.
double inverse_normal_cdf(double p);

// Riemann zeta for real s > 1, Euler-Maclaurin accelerated partial sums.
double riemann_zeta(double s);

// Generalized binomial coefficient binom(a, k) for real a, evaluated by the
// falling-factorial recurrence in log space with sign tracking.
double general_binomial(double a, unsigned k);

// Tail probability of the asymptotic Kolmogorov distribution (20 terms).
double kolmogorov_sf(double lambda);

}  // namespace fou
