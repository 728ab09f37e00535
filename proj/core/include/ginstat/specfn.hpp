#pragma once

#include <cstdint>

namespace ginstat::specfn {

// Regularized upper incomplete gamma ratio Q(n,a) = Gamma(n,a)/Gamma(n)
// for integer order n >= 1 and cutoff a >= 0. Equals
// exp(-a) * sum_{m=0}^{n-1} a^m/m!, evaluated without overflow for n and a
// at least up to 1e4. Monotone non-increasing in a, with Q(n,0) = 1.
double regularized_gamma_upper(std::int64_t n, double a);

// Regularized lower incomplete gamma ratio P(n,a) = 1 - Q(n,a), computed
// directly in the regime where 1 - Q would cancel.
double regularized_gamma_lower(std::int64_t n, double a);

// ln Q(n,a); full relative accuracy even where Q underflows a double.
double log_regularized_gamma_upper(std::int64_t n, double a);

// ln P(n,a).
double log_regularized_gamma_lower(std::int64_t n, double a);

// ln Gamma(n) = ln (n-1)! for integer n >= 1. Exact-factorial based for
// n <= 21, Stirling series beyond (<= 1e-12 relative).
double log_gamma(std::int64_t n);

// Scaled complementary error function erfcx(s) = exp(s^2) erfc(s), s >= 0.
// Stable replacement for the product exp(s^2)*erfc(s) which over/underflows
// pairwise already around s ~ 20.
double erfcx(double s);

}  // namespace ginstat::specfn
