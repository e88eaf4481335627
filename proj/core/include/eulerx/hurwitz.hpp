#pragma once

#include <complex>

namespace eulerx {

/// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s} for a in (0, 1],
/// continued by Euler-Maclaurin.  Throws on the pole s = 1.
/// Absolute error <= 1e-10 for sigma >= -1, |t| <= 100.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

/// Digamma psi(x) for x > 0 (shift + asymptotic series).
double digamma(double x);

/// Number of Bernoulli correction terms in the Euler-Maclaurin tail,
/// process-wide.  Valid range [5, 15]; defaults to 15 (the full table).
void set_euler_maclaurin_terms(int terms);
int euler_maclaurin_terms();

}  // namespace eulerx
