#pragma once

#include <complex>
#include <vector>

#include "eulerx/characters.hpp"
#include "eulerx/grid.hpp"

namespace eulerx {

/// Partial Euler product L_x(s, chi) = prod_{p <= x} (1 - chi(p) p^{-s})^{-1},
/// accumulated over primes in increasing order (the product is not
/// absolutely convergent on the critical line, so the order is part of
/// the contract).  Throws on a singular Euler factor.
std::complex<double> partial_product(std::complex<double> s,
                                     const DirichletCharacter& chi, double x);

/// Sum of per-factor principal logs -Log(1 - chi(p) p^{-s}) over p <= x.
/// Each factor argument lies in (-pi/2, pi/2) for sigma >= 1/2, so the
/// result is smooth in t.
std::complex<double> log_partial_product(std::complex<double> s,
                                         const DirichletCharacter& chi, double x);

struct PartialProductSeries {
  std::complex<double> s;
  std::vector<double> cutoffs;                // ascending x
  std::vector<std::complex<double>> values;   // L_x per cutoff
};

/// L_x at each cutoff, computed incrementally over one prime pass.
PartialProductSeries partial_product_series(std::complex<double> s,
                                            const DirichletCharacter& chi,
                                            const std::vector<double>& cutoffs);

/// The DRH limit value: sqrt(2) L(1/2, chi) when s = 1/2 and chi^2 = 1,
/// L(s, chi) otherwise.  Throws when L vanishes at s.
std::complex<double> drh_target(std::complex<double> s, const DirichletCharacter& chi);

/// Relative error |L_x - target| / |target|.
double delta_l(std::complex<double> s, const DirichletCharacter& chi, double x);

struct FitResult {
  double exponent = 0.0;   // alpha (or lambda)
  double intercept = 0.0;
  double residual = 0.0;   // RMS of the least-squares fit
  std::size_t sample_points = 0;
};

/// Least-squares slope of log delta_L against log x; exponent is the
/// negated slope.  log delta_L is averaged over up to 25 log-spaced bins
/// before fitting (delta_L oscillates around its power-law envelope).
/// Needs >= 8 cutoffs spanning >= 2 decades.
FitResult fit_alpha(std::complex<double> s, const DirichletCharacter& chi,
                    const std::vector<double>& cutoffs);

/// Default cutoff grid for exponent fits: every prime in [100, 3*10^5].
std::vector<double> default_alpha_cutoffs();

/// psi(x, chi) = sum over prime powers p^m <= x of chi(p) log p.
std::complex<double> psi(double x, const DirichletCharacter& chi);

/// Re/Im series of L_x(sigma + it, chi) per cutoff plus the x = infinity
/// reference (label "inf") from the analytic continuation.
std::vector<ComplexGrid> convergence_grid(double sigma, const DirichletCharacter& chi,
                                          const std::vector<double>& t_grid,
                                          const std::vector<double>& cutoffs);

}  // namespace eulerx
