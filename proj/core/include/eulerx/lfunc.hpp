#pragma once

#include <complex>
#include <vector>

#include "eulerx/characters.hpp"
#include "eulerx/grid.hpp"

namespace eulerx {

/// L(s, chi) by analytic continuation: N^{-s} sum_a chi(a) zeta(s, a/N).
/// Throws at s = 1 for the trivial character.
std::complex<double> l_value(std::complex<double> s, const DirichletCharacter& chi);

/// Completed-function phase: Im log Gamma((1/2 + a + it)/2) -
/// (t/2) log(pi/N) for a primitive character of parity a, with a
/// branch-continuous log Gamma.  For N = 1, a = 0 this is the
/// Riemann-Siegel theta function.
double theta_chi(double t, const DirichletCharacter& chi);

struct ZeroList {
  std::vector<double> zeros;  // ascending ordinates t_j > 0
  double tolerance = 1e-8;
  /// Candidate intervals where |L| dipped but no zero could be
  /// confirmed; reported instead of silently dropped.
  std::vector<std::pair<double, double>> unresolved;
};

/// All zeros of L(1/2 + it, chi) with 0 < t <= t_max.  Real characters
/// use sign-change bracketing of the rotated real signal; complex
/// characters additionally confirm by argument winding.  tolerance is
/// the |L| acceptance threshold at a candidate, in (0, 1e-2].
ZeroList find_zeros(const DirichletCharacter& chi, double t_max,
                    double tolerance = 1e-8);

/// Im log L(1/2 + it, chi), branch fixed by continuous vertical
/// tracking from sigma = 2 where the termwise Euler-factor logs
/// converge absolutely.  Throws if tracking cannot resolve the branch
/// (grid point too close to a zero).
double im_log_l_tracked(double t, const DirichletCharacter& chi);

/// im_log_l_tracked over a grid (the x = infinity argument curve).
GridSeries arg_l_continuous(const std::vector<double>& t_grid,
                            const DirichletCharacter& chi);

}  // namespace eulerx
