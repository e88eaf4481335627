#pragma once

#include <vector>

#include "eulerx/characters.hpp"
#include "eulerx/grid.hpp"

namespace eulerx {

/// rho_x(t) = (1/pi) Im d/dt log L_x(1/2+it, chi), via the closed-form
/// derivative of the per-factor log sum.
GridSeries rho_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
                 double x);
double rho_x_at(double t, const DirichletCharacter& chi, double x);

/// R_x(t) = (1/pi) Im log L_x(1/2+it, chi) with principal branch per
/// Euler factor; smooth in t.
GridSeries r_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
               double x);
double r_x_at(double t, const DirichletCharacter& chi, double x);

/// Additive calibration c_chi making the x = infinity counting curve
/// vanish as t -> 0+.
double counting_calibration(const DirichletCharacter& chi);

/// N_x(t) = R_x(t) + theta_chi(t)/pi + c_chi.  Pass x = infinity for the
/// reference curve (branch-tracked Im log L).
GridSeries n_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
               double x, double c_chi);
double n_x_at(double t, const DirichletCharacter& chi, double x, double c_chi);
double n_inf_at(double t, const DirichletCharacter& chi, double c_chi);

struct CollapseResult {
  double lambda = 0.0;  // scaling exponent
  double t1 = 0.0;      // smallest zero ordinate
  double spread = 0.0;  // amplitude-normalized summed pairwise RMS at lambda
  double c_chi = 0.0;
  bool hit_search_boundary = false;
  std::vector<double> z_grid;
  std::vector<GridSeries> curves;  // scaled N curves, one per cutoff
};

struct CollapseOptions {
  std::vector<double> cutoffs;    // defaults to {p_10, p_50, p_100, p_500, p_1000}
  double z_half_width = 0.5;
  std::size_t z_points = 401;
  double lambda_min = 0.01;
  double lambda_max = 1.0;
  /// Base of the x^lambda scaling factor: the prime cutoff itself, or
  /// its index n (x = p_n).
  bool scale_by_prime_index = false;
  /// |L| threshold for locating t_1; forwarded to find_zeros.
  double zero_tolerance = 1e-8;
};

double collapse_spread(const DirichletCharacter& chi, double t1, double c_chi,
                       double lambda, const CollapseOptions& opt);

/// Fit the scaling exponent lambda by minimizing the inter-curve spread
/// of N_x(t_1 (1 + z x^{-lambda})) on a common z-grid (coarse scan +
/// golden section).
CollapseResult collapse(const DirichletCharacter& chi, CollapseOptions opt = {});

}  // namespace eulerx
