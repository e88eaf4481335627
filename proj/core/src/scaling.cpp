#include "eulerx/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"

namespace eulerx {
namespace {

constexpr double kPi = 3.14159265358979323846264338328;
using cd = std::complex<double>;

GridSeries make_grid(const std::vector<double>& t_grid, std::string label) {
  GridSeries g;
  if (!t_grid.empty()) {
    g.t0 = t_grid.front();
    g.dt = t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0;
  }
  g.cutoff_label = std::move(label);
  g.values.reserve(t_grid.size());
  return g;
}

}  // namespace

double rho_x_at(double t, const DirichletCharacter& chi, double x) {
  if (x < 2) return 0.0;
  auto table = primes_up_to(std::uint64_t(x));
  cd sum = 0.0;
  const cd s(0.5, t);
  for (std::uint32_t p : table->primes) {
    const cd v = chi(p);
    if (v == cd(0.0)) continue;
    const double logp = std::log(double(p));
    const cd w = v * std::exp(-s * logp);
    sum += cd(0.0, -logp) * w / (1.0 - w);
  }
  return sum.imag() / kPi;
}

GridSeries rho_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
                 double x) {
  auto g = make_grid(t_grid, std::to_string(std::uint64_t(x)));
  for (double t : t_grid) g.values.push_back(rho_x_at(t, chi, x));
  return g;
}

double r_x_at(double t, const DirichletCharacter& chi, double x) {
  if (x < 2) return 0.0;
  auto table = primes_up_to(std::uint64_t(x));
  double sum = 0.0;
  const cd s(0.5, t);
  for (std::uint32_t p : table->primes) {
    const cd v = chi(p);
    if (v == cd(0.0)) continue;
    sum += std::arg(1.0 - v * std::exp(-s * std::log(double(p))));
  }
  return -sum / kPi;
}

GridSeries r_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
               double x) {
  auto g = make_grid(t_grid, std::to_string(std::uint64_t(x)));
  for (double t : t_grid) g.values.push_back(r_x_at(t, chi, x));
  return g;
}

double counting_calibration(const DirichletCharacter& chi) {
  // N_inf(0+) = 0.  theta_chi(0) = 0 for any parity, so only the
  // tracked argument of L at t = 0 enters.
  const double r0 = im_log_l_tracked(0.0, chi) / kPi;
  const double th0 = theta_chi(0.0, chi) / kPi;
  return -(r0 + th0);
}

double n_x_at(double t, const DirichletCharacter& chi, double x, double c_chi) {
  return r_x_at(t, chi, x) + theta_chi(t, chi) / kPi + c_chi;
}

double n_inf_at(double t, const DirichletCharacter& chi, double c_chi) {
  return im_log_l_tracked(t, chi) / kPi + theta_chi(t, chi) / kPi + c_chi;
}

GridSeries n_x(const std::vector<double>& t_grid, const DirichletCharacter& chi,
               double x, double c_chi) {
  const bool inf = std::isinf(x);
  auto g = make_grid(t_grid, inf ? "inf" : std::to_string(std::uint64_t(x)));
  for (double t : t_grid)
    g.values.push_back(inf ? n_inf_at(t, chi, c_chi) : n_x_at(t, chi, x, c_chi));
  return g;
}

namespace {

std::vector<double> default_cutoffs() {
  std::vector<double> xs;
  for (std::uint64_t n : {10, 50, 100, 500, 1000}) xs.push_back(double(nth_prime(n)));
  return xs;
}

double scale_base(double x, const CollapseOptions& opt) {
  if (!opt.scale_by_prime_index) return x;
  // recover n with x = p_n
  auto table = primes_up_to(std::uint64_t(x));
  return double(table->primes.size());
}

}  // namespace

double collapse_spread(const DirichletCharacter& chi, double t1, double c_chi,
                       double lambda, const CollapseOptions& opt) {
  const auto& xs = opt.cutoffs;
  const std::size_t nz = opt.z_points;
  std::vector<std::vector<double>> curves(xs.size(), std::vector<double>(nz));
  double mean_range = 0.0;
  for (std::size_t ci = 0; ci < xs.size(); ++ci) {
    const double base = scale_base(xs[ci], opt);
    const double scale = std::pow(base, -lambda);
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < nz; ++i) {
      const double z = -opt.z_half_width +
                       2.0 * opt.z_half_width * double(i) / double(nz - 1);
      const double v = n_x_at(t1 * (1.0 + z * scale), chi, xs[ci], c_chi);
      curves[ci][i] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    mean_range += hi - lo;
  }
  // Normalizing by the mean curve amplitude removes the degenerate
  // large-lambda minimum where every window shrinks to a point.
  mean_range /= double(xs.size());
  double total = 0.0;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      double ss = 0.0;
      for (std::size_t i = 0; i < nz; ++i) {
        const double d = curves[a][i] - curves[b][i];
        ss += d * d;
      }
      total += std::sqrt(ss / double(nz));
    }
  return total / mean_range;
}

CollapseResult collapse(const DirichletCharacter& chi, CollapseOptions opt) {
  if (opt.cutoffs.empty()) opt.cutoffs = default_cutoffs();

  CollapseResult res;
  auto zeros = find_zeros(chi, 12.0, opt.zero_tolerance);
  if (zeros.zeros.empty()) throw std::runtime_error("collapse: no zero found below t = 12");
  res.t1 = zeros.zeros.front();
  res.c_chi = counting_calibration(chi);

  auto spread_at = [&](double lam) {
    return collapse_spread(chi, res.t1, res.c_chi, lam, opt);
  };

  // Coarse scan at 0.01 resolution, then golden section in the winning
  // bracket (guards against non-unimodal spread profiles).
  double best_lam = opt.lambda_min, best_val = spread_at(opt.lambda_min);
  for (double lam = opt.lambda_min + 0.01; lam <= opt.lambda_max + 1e-12; lam += 0.01) {
    const double v = spread_at(lam);
    if (v < best_val) {
      best_val = v;
      best_lam = lam;
    }
  }
  res.hit_search_boundary = (best_lam <= opt.lambda_min + 1e-12) ||
                            (best_lam >= opt.lambda_max - 1e-2 + 1e-12);

  double lo = std::max(opt.lambda_min, best_lam - 0.01);
  double hi = std::min(opt.lambda_max, best_lam + 0.01);
  const double gr = 0.61803398874989484820;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = spread_at(x1), f2 = spread_at(x2);
  while (hi - lo > 1e-5) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = spread_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = spread_at(x2);
    }
  }
  res.lambda = 0.5 * (lo + hi);
  res.spread = spread_at(res.lambda);

  // Materialize the scaled curves at the fitted lambda.
  const std::size_t nz = opt.z_points;
  for (std::size_t i = 0; i < nz; ++i)
    res.z_grid.push_back(-opt.z_half_width +
                         2.0 * opt.z_half_width * double(i) / double(nz - 1));
  for (double x : opt.cutoffs) {
    GridSeries g;
    g.t0 = res.z_grid.front();
    g.dt = res.z_grid[1] - res.z_grid[0];
    g.cutoff_label = std::to_string(std::uint64_t(x));
    const double scale = std::pow(scale_base(x, opt), -res.lambda);
    for (double z : res.z_grid)
      g.values.push_back(n_x_at(res.t1 * (1.0 + z * scale), chi, x, res.c_chi));
    res.curves.push_back(std::move(g));
  }
  return res;
}

}  // namespace eulerx
