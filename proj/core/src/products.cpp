#include "eulerx/products.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"

namespace eulerx {
namespace {

using cd = std::complex<double>;

std::string format_x_label(double x) {
  char buf[32];
  if (x == std::floor(x))
    std::snprintf(buf, sizeof buf, "%.0f", x);
  else
    std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

cd euler_factor_log(cd s, const DirichletCharacter& chi, std::uint64_t p) {
  const cd v = chi(p);
  if (v == cd(0.0)) return 0.0;
  const cd w = v * std::exp(-s * std::log(double(p)));
  const cd one_minus = 1.0 - w;
  if (std::abs(one_minus) < 1e-14)
    throw std::domain_error("singular Euler factor at p = " + std::to_string(p));
  return -std::log(one_minus);
}

}  // namespace

std::complex<double> partial_product(std::complex<double> s,
                                     const DirichletCharacter& chi, double x) {
  if (x < 0) throw std::invalid_argument("partial_product: x must be >= 0");
  if (x < 2) return 1.0;
  auto table = primes_up_to(std::uint64_t(x));
  cd prod = 1.0;
  for (std::uint32_t p : table->primes) {
    const cd v = chi(p);
    if (v == cd(0.0)) continue;
    const cd one_minus = 1.0 - v * std::exp(-s * std::log(double(p)));
    if (std::abs(one_minus) < 1e-14)
      throw std::domain_error("singular Euler factor at p = " + std::to_string(p));
    prod /= one_minus;
  }
  return prod;
}

std::complex<double> log_partial_product(std::complex<double> s,
                                         const DirichletCharacter& chi, double x) {
  if (x < 2) return 0.0;
  auto table = primes_up_to(std::uint64_t(x));
  cd sum = 0.0;
  for (std::uint32_t p : table->primes) sum += euler_factor_log(s, chi, p);
  return sum;
}

PartialProductSeries partial_product_series(std::complex<double> s,
                                            const DirichletCharacter& chi,
                                            const std::vector<double>& cutoffs) {
  PartialProductSeries out;
  out.s = s;
  out.cutoffs = cutoffs;
  out.values.reserve(cutoffs.size());
  if (cutoffs.empty()) return out;
  for (std::size_t i = 1; i < cutoffs.size(); ++i)
    if (cutoffs[i] < cutoffs[i - 1])
      throw std::invalid_argument("partial_product_series: cutoffs must ascend");

  auto table = primes_up_to(std::uint64_t(std::max(cutoffs.back(), 0.0)));
  cd prod = 1.0;
  std::size_t pi = 0;
  for (double x : cutoffs) {
    while (pi < table->primes.size() && table->primes[pi] <= x) {
      const std::uint64_t p = table->primes[pi++];
      const cd v = chi(p);
      if (v != cd(0.0)) {
        const cd one_minus = 1.0 - v * std::exp(-s * std::log(double(p)));
        if (std::abs(one_minus) < 1e-14)
          throw std::domain_error("singular Euler factor at p = " + std::to_string(p));
        prod /= one_minus;
      }
    }
    out.values.push_back(prod);
  }
  return out;
}

std::complex<double> drh_target(std::complex<double> s, const DirichletCharacter& chi) {
  const cd L = l_value(s, chi);
  if (std::abs(L) < 1e-12)
    throw std::domain_error("drh_target: L vanishes at the requested point");
  const bool sqrt2_branch = (s == cd(0.5, 0.0)) && is_quadratic(chi);
  return sqrt2_branch ? std::sqrt(2.0) * L : L;
}

double delta_l(std::complex<double> s, const DirichletCharacter& chi, double x) {
  const cd target = drh_target(s, chi);
  return std::abs(partial_product(s, chi, x) - target) / std::abs(target);
}

FitResult fit_alpha(std::complex<double> s, const DirichletCharacter& chi,
                    const std::vector<double>& cutoffs) {
  if (cutoffs.size() < 8)
    throw std::invalid_argument("fit_alpha: need at least 8 cutoffs");
  if (cutoffs.back() < 100.0 * cutoffs.front())
    throw std::invalid_argument("fit_alpha: cutoffs must span at least 2 decades");

  const cd target = drh_target(s, chi);
  auto series = partial_product_series(s, chi, cutoffs);

  // delta_L oscillates strongly around its power-law envelope, so a raw
  // point fit is dominated by sampling noise.  Average log delta_L in
  // log-spaced bins and fit the bin means.
  const std::size_t K = std::min<std::size_t>(25, cutoffs.size());
  const double l_lo = std::log(cutoffs.front()), l_hi = std::log(cutoffs.back());
  std::vector<double> bx(K, 0.0), by(K, 0.0);
  std::vector<std::size_t> bn(K, 0);
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    const double d = std::abs(series.values[i] - target) / std::abs(target);
    if (d <= 0.0) continue;
    const double lxi = std::log(cutoffs[i]);
    const std::size_t b =
        std::min(K - 1, std::size_t(double(K) * (lxi - l_lo) / (l_hi - l_lo)));
    bx[b] += lxi;
    by[b] += std::log(d);
    bn[b] += 1;
  }
  std::vector<double> lx, ld;
  for (std::size_t b = 0; b < K; ++b) {
    if (!bn[b]) continue;
    lx.push_back(bx[b] / double(bn[b]));
    ld.push_back(by[b] / double(bn[b]));
  }
  if (lx.size() < 2) throw std::domain_error("fit_alpha: degenerate grid, all deltas zero");

  const double n = double(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ld[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ld[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;

  FitResult fit;
  fit.exponent = -slope;
  fit.intercept = intercept;
  fit.sample_points = lx.size();
  double ss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ld[i] - (slope * lx[i] + intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

std::vector<double> default_alpha_cutoffs() {
  std::vector<double> xs;
  auto table = primes_up_to(300000);
  for (std::uint32_t p : table->primes)
    if (p >= 100) xs.push_back(double(p));
  return xs;
}

std::complex<double> psi(double x, const DirichletCharacter& chi) {
  if (x < 2) return 0.0;
  auto table = primes_up_to(std::uint64_t(x));
  cd sum = 0.0;
  for (std::uint32_t p : table->primes) {
    const double logp = std::log(double(p));
    // number of m with p^m <= x
    const int m_max = int(std::floor(std::log(x) / logp + 1e-12));
    if (m_max >= 1) sum += double(m_max) * chi(p) * logp;
  }
  return sum;
}

std::vector<ComplexGrid> convergence_grid(double sigma, const DirichletCharacter& chi,
                                          const std::vector<double>& t_grid,
                                          const std::vector<double>& cutoffs) {
  std::vector<ComplexGrid> out;
  const double t0 = t_grid.empty() ? 0.0 : t_grid.front();
  const double dt = t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0;
  for (double x : cutoffs) {
    ComplexGrid g;
    g.t0 = t0;
    g.dt = dt;
    g.cutoff_label = format_x_label(x);
    g.values.reserve(t_grid.size());
    for (double t : t_grid) g.values.push_back(partial_product(cd(sigma, t), chi, x));
    out.push_back(std::move(g));
  }
  ComplexGrid ref;
  ref.t0 = t0;
  ref.dt = dt;
  ref.cutoff_label = "inf";
  ref.values.reserve(t_grid.size());
  for (double t : t_grid) ref.values.push_back(l_value(cd(sigma, t), chi));
  out.push_back(std::move(ref));
  return out;
}

}  // namespace eulerx
