// Acceptance gate: one printed pass/fail line per criterion, nonzero
// exit if anything fails.  Tolerances are fixed here, not configurable.
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "eulerx/characters.hpp"
#include "eulerx/curves.hpp"
#include "eulerx/ffield.hpp"
#include "eulerx/hurwitz.hpp"
#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"
#include "eulerx/products.hpp"
#include "eulerx/scaling.hpp"

using namespace eulerx;
using cd = std::complex<double>;

namespace {

int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// published reference table: d, sqrt(2) L(1/2, (d/.)), E at x = 1e7, ratio
struct QuadRow {
  long long d;
  double sqrt2l, e, ratio;
};
const QuadRow kQuadTable[] = {
    {-3, 0.680049, 0.688002, 0.988440},  {-4, 0.944258, 0.945909, 0.998254},
    {5, 0.327745, 0.320619, 1.022223},   {-7, 1.621517, 1.640320, 0.988536},
    {8, 0.528479, 0.539992, 0.978680},   {-8, 1.556230, 1.521663, 1.022716},
    {-11, 1.402301, 1.342967, 1.044181}, {12, 0.705066, 0.729170, 0.966942},
    {13, 0.621678, 0.618558, 1.005044},  {-15, 2.612093, 2.791265, 0.935809},
    {17, 1.020601, 1.066235, 0.957201},  {-19, 1.137621, 1.173052, 0.969795},
    {-20, 2.375413, 2.356696, 1.007942}, {21, 0.703235, 0.724051, 0.971250},
    {-23, 3.472406, 3.320551, 1.045732}, {24, 1.003325, 1.057376, 0.948881},
    {-24, 2.223023, 2.130498, 1.043428}, {28, 1.162994, 1.199957, 0.969196},
    {29, 0.658655, 0.683281, 0.963958},
};

void criterion_quadratic_table() {
  const double s2 = std::sqrt(2.0);
  double worst_l = 0, worst_e = 0, worst_r = 0;
  for (const QuadRow& row : kQuadTable) {
    auto chi = kronecker_character(row.d);
    const double l = (s2 * l_value(cd(0.5, 0.0), chi)).real();
    const double e = partial_product(cd(0.5, 0.0), chi, 1e7).real();
    worst_l = std::max(worst_l, std::abs(l - row.sqrt2l));
    worst_e = std::max(worst_e, std::abs(e - row.e));
    worst_r = std::max(worst_r, std::abs(l / e - row.ratio));
  }
  // printed values are rounded to 6 decimals, so allow a half-ulp
  report(1, "19 quadratic-character products at x = 1e7",
         worst_l <= 5e-6 && worst_e <= 5e-6 && worst_r <= 1e-4,
         "max |dL| = " + fmt(worst_l) + ", max |dE| = " + fmt(worst_e) +
             ", max |dratio| = " + fmt(worst_r));
}

void criterion_closed_forms() {
  const double err1 = std::abs(l_value(cd(1, 0), kronecker_character(-4)).real() - M_PI / 4.0);
  const double err2 =
      std::abs(l_value(cd(1, 0), chi_3()).real() - M_PI / (3.0 * std::sqrt(3.0)));
  report(2, "L(1) closed forms pi/4 and pi/(3 sqrt 3)", err1 < 1e-10 && err2 < 1e-10,
         "errors " + fmt(err1) + ", " + fmt(err2));
}

void criterion_zero_ordinates(const std::vector<double>& t1s) {
  const double printed[] = {8.0397, 5.1981, 4.4757};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    ok = ok && std::abs(t1s[i] - printed[i]) <= 1e-3;
    detail += (i ? ", " : "") + fmt(t1s[i]);
  }
  report(3, "smallest zero ordinates 8.0397 / 5.1981 / 4.4757", ok, detail);
}

void criterion_error_exponents() {
  const double targets_7a[] = {0.1167, 0.3814, 0.6389};
  const double targets_7b[] = {0.1978, 0.3106, 0.6302};
  const double sigmas[] = {0.5, 0.75, 1.0};
  auto cuts = default_alpha_cutoffs();
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const double a = fit_alpha(cd(sigmas[i], 0.0), chi_7a(), cuts).exponent;
    const double b = fit_alpha(cd(sigmas[i], 0.0), chi_7b(), cuts).exponent;
    ok = ok && std::abs(a - targets_7a[i]) <= 0.05 && std::abs(b - targets_7b[i]) <= 0.05;
    detail += (i ? " " : "") + fmt(a) + "/" + fmt(b);
  }
  report(4, "six delta_L exponents within 0.05", ok, detail);
}

void criterion_scaling_exponents() {
  const double printed[] = {0.217, 0.193, 0.151};
  DirichletCharacter chis[] = {chi_3(), chi_7a(), chi_7b()};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    CollapseOptions opt;
    for (std::uint64_t n : {10, 50, 100, 500, 1000})
      opt.cutoffs.push_back(double(nth_prime(n)));
    auto res = collapse(chis[i], opt);
    const bool in_tol = std::abs(res.lambda - printed[i]) <= 0.05;
    const double up = collapse_spread(chis[i], res.t1, res.c_chi, res.lambda + 0.05, opt);
    const double dn = collapse_spread(chis[i], res.t1, res.c_chi, res.lambda - 0.05, opt);
    ok = ok && in_tol && res.spread < up && res.spread < dn && !res.hit_search_boundary;
    detail += (i ? ", " : "") + fmt(res.lambda);
  }
  report(5, "scaling exponents within 0.05 and locally optimal", ok, detail);
}

void criterion_counting_steps(double t1_chi3) {
  auto chi = chi_3();
  const double c = counting_calibration(chi);
  const double jump = n_inf_at(t1_chi3 + 0.1, chi, c) - n_inf_at(t1_chi3 - 0.1, chi, c);
  auto zl = find_zeros(chi, 15.0);
  std::size_t zero_count = zl.zeros.size();
  const double n15 = n_inf_at(15.0, chi, c);
  report(6, "counting function: unit step at t1, N(15) = zero count",
         std::abs(jump - 1.0) <= 1e-2 && std::abs(n15 - double(zero_count)) <= 0.1,
         "jump = " + fmt(jump) + ", N(15) = " + fmt(n15) + ", zeros = " +
             fmt(double(zero_count)));
}

void criterion_ff_boundary() {
  const PolyFq f = fq_parse("5:2,0,1");  // T^2 + 2, irreducible over F_5
  const PolyFq g = ff_max_order_element(f).first;
  auto quad = ff_character(f, {{g, 1}}, 2);
  auto ord4 = ff_character(f, {{g, 1}}, 4);
  auto rq = verify_ff_drh(quad, 0.0, 12);
  auto r4 = verify_ff_drh(ord4, 0.0, 12);
  const bool ok = rq.sqrt2_branch && !r4.sqrt2_branch &&
                  rq.deviations[11] < rq.deviations[5] && rq.deviations[11] < 0.1 &&
                  r4.deviations[11] < r4.deviations[5] && r4.deviations[11] < 0.1;
  report(7, "function-field boundary products (deg f = 2 over F_5)", ok,
         "quadratic dev(6,12) = " + fmt(rq.deviations[5]) + "," + fmt(rq.deviations[11]) +
             "; quartic dev(6,12) = " + fmt(r4.deviations[5]) + "," + fmt(r4.deviations[11]));
}

void criterion_half_line_product() {
  auto p1 = projective_line(2, 40);
  const double limit = theorem2_limit(p1);
  const double dev40 = std::abs(theorem2_partial(p1, 40) / limit - 1.0);
  // the signed error crosses zero near n = 18, which makes dev(20)
  // accidentally tiny; n = 10 is the honest earlier reference point
  const double dev10 = std::abs(theorem2_partial(p1, 10) / limit - 1.0);
  bool jackson_ok = true;
  for (int q : {2, 3, 5}) {
    for (int n : {10, 30}) {
      auto j = jackson_q_integral(q, n);
      jackson_ok = jackson_ok && std::abs(j.lhs - j.rhs) <= 1e-12 * std::abs(j.lhs);
    }
  }
  report(8, "compensated product for P1/F_2 and q-integral identity",
         std::abs(limit - 2.0 * (std::sqrt(2.0) + 1.0)) < 1e-9 && dev40 < 0.05 &&
             dev40 < dev10 && jackson_ok,
         "dev(10) = " + fmt(dev10) + ", dev(40) = " + fmt(dev40));
}

void criterion_log_power_product() {
  auto p1 = projective_line(2, 40);
  const double r40 = theorem3_partial(p1, 40);
  const double r20 = theorem3_partial(p1, 20);
  report(9, "residue-normalized full product for P1/F_2",
         std::abs(r40 - 1.0) < 0.05 && std::abs(r40 - 1.0) < std::abs(r20 - 1.0),
         "ratio(20) = " + fmt(r20) + ", ratio(40) = " + fmt(r40));
}

void criterion_property_suite() {
  bool ok = true;
  std::string what;
  auto fail = [&](const char* name) {
    ok = false;
    what += std::string(what.empty() ? "" : ", ") + name;
  };

  // orthogonality + multiplicativity
  for (std::uint32_t N : {7u, 12u}) {
    for (const auto& chi : character_group(N)) {
      cd sum = 0.0;
      for (std::uint64_t n = 1; n <= N; ++n) sum += chi(n);
      if (!chi.trivial() && std::abs(sum) > 1e-9) fail("orthogonality");
      for (std::uint64_t a = 1; a <= N; ++a)
        for (std::uint64_t b = 1; b <= N; ++b)
          if (std::abs(chi(a * b) - chi(a) * chi(b)) > 1e-12) fail("multiplicativity");
    }
  }

  // Hurwitz multiplication identity (recurrence across a-values)
  for (cd s : {cd(0.5, 3.0), cd(2.0, 0.0)}) {
    cd lhs = 0.0;
    for (int k = 0; k < 3; ++k) lhs += hurwitz_zeta(s, double(k + 1) / 3.0);
    const cd rhs = std::exp(s * std::log(3.0)) * hurwitz_zeta(s, 1.0);
    if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(rhs))) fail("hurwitz");
  }

  // Euler product vs analytic value at sigma = 2
  if (std::abs(partial_product(cd(2, 0), chi_3(), 1e7) - l_value(cd(2, 0), chi_3())) > 1e-8)
    fail("euler-product");

  // rho_x = d/dt R_x
  {
    const double h = 1e-5, t = 3.3, x = 541.0;
    const double fd =
        (r_x_at(t + h, chi_3(), x) - r_x_at(t - h, chi_3(), x)) / (2.0 * h);
    if (std::abs(rho_x_at(t, chi_3(), x) - fd) > 1e-5) fail("density-derivative");
  }

  // prime polynomial theorem l <= 20
  for (int q : {2, 3}) {
    for (int l = 1; l <= 20; ++l) {
      unsigned long long lhs = 0, qp = 1;
      for (int d = 1; d <= l; ++d)
        if (l % d == 0) lhs += (unsigned long long)d * irreducible_count(q, d);
      for (int i = 0; i < l; ++i) qp *= (unsigned long long)q;
      if (lhs != qp) fail("prime-polynomial");
    }
  }

  // coefficient identity and root magnitudes over F_5
  {
    const PolyFq f = fq_parse("5:2,0,1");
    auto chi = ff_character(f, {{ff_max_order_element(f).first, 1}}, 4);
    auto L = ff_l_polynomial(chi);
    for (const cd& lam : L.roots) {
      const double a = std::abs(lam);
      if (std::abs(a - 1.0) > 1e-8 && std::abs(a - std::sqrt(5.0)) > 1e-8)
        fail("root-magnitude");
    }
    for (int k = 1; k <= 4; ++k) {
      cd lhs = 0.0;
      for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        for (const PolyFq& h : irreducibles_of_degree(5, d))
          lhs += double(d) * std::pow(chi(h), k / d);
      }
      cd rhs = 0.0;
      for (const cd& lam : L.roots) rhs -= std::pow(lam, k);
      if (std::abs(lhs - rhs) > 1e-6) fail("coefficient-identity");
    }
  }

  // curve numerator roots
  {
    auto data = count_hyperelliptic(fq_parse("5:1,1,0,1"), 1);
    data.genus = 1;
    auto zeta = zeta_from_counts(data);
    for (const cd& a : zeta.alphas)
      if (std::abs(std::abs(a) - std::sqrt(5.0)) > 1e-8) fail("weil-bound");
  }

  // unique-factorization power series: prod (1-u^d)^{-N_d} = 1/(1-qu)
  for (int q : {2, 3}) {
    const int n = 10;
    std::vector<long long> series(n + 1, 0);
    series[0] = 1;
    for (int d = 1; d <= n; ++d) {
      const long long nd = (long long)irreducible_count(q, d);
      std::vector<long long> next(n + 1, 0);
      for (int k = 0; k <= n; ++k) {
        if (!series[k]) continue;
        long long binom = 1;
        for (int j = 0; k + d * j <= n; ++j) {
          next[k + d * j] += series[k] * binom;
          binom = binom * (nd + j) / (j + 1);
        }
      }
      series = next;
    }
    long long qp = 1;
    for (int k = 0; k <= n; ++k) {
      if (series[k] != qp) fail("power-series");
      qp *= q;
    }
  }

  report(10, "property suite", ok, ok ? "" : what);
}

}  // namespace

int main() {
  criterion_quadratic_table();
  criterion_closed_forms();

  std::vector<double> t1s;
  for (auto chi : {chi_3(), chi_7a(), chi_7b()})
    t1s.push_back(find_zeros(chi, 12.0).zeros.front());
  criterion_zero_ordinates(t1s);

  criterion_error_exponents();
  criterion_scaling_exponents();
  criterion_counting_steps(t1s[0]);
  criterion_ff_boundary();
  criterion_half_line_product();
  criterion_log_power_product();
  criterion_property_suite();

  if (g_failures) std::printf("%d criteria FAILED\n", g_failures);
  else std::printf("all criteria passed\n");
  return g_failures ? 1 : 0;
}
