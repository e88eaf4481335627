#include <doctest.h>

#include <cmath>
#include <complex>

#include "eulerx/characters.hpp"
#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"
#include "eulerx/products.hpp"

using namespace eulerx;
using cd = std::complex<double>;

TEST_CASE("euler product matches the analytic value at sigma = 2") {
  // truncation error ~ sum_{p>x} p^{-2} ~ 1/(x log x) < 1e-8 at x = 1e7
  for (auto chi : {chi_3(), chi_7a()}) {
    for (double t : {0.0, 4.0}) {
      const cd s(2.0, t);
      CHECK(std::abs(partial_product(s, chi, 1e7) - l_value(s, chi)) < 1e-8);
    }
  }
}

TEST_CASE("empty product below the first prime") {
  CHECK(partial_product(cd(0.5, 1.0), chi_3(), 1.5) == cd(1.0));
}

TEST_CASE("log form is consistent with the product") {
  for (double x : {10.0, 541.0, 7919.0}) {
    const cd s(0.5, 2.2);
    const cd a = partial_product(s, chi_7a(), x);
    const cd b = std::exp(log_partial_product(s, chi_7a(), x));
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
  }
}

TEST_CASE("series evaluation equals pointwise products") {
  std::vector<double> cuts = {10, 100, 1000, 10000};
  auto ser = partial_product_series(cd(0.5, 1.0), chi_7b(), cuts);
  REQUIRE(ser.values.size() == cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i)
    CHECK(std::abs(ser.values[i] - partial_product(cd(0.5, 1.0), chi_7b(), cuts[i])) < 1e-12);
}

TEST_CASE("drh target takes the sqrt2 branch only for quadratic chi at 1/2") {
  const double sq2 = std::sqrt(2.0);
  auto q = chi_3();
  CHECK(std::abs(drh_target(cd(0.5, 0.0), q) - sq2 * l_value(cd(0.5, 0.0), q)) < 1e-14);
  CHECK(std::abs(drh_target(cd(0.75, 0.0), q) - l_value(cd(0.75, 0.0), q)) < 1e-14);
  auto a = chi_7a();
  CHECK(std::abs(drh_target(cd(0.5, 0.0), a) - l_value(cd(0.5, 0.0), a)) < 1e-14);
}

TEST_CASE("psi matches a direct prime-power loop") {
  auto chi = chi_7a();
  const double x = 10000.0;
  auto table = primes_up_to(std::uint64_t(x));
  cd oracle = 0.0;
  for (std::uint32_t p : table->primes) {
    const double logp = std::log(double(p));
    for (double pm = p; pm <= x; pm *= p) oracle += chi(p) * logp;
  }
  CHECK(std::abs(psi(x, chi) - oracle) < 1e-9);
}

TEST_CASE("fit_alpha preconditions") {
  CHECK_THROWS(fit_alpha(cd(1.0, 0.0), chi_7a(), {10, 20, 30}));
  CHECK_THROWS(fit_alpha(cd(1.0, 0.0), chi_7a(), {10, 11, 12, 13, 14, 15, 16, 17}));
}

TEST_CASE("convergence speeds up with sigma on the real axis") {
  auto cuts = default_alpha_cutoffs();
  for (auto chi : {chi_7a(), chi_7b()}) {
    const double a_half = fit_alpha(cd(0.5, 0.0), chi, cuts).exponent;
    const double a_one = fit_alpha(cd(1.0, 0.0), chi, cuts).exponent;
    CHECK(a_one > a_half);
  }
}

TEST_CASE("convergence_grid shapes and reference") {
  auto grid = uniform_grid(0.0, 1.0, 0.5);
  auto out = convergence_grid(0.75, chi_3(), grid, {29.0, 541.0});
  REQUIRE(out.size() == 3);
  CHECK(out[0].cutoff_label == "29");
  CHECK(out[1].cutoff_label == "541");
  CHECK(out[2].cutoff_label == "inf");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(out[2].values[i] - l_value(cd(0.75, grid[i]), chi_3())) < 1e-10);
    CHECK(std::abs(out[0].values[i] - partial_product(cd(0.75, grid[i]), chi_3(), 29.0)) < 1e-12);
  }
}
