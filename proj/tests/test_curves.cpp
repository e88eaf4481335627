#include <doctest.h>

#include <cmath>
#include <sstream>

#include "eulerx/curves.hpp"

using namespace eulerx;
using cd = std::complex<double>;

TEST_CASE("closed points of the projective line") {
  for (int q : {2, 3, 5}) {
    auto p1 = projective_line(q, 10);
    CHECK(closed_point_count(p1, 1) == std::uint64_t(q) + 1);
    // degree d >= 2 closed points of P^1 = monic irreducibles of degree d
    for (int d = 2; d <= 8; ++d)
      CHECK(closed_point_count(p1, d) == irreducible_count(q, d));
  }
}

TEST_CASE("inconsistent counts are rejected") {
  CurveData bad;
  bad.q = 2;
  bad.dim = 1;
  bad.genus = 0;
  bad.counts = {3, 6};  // |X(F_4)| = 5 for P^1; 6 gives non-integer b_2
  CHECK_THROWS(closed_point_count(bad, 2));
}

TEST_CASE("hyperelliptic point counts against the Legendre-symbol oracle") {
  // y^2 = x^3 + x + 1 over F_5, genus 1
  const PolyFq f = fq_parse("5:1,1,0,1");
  auto data = count_hyperelliptic(f, 4);
  CHECK(data.genus == 1);

  // independent l = 1 oracle: Euler criterion v^{(5-1)/2} mod 5
  int count = 1;  // point at infinity (odd degree)
  for (int x = 0; x < 5; ++x) {
    const int v = (x * x * x + x + 1) % 5;
    if (v == 0)
      count += 1;
    else
      count += (v * v % 5 == 1) ? 2 : 0;
  }
  CHECK(data.counts[0] == std::uint64_t(count));

  // Hasse bound at every level
  for (int l = 1; l <= 4; ++l) {
    const double ql = std::pow(5.0, l);
    CHECK(std::abs(double(data.counts[l - 1]) - ql - 1.0) <= 2.0 * std::sqrt(ql) + 1e-9);
  }
}

TEST_CASE("zeta recovery from genus counts predicts higher counts") {
  const PolyFq f = fq_parse("5:1,1,0,1");
  auto enumerated = count_hyperelliptic(f, 4);

  CurveData seed;
  seed.q = 5;
  seed.dim = 1;
  seed.genus = 1;
  seed.counts = {enumerated.counts[0]};
  auto zeta = zeta_from_counts(seed);
  CHECK(zeta.alphas.size() == 2);
  for (const cd& a : zeta.alphas) CHECK(std::abs(a) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
  for (int l = 2; l <= 4; ++l) CHECK(extended_count(zeta, l) == enumerated.counts[l - 1]);

  // functional equation: numerator coefficients satisfy a_{2g-k} = q^{g-k} a_k
  REQUIRE(zeta.numerator.size() == 3);
  CHECK(std::abs(zeta.numerator[2] - 5.0 * zeta.numerator[0]) < 1e-9);
}

TEST_CASE("genus 0 zeta and large-l exactness") {
  auto p1 = projective_line(2, 1);
  auto zeta = zeta_from_counts(p1);
  CHECK(zeta.alphas.empty());
  CHECK(extended_count(zeta, 53) == (std::uint64_t(1) << 53) + 1);  // beyond double precision
  // zeta(P^1/F_q, 1/2) = 1/((1-q^{-1/2})(1-q^{1/2}))
  const double expected = 1.0 / ((1.0 - std::pow(2.0, -0.5)) * (1.0 - std::sqrt(2.0)));
  CHECK(zeta.value_at_half() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("compensated half-line product converges to sqrt2 (sqrt q - 1)|zeta(1/2)|") {
  auto p1 = projective_line(2, 40);
  const double limit = theorem2_limit(p1);
  CHECK(limit == doctest::Approx(2.0 * (std::sqrt(2.0) + 1.0)).epsilon(1e-12));
  CHECK(std::abs(theorem2_partial(p1, 40) / limit - 1.0) < 0.05);
  CHECK(std::abs(theorem2_partial(p1, 40) / limit - 1.0) <
        std::abs(theorem2_partial(p1, 10) / limit - 1.0));

  // a positive-genus curve
  auto curve = count_hyperelliptic(fq_parse("5:1,1,0,1"), 2);
  const double lim_c = theorem2_limit(curve);
  CHECK(std::abs(theorem2_partial(curve, 20) / lim_c - 1.0) < 0.05);
}

TEST_CASE("q-integral identity is exact") {
  for (int q : {2, 3, 5}) {
    for (int n : {1, 5, 17, 30}) {
      auto j = jackson_q_integral(q, n);
      CHECK(std::abs(j.lhs - j.rhs) <= 1e-12 * std::abs(j.lhs));
    }
  }
}

TEST_CASE("residue and log-power product ratio") {
  auto p1 = projective_line(2, 1);
  // Res_{s=1} zeta(P^1/F_q, s) = (1/log q) * 1/(1-1/q)
  CHECK(zeta_residue(p1) == doctest::Approx(1.0 / (std::log(2.0) * 0.5)).epsilon(1e-12));
  auto p1_40 = projective_line(2, 40);
  const double r40 = theorem3_partial(p1_40, 40);
  const double r20 = theorem3_partial(p1_40, 20);
  CHECK(std::abs(r40 - 1.0) < 0.05);
  CHECK(std::abs(r40 - 1.0) < std::abs(r20 - 1.0));
}

TEST_CASE("higher-dimensional residue from explicit root data") {
  // a scheme with zeta = 1/((1-q^{-s})(1-q^{2-s})): beta = {1}, no alphas
  CurveData s2;
  s2.q = 3;
  s2.dim = 2;
  s2.betas = {cd(1.0, 0.0)};
  const double expected = (1.0 / std::log(3.0)) / (1.0 - 1.0 / 9.0);
  CHECK(zeta_residue(s2) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("counts file round trip") {
  auto data = count_hyperelliptic(fq_parse("5:1,1,0,1"), 3);
  std::stringstream ss;
  write_counts(ss, data);
  auto back = read_counts(ss);
  CHECK(back.q == data.q);
  CHECK(back.dim == data.dim);
  CHECK(back.genus == data.genus);
  CHECK(back.counts == data.counts);

  std::stringstream bad("l=1 count=9\n");
  CHECK_THROWS(read_counts(bad));  // no q= header
}
