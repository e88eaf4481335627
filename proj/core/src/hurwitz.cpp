#include "eulerx/hurwitz.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace eulerx {
namespace {

// B_{2j} / (2j)! for j = 1..15 (through B_30)
constexpr double kBernFact[] = {
    8.3333333333333333333e-02,   // B2/2!
    -1.3888888888888888889e-03,  // B4/4!
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523340e-19,
    3.5347070396294674718e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
};

std::atomic<int> g_em_terms{15};

}  // namespace

void set_euler_maclaurin_terms(int terms) {
  if (terms < 5 || terms > 15)
    throw std::invalid_argument("set_euler_maclaurin_terms: terms must be in [5, 15]");
  g_em_terms.store(terms);
}

int euler_maclaurin_terms() { return g_em_terms.load(); }

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (a <= 0.0 || a > 1.0)
    throw std::invalid_argument("hurwitz_zeta: a must be in (0, 1]");
  if (s == std::complex<double>(1.0, 0.0))
    throw std::invalid_argument("hurwitz_zeta: pole at s = 1");

  const int terms = g_em_terms.load();
  const int M = std::max(15, int(std::ceil(std::abs(s.imag()))));
  std::complex<double> sum = 0.0;
  for (int n = 0; n < M; ++n) sum += std::exp(-s * std::log(n + a));

  const double w = M + a;
  const std::complex<double> lw = std::log(w);
  const std::complex<double> w_ms = std::exp(-s * lw);  // w^{-s}
  sum += w_ms * w / (s - 1.0);                          // w^{1-s}/(s-1)
  sum += 0.5 * w_ms;

  // sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * w^{-s-2j+1}
  std::complex<double> poch = s;               // (s)_{2j-1}, starts at j=1
  std::complex<double> wpow = w_ms / w;        // w^{-s-1}
  const double w2 = w * w;
  for (int j = 0; j < terms; ++j) {
    sum += kBernFact[j] * poch * wpow;
    poch *= (s + double(2 * j + 1)) * (s + double(2 * j + 2));
    wpow /= w2;
  }
  return sum;
}

double digamma(double x) {
  if (x <= 0.0) throw std::invalid_argument("digamma: x must be positive");
  double result = 0.0;
  while (x < 8.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // log x - 1/(2x) - sum_j B_{2j}/(2j) x^{-2j}
  static constexpr double kB2jOver2j[] = {
      1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12,
  };
  result += std::log(x) - 0.5 / x;
  const double x2 = 1.0 / (x * x);
  double p = x2;
  for (double c : kB2jOver2j) {
    result -= c * p;
    p *= x2;
  }
  return result;
}

}  // namespace eulerx
