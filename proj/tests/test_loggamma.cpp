#include <doctest.h>

#include <cmath>
#include <complex>

#include "eulerx/loggamma.hpp"

using namespace eulerx;
using cd = std::complex<double>;

TEST_CASE("log_gamma known real values") {
  CHECK(std::abs(log_gamma(cd(1.0, 0.0))) < 1e-13);
  CHECK(std::abs(log_gamma(cd(2.0, 0.0))) < 1e-13);
  CHECK(std::abs(log_gamma(cd(5.0, 0.0)).real() - std::log(24.0)) < 1e-12);
  CHECK(std::abs(log_gamma(cd(0.5, 0.0)).real() - 0.5 * std::log(M_PI)) < 1e-12);
  // Gamma(1.5) = sqrt(pi)/2
  CHECK(std::abs(log_gamma(cd(1.5, 0.0)).real() - std::log(std::sqrt(M_PI) / 2.0)) < 1e-12);
}

TEST_CASE("recurrence log Gamma(z+1) = log Gamma(z) + log z") {
  for (double re : {0.25, 0.5, 1.0, 3.7}) {
    for (double im : {-20.0, -2.3, 0.0, 0.9, 14.0}) {
      const cd z(re, im);
      const cd lhs = log_gamma(z + 1.0);
      const cd rhs = log_gamma(z) + std::log(z);
      CHECK(std::abs(lhs - rhs) < 1e-11);
    }
  }
}

TEST_CASE("|Gamma(1/2+it)|^2 = pi / cosh(pi t)") {
  for (double t : {0.1, 0.5, 2.0, 8.0, 25.0}) {
    const double lg2 = 2.0 * log_gamma(cd(0.5, t)).real();
    CHECK(lg2 == doctest::Approx(std::log(M_PI / std::cosh(M_PI * t))).epsilon(1e-10));
  }
}

TEST_CASE("imaginary part is branch-continuous along vertical lines") {
  for (double re : {0.25, 0.75}) {
    double prev = log_gamma(cd(re, 0.0)).imag();
    for (double t = 0.05; t <= 40.0; t += 0.05) {
      const double cur = log_gamma(cd(re, t)).imag();
      CHECK(std::abs(cur - prev) < 0.5);  // no 2 pi jumps
      prev = cur;
    }
  }
}

TEST_CASE("conjugate symmetry") {
  for (double t : {0.3, 4.2, 17.0}) {
    const cd a = log_gamma(cd(0.7, t));
    const cd b = log_gamma(cd(0.7, -t));
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
  }
}
