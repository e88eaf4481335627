#include "eulerx/loggamma.hpp"

#include <stdexcept>

namespace eulerx {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// B_{2j} / (2j (2j-1)) for j = 1..10
constexpr double kStirling[] = {
    1.0 / 12,
    -1.0 / 360,
    1.0 / 1260,
    -1.0 / 1680,
    1.0 / 1188,
    -691.0 / 360360,
    1.0 / 156,
    -3617.0 / 122400,
    43867.0 / 244188,
    -174611.0 / 125400,
};

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() <= 0.0)
    throw std::invalid_argument("log_gamma: only Re(z) > 0 supported");
  // Shift into the Stirling region; each log is principal and each
  // shifted argument stays in the right half plane, so the result is
  // analytic there.
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  std::complex<double> out = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
  const std::complex<double> z2 = z * z;
  std::complex<double> zp = z;
  for (double c : kStirling) {
    out += c / zp;
    zp *= z2;
  }
  return out + shift;
}

}  // namespace eulerx
