#pragma once

#include <complex>

namespace eulerx {

/// log Gamma(z) for Re(z) > 0, analytic (no 2 pi branch jumps along any
/// path staying in the right half plane).  Stirling series after
/// argument shift.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace eulerx
