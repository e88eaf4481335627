#include "eulerx/polyroots.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerx {

std::vector<std::complex<double>> poly_roots(
    const std::vector<std::complex<double>>& coeffs) {
  using cd = std::complex<double>;
  std::vector<cd> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  const int d = int(c.size()) - 1;
  const cd lead = c[d];
  for (auto& x : c) x /= lead;

  auto eval = [&](cd z) {
    cd v = 0.0;
    for (int i = d; i >= 0; --i) v = v * z + c[i];
    return v;
  };

  // Initial guesses on a non-symmetric circle.
  std::vector<cd> r(d);
  for (int i = 0; i < d; ++i)
    r[i] = std::polar(0.4 + 0.9 * std::pow(std::abs(c[0]), 1.0 / d),
                      2.0 * 3.14159265358979324 * (i + 0.25) / d);

  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < d; ++i) {
      cd denom = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= (r[i] - r[j]);
      const cd delta = eval(r[i]) / denom;
      r[i] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    if (max_step < 1e-14) break;
  }
  return r;
}

}  // namespace eulerx
