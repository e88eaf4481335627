#include "eulerx/lfunc.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerx/hurwitz.hpp"
#include "eulerx/loggamma.hpp"

namespace eulerx {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

using cd = std::complex<double>;

// Phase phi with e^{-i phi} e^{i theta(t)} L(1/2+it) real for all t
// (functional-equation phase, estimated numerically mod pi).
double rotation_phase(const DirichletCharacter& chi) {
  for (double t : {0.31, 0.77, 1.23, 1.91, 2.47}) {
    const cd z = std::polar(1.0, theta_chi(t, chi)) * l_value(cd(0.5, t), chi);
    if (std::abs(z) > 1e-6) {
      double phi = std::arg(z);
      if (phi < 0) phi += kPi;  // mod pi
      return phi;
    }
  }
  throw std::runtime_error("rotation_phase: |L| tiny at every probe point");
}

}  // namespace

std::vector<double> uniform_grid(double t0, double t1, double dt) {
  if (dt <= 0) throw std::invalid_argument("uniform_grid: dt must be positive");
  std::vector<double> g;
  const std::size_t n = std::size_t(std::floor((t1 - t0) / dt + 0.5)) + 1;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.push_back(t0 + dt * double(i));
  return g;
}

std::complex<double> l_value(std::complex<double> s, const DirichletCharacter& chi) {
  const std::uint32_t N = chi.modulus();
  if (s == cd(1.0, 0.0)) {
    if (chi.trivial())
      throw std::invalid_argument("l_value: pole of the trivial character at s = 1");
    // poles of the individual Hurwitz terms cancel: L(1) = -(1/N) sum chi(a) psi(a/N)
    cd sum = 0.0;
    for (std::uint32_t a = 1; a <= N; ++a) {
      const cd v = chi(a);
      if (v == cd(0.0)) continue;
      sum -= v * digamma(double(a) / double(N));
    }
    return sum / double(N);
  }
  cd sum = 0.0;
  for (std::uint32_t a = 1; a <= N; ++a) {
    const cd v = chi(a);
    if (v == cd(0.0)) continue;
    sum += v * hurwitz_zeta(s, double(a) / double(N));
  }
  return std::exp(-s * std::log(double(N))) * sum;
}

double theta_chi(double t, const DirichletCharacter& chi) {
  if (!chi.primitive())
    throw std::invalid_argument("theta_chi: character must be primitive");
  const double a = chi.parity();
  const cd lg = log_gamma(cd((0.5 + a) / 2.0, t / 2.0));
  return lg.imag() - (t / 2.0) * std::log(kPi / double(chi.modulus()));
}

ZeroList find_zeros(const DirichletCharacter& chi, double t_max, double tolerance) {
  if (t_max <= 0) throw std::invalid_argument("find_zeros: t_max must be positive");
  if (tolerance <= 0.0 || tolerance > 1e-2)
    throw std::invalid_argument("find_zeros: tolerance must be in (0, 1e-2]");
  const double phi = rotation_phase(chi);
  auto W = [&](double t) {
    const cd z = std::polar(1.0, theta_chi(t, chi) - phi) * l_value(cd(0.5, t), chi);
    return z.real();
  };
  auto absL = [&](double t) { return std::abs(l_value(cd(0.5, t), chi)); };

  ZeroList out;
  out.tolerance = tolerance;
  const double step = 0.01;
  double t_prev = step, w_prev = W(t_prev);
  for (double t = 2 * step; t <= t_max + 1e-12; t += step) {
    const double w = W(t);
    if (w_prev == 0.0 || w * w_prev < 0.0) {
      // bisect the bracket
      double lo = t_prev, hi = t, wlo = w_prev;
      for (int i = 0; i < 100 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi), wm = W(mid);
        if (wm == 0.0 || wm * wlo < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          wlo = wm;
        }
      }
      const double t0 = 0.5 * (lo + hi);
      if (absL(t0) < out.tolerance) {
        bool confirmed = true;
        if (!chi.is_real()) {
          // winding-number confirmation around 1/2 + i t0
          const double r = 5e-4;
          double prev_arg = 0.0, total = 0.0;
          for (int k = 0; k <= 64; ++k) {
            const double ang = 2.0 * kPi * double(k) / 64.0;
            const cd s = cd(0.5 + r * std::cos(ang), t0 + r * std::sin(ang));
            const double a = std::arg(l_value(s, chi));
            if (k > 0) {
              double d = a - prev_arg;
              while (d > kPi) d -= 2 * kPi;
              while (d < -kPi) d += 2 * kPi;
              total += d;
            }
            prev_arg = a;
          }
          confirmed = std::abs(total / (2 * kPi) - 1.0) < 0.2;
        }
        if (confirmed)
          out.zeros.push_back(t0);
        else
          out.unresolved.push_back({t_prev, t});
      } else {
        out.unresolved.push_back({t_prev, t});
      }
    }
    t_prev = t;
    w_prev = w;
  }
  return out;
}

double im_log_l_tracked(double t, const DirichletCharacter& chi) {
  // Seed at sigma = 2: the termwise Euler-factor logs sum to < 0.46 in
  // absolute value, so the principal argument is already the right
  // branch there.
  double arg = std::arg(l_value(cd(2.0, t), chi));
  double sigma = 2.0;
  double step = 0.05;
  while (sigma > 0.5) {
    const double next = std::max(0.5, sigma - step);
    const double raw = std::arg(l_value(cd(next, t), chi));
    const double k = std::floor((arg - raw) / (2 * kPi) + 0.5);
    const double unwrapped = raw + 2 * kPi * k;
    if (std::abs(unwrapped - arg) > 0.8) {
      step *= 0.5;
      if (step < 1e-6)
        throw std::runtime_error("im_log_l_tracked: branch tracking failed at t = " +
                                 std::to_string(t));
      continue;
    }
    arg = unwrapped;
    sigma = next;
    if (step < 0.05) step *= 2.0;
  }
  return arg;
}

GridSeries arg_l_continuous(const std::vector<double>& t_grid,
                            const DirichletCharacter& chi) {
  GridSeries g;
  if (t_grid.empty()) return g;
  g.t0 = t_grid.front();
  g.dt = t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0;
  g.cutoff_label = "inf";
  g.values.reserve(t_grid.size());
  for (double t : t_grid) g.values.push_back(im_log_l_tracked(t, chi));
  return g;
}

}  // namespace eulerx
