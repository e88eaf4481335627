#pragma once

#include <complex>
#include <string>
#include <vector>

namespace eulerx {

/// Uniform t-grid with attached values.  cutoff_label names the Euler
/// product cutoff the series belongs to ("7919", "inf", ...).
template <class T>
struct Grid {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<T> values;
  std::string cutoff_label;

  double t_at(std::size_t i) const { return t0 + dt * double(i); }
  std::size_t size() const { return values.size(); }
};

using GridSeries = Grid<double>;
using ComplexGrid = Grid<std::complex<double>>;

/// The t sample points of a uniform grid [t0, t0 + dt*(n-1)].
std::vector<double> uniform_grid(double t0, double t1, double dt);

}  // namespace eulerx
