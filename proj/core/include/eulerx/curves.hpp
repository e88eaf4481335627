#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eulerx/fqpoly.hpp"

namespace eulerx {

/// Point counts of a variety over F_q: counts[l-1] = |X(F_{q^l})|.
struct CurveData {
  std::uint64_t q = 2;
  int dim = 1;
  int genus = 0;
  std::vector<std::uint64_t> counts;
  /// Optional explicit zeta root data for dim > 1 (|alpha|, |beta| <
  /// q^dim); when present it overrides count-based recovery.
  std::vector<std::complex<double>> alphas, betas;
};

/// Zeta numerator/denominator data of a smooth projective curve:
/// zeta(X, s) = P(u) / ((1-u)(1-qu)), u = q^{-s},
/// P(u) = prod_j (1 - alpha_j u)(1 - conj(alpha_j) u).
struct CurveZeta {
  std::uint64_t q = 2;
  int genus = 0;
  std::vector<std::complex<double>> numerator;  // P coefficients, degree 2g
  std::vector<std::complex<double>> alphas;     // all 2g roots, |alpha| = sqrt(q)
  std::complex<double> value(std::complex<double> s) const;
  double value_at_half() const;  // signed zeta(X, 1/2)
};

/// Closed points of degree d: b_d = (1/d) sum_{e|d} mu(e) |X(F_{q^{d/e}})|.
/// Throws if the counts are inconsistent (non-integer b_d).
std::uint64_t closed_point_count(const CurveData& data, int d);

/// Recover the zeta numerator from point counts via the Newton-identity
/// recursion on the power sums q^l + 1 - |X(F_{q^l})|; coefficients
/// g+1..2g follow from the functional equation P(u) = q^g u^{2g} P(1/(qu)).
CurveZeta zeta_from_counts(const CurveData& data);

/// |X(F_{q^l})| for arbitrary l, from the zeta roots once recovered.
std::uint64_t extended_count(const CurveZeta& zeta, int l);

/// Point counts of the smooth projective model of y^2 = f(x) over
/// F_{q^l}, l = 1..l_max, by direct enumeration with quadratic-character
/// evaluation in the extension field.  Requires odd q and squarefree f.
CurveData count_hyperelliptic(const PolyFq& f, int l_max);

/// prod_{N(x) <= q^n} (1 - N(x)^{-1/2})^{-1} * exp(-sum_{l<=n} q^{l/2}/l);
/// converges to sqrt(2) (sqrt(q) - 1) |zeta(X, 1/2)|.
double theorem2_partial(const CurveData& data, int n);

/// The limit value sqrt(2) (sqrt(q) - 1) |zeta(X, 1/2)|.
double theorem2_limit(const CurveData& data);

/// Both sides of the q-integral identity
/// sum_{l<=n} q^{l/2}/l = (log q/(1-1/q)) int_1^{q^n} d_q(u)/(sqrt(u) log u).
struct JacksonIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};
JacksonIdentity jackson_q_integral(std::uint64_t q, int n);

/// Residue of zeta(X, s) at s = dim(X):
/// (1/log q) prod_i (1 - alpha_i q^{-dim}) / prod_j (1 - beta_j q^{-dim}).
double zeta_residue(const CurveData& data);

/// Ratio of prod_{N(x) <= q^n} (1 - N(x)^{-dim})^{-1} to
/// Res * e^gamma * log(q^n); tends to 1.
double theorem3_partial(const CurveData& data, int n);

/// P^1 over F_q (counts q^l + 1), prefilled to l_max.
CurveData projective_line(std::uint64_t q, int l_max);

/// Counts file: header "q=<q> dim=<d> genus=<g>", then "l=<l> count=<N>"
/// lines; optional "alpha=<re>,<im>" / "beta=<re>,<im>" lines for
/// higher-dimensional schemes.
CurveData read_counts(std::istream& is);
void write_counts(std::ostream& os, const CurveData& data);

}  // namespace eulerx
