#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "eulerx/fqpoly.hpp"

namespace eulerx {

/// Dirichlet character of (F_q[T]/(f))^x, extended by zero off the
/// coprime residues.  Values are exact roots of unity e^{2 pi i k/order};
/// residues are indexed by their integer code (fq_encode).
class FFCharacter {
 public:
  FFCharacter(PolyFq conductor, std::vector<long long> exponent, long long exponent_den);

  int q() const { return conductor_.q; }
  const PolyFq& conductor() const { return conductor_; }
  std::uint32_t order() const { return order_; }
  bool trivial() const { return order_ == 1; }
  bool quadratic() const { return order_ == 2; }

  /// chi(h); zero when gcd(h, f) != 1.
  std::complex<double> operator()(const PolyFq& h) const;
  long long exponent_at(const PolyFq& h) const;  // -1 when chi(h) = 0

  FFCharacter power(std::uint64_t k) const;

 private:
  PolyFq conductor_;
  std::uint32_t order_;
  std::vector<long long> exponent_;  // indexed by residue code, size q^{deg f}
};

/// The unique character extending a generator assignment on
/// (F_q[T]/(f))^x; throws on inconsistent values or non-generating sets.
FFCharacter ff_character(const PolyFq& f,
                         const std::vector<std::pair<PolyFq, long long>>& generator_exponents,
                         long long exponent_den);

/// Size of (F_q[T]/(f))^x by direct count.
std::uint64_t ff_unit_group_order(const PolyFq& f);

/// A generator-of-maximal-order search; returns a residue of maximal
/// multiplicative order mod f together with that order.
std::pair<PolyFq, std::uint64_t> ff_max_order_element(const PolyFq& f);

struct FFLPolynomial {
  /// L(u) = sum_d coeffs[d] u^d in u = q^{-s}; coeffs[0] = 1.
  std::vector<std::complex<double>> coeffs;
  /// Inverse roots lambda_j with L(u) = prod_j (1 - lambda_j u).
  std::vector<std::complex<double>> roots;

  std::complex<double> value(std::complex<double> s, int q) const;
};

/// Exact coefficient computation c_d = sum over monic h of degree d of
/// chi(h), for d up to deg f; trailing zeros trimmed, inverse roots
/// extracted numerically.
FFLPolynomial ff_l_polynomial(const FFCharacter& chi);

/// S[j][d] = sum over monic irreducibles h of degree d of chi^j(h), for
/// j = 0..order-1 and d = 1..n_max, computed from the logarithmic
/// derivative of the L-polynomials of the powers of chi (no enumeration).
std::vector<std::vector<std::complex<double>>> irreducible_character_sums(
    const FFCharacter& chi, int n_max);

/// Partial Euler product over monic irreducibles of degree <= n,
/// log-space accumulation in (degree, lex) order.
std::complex<double> ff_partial_product(const FFCharacter& chi,
                                        std::complex<double> s, int n);

/// Same product via explicit irreducible enumeration (cross-check path;
/// feasible for small q^n only).
std::complex<double> ff_partial_product_enumerated(const FFCharacter& chi,
                                                   std::complex<double> s, int n);

struct FFDrhReport {
  std::complex<double> l_value;
  std::complex<double> target;  // includes the sqrt(2) factor when it applies
  bool sqrt2_branch = false;
  std::vector<double> deviations;  // dev(n) = |E_n/target - 1|, n = 1..n_max
  bool decreasing_tail = false;    // dev(n_max) < dev(n_max/2)
};

/// Convergence report for the boundary value at s = 1/2 + it.
FFDrhReport verify_ff_drh(const FFCharacter& chi, double t, int n_max);

/// sum over monic irreducibles with deg h < n of q^{-deg h}, from
/// irreducible counts (grows like log n).
double ff_mertens_sum(int q, int n);

}  // namespace eulerx
