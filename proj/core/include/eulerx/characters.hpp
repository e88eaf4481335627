#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eulerx {

/// Exact root of unity e^{2 pi i num/den}.
struct RootOfUnity {
  long long num = 0;
  long long den = 1;
};

/// A Dirichlet character mod N.  Values are stored as exact
/// root-of-unity exponents (chi(r) = e^{2 pi i k / order} with k =
/// exponent[r], or -1 for chi(r) = 0) and materialized to complex
/// doubles on construction.  Immutable after construction.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint32_t modulus, std::vector<long long> exponent,
                     long long exponent_den, std::string label = "");

  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return order_; }
  int parity() const { return parity_; }  // chi(-1) = (-1)^parity
  std::uint32_t conductor() const { return conductor_; }
  bool primitive() const { return conductor_ == modulus_; }
  bool trivial() const { return order_ == 1; }
  const std::string& label() const { return label_; }

  std::complex<double> operator()(std::uint64_t n) const {
    return table_[n % modulus_];
  }
  /// Exponent k with chi(n) = e^{2 pi i k/order}, or -1 when chi(n)=0.
  long long exponent_at(std::uint64_t n) const { return exponent_[n % modulus_]; }

  bool is_real() const { return order_ <= 2; }
  DirichletCharacter squared() const;
  DirichletCharacter conjugate() const;

 private:
  std::uint32_t modulus_;
  std::uint32_t order_;
  std::uint32_t conductor_;
  int parity_;
  std::string label_;
  std::vector<long long> exponent_;  // size modulus, normalized to order_
  std::vector<std::complex<double>> table_;
};

/// chi^2 trivial and chi nontrivial.
bool is_quadratic(const DirichletCharacter& chi);

/// Kronecker symbol (a/n) extended to all integers n >= 0.
int kronecker_symbol(long long a, std::uint64_t n);

/// d = 1 counts as (trivially) fundamental; 0 does not.
bool is_fundamental_discriminant(long long d);

/// The real character n -> (d/n) mod |d| for a fundamental discriminant d.
DirichletCharacter kronecker_character(long long d);

/// The unique character mod N extending the generator assignment; throws
/// on inconsistent values or if the given residues do not generate
/// (Z/N)^x.
DirichletCharacter character_mod(
    std::uint32_t N, const std::vector<std::pair<std::uint32_t, RootOfUnity>>& generator_values,
    std::string label = "");

/// Frequently used small-modulus characters.
DirichletCharacter chi_3();
DirichletCharacter chi_7a();  // chi(3) = e^{i pi/3}, order 6
DirichletCharacter chi_7b();  // chi(3) = -1, quadratic

/// All phi(N) characters mod N (CRT decomposition of (Z/N)^x).
std::vector<DirichletCharacter> character_group(std::uint32_t N);

/// CLI selection syntax: "d:-4", "mod:3", "mod:7:a", "mod:7:b",
/// "mod:N:g=k/m,..." (value e^{2 pi i k/m} at generator g).
DirichletCharacter parse_character(const std::string& spec);

}  // namespace eulerx
