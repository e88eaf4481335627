#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulerx {

/// Polynomial over a prime field F_q; coefficients ascending, no
/// trailing zeros (the zero polynomial has an empty list).
struct PolyFq {
  int q = 2;
  std::vector<int> c;

  int degree() const { return int(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  bool monic() const { return !c.empty() && c.back() == 1; }
  int leading() const { return c.empty() ? 0 : c.back(); }
  void trim();

  bool operator==(const PolyFq&) const = default;
};

PolyFq fq_poly(int q, std::vector<int> coeffs);  // normalizes residues, trims
PolyFq fq_zero(int q);
PolyFq fq_one(int q);
PolyFq fq_x(int q);  // the monomial T

PolyFq fq_add(const PolyFq& a, const PolyFq& b);
PolyFq fq_sub(const PolyFq& a, const PolyFq& b);
PolyFq fq_mul(const PolyFq& a, const PolyFq& b);
/// quotient/remainder; throws on division by zero polynomial.
std::pair<PolyFq, PolyFq> fq_divmod(const PolyFq& a, const PolyFq& b);
PolyFq fq_mod(const PolyFq& a, const PolyFq& b);
PolyFq fq_gcd(const PolyFq& a, const PolyFq& b);  // monic
PolyFq fq_powmod(const PolyFq& base, std::uint64_t e, const PolyFq& mod);
PolyFq fq_derivative(const PolyFq& a);
PolyFq fq_make_monic(const PolyFq& a);

/// Integer code of a polynomial: sum c_i q^i (dense enumeration order).
std::uint64_t fq_encode(const PolyFq& a);
PolyFq fq_decode(int q, std::uint64_t code, int degree_hint = -1);

/// Serialization "q:c0,c1,...,cd".
std::string fq_to_string(const PolyFq& a);
PolyFq fq_parse(const std::string& s);

bool fq_irreducible(const PolyFq& a);

/// All monic irreducibles of degree exactly d, lexicographic by
/// ascending coefficient tuple.  Count matches (1/d) sum_{e|d} mu(e) q^{d/e}.
std::vector<PolyFq> irreducibles_of_degree(int q, int d);

/// Number of monic irreducibles of degree d (necklace formula).
std::uint64_t irreducible_count(int q, int d);

}  // namespace eulerx
