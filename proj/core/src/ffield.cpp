#include "eulerx/ffield.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "eulerx/polyroots.hpp"

namespace eulerx {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
using cd = std::complex<double>;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<PolyFq> residues_mod(const PolyFq& f) {
  const std::uint64_t total = ipow(std::uint64_t(f.q), f.degree());
  std::vector<PolyFq> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) out.push_back(fq_decode(f.q, code));
  return out;
}

// Distinct monic irreducible factors of f (trial division).
std::vector<PolyFq> irreducible_factors(PolyFq f) {
  std::vector<PolyFq> out;
  f = fq_make_monic(f);
  for (int d = 1; d <= f.degree() && f.degree() > 0; ++d) {
    if (f.degree() < 2 * d && f.degree() != d) continue;
    for (const PolyFq& p : irreducibles_of_degree(f.q, d)) {
      if (f.degree() < d) break;
      if (fq_mod(f, p).is_zero()) {
        out.push_back(p);
        while (fq_mod(f, p).is_zero()) f = fq_divmod(f, p).first;
      }
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

}  // namespace

FFCharacter::FFCharacter(PolyFq conductor, std::vector<long long> exponent,
                         long long exponent_den)
    : conductor_(std::move(conductor)) {
  if (!conductor_.monic() || conductor_.degree() < 1)
    throw std::invalid_argument("FFCharacter: conductor must be monic nonconstant");
  const std::uint64_t total = ipow(std::uint64_t(conductor_.q), conductor_.degree());
  if (exponent.size() != total)
    throw std::invalid_argument("FFCharacter: bad exponent table size");
  long long g = exponent_den;
  for (long long e : exponent)
    if (e >= 0) g = std::gcd(g, e % exponent_den);
  order_ = std::uint32_t(exponent_den / g);
  exponent_.assign(total, -1);
  for (std::uint64_t i = 0; i < total; ++i)
    if (exponent[i] >= 0) exponent_[i] = (exponent[i] / g) % order_;
}

long long FFCharacter::exponent_at(const PolyFq& h) const {
  if (h.q != conductor_.q) throw std::invalid_argument("FFCharacter: field mismatch");
  return exponent_[fq_encode(fq_mod(h, conductor_))];
}

std::complex<double> FFCharacter::operator()(const PolyFq& h) const {
  const long long e = exponent_at(h);
  if (e < 0) return 0.0;
  return std::polar(1.0, kTwoPi * double(e) / double(order_));
}

FFCharacter FFCharacter::power(std::uint64_t k) const {
  std::vector<long long> e(exponent_.size(), -1);
  for (std::size_t i = 0; i < exponent_.size(); ++i)
    if (exponent_[i] >= 0) e[i] = (long long)((__int128(exponent_[i]) * k) % order_);
  return FFCharacter(conductor_, e, order_);
}

std::uint64_t ff_unit_group_order(const PolyFq& f) {
  std::uint64_t count = 0;
  for (const PolyFq& r : residues_mod(f))
    if (!r.is_zero() && fq_gcd(r, f).degree() == 0) ++count;
  return count;
}

std::pair<PolyFq, std::uint64_t> ff_max_order_element(const PolyFq& f) {
  std::uint64_t best_ord = 0;
  PolyFq best = fq_one(f.q);
  for (const PolyFq& r : residues_mod(f)) {
    if (r.is_zero() || fq_gcd(r, f).degree() != 0) continue;
    std::uint64_t ord = 1;
    PolyFq x = fq_mod(r, f);
    const PolyFq one = fq_mod(fq_one(f.q), f);
    while (!(x == one)) {
      x = fq_mod(fq_mul(x, r), f);
      ++ord;
    }
    if (ord > best_ord) {
      best_ord = ord;
      best = r;
    }
  }
  return {best, best_ord};
}

FFCharacter ff_character(const PolyFq& f,
                         const std::vector<std::pair<PolyFq, long long>>& generator_exponents,
                         long long exponent_den) {
  if (!f.monic() || f.degree() < 1)
    throw std::invalid_argument("ff_character: conductor must be monic nonconstant");
  if (exponent_den <= 0) throw std::invalid_argument("ff_character: den must be positive");
  const std::uint64_t total = ipow(std::uint64_t(f.q), f.degree());
  std::vector<long long> e(total, -1);
  const PolyFq one = fq_mod(fq_one(f.q), f);
  e[fq_encode(one)] = 0;
  std::queue<PolyFq> q;
  q.push(one);
  while (!q.empty()) {
    const PolyFq r = q.front();
    q.pop();
    const long long er = e[fq_encode(r)];
    for (const auto& [g, eg] : generator_exponents) {
      const PolyFq r2 = fq_mod(fq_mul(r, g), f);
      const long long e2 = ((er + eg) % exponent_den + exponent_den) % exponent_den;
      long long& slot = e[fq_encode(r2)];
      if (slot < 0) {
        slot = e2;
        q.push(r2);
      } else if (slot != e2) {
        throw std::invalid_argument("ff_character: inconsistent generator assignment");
      }
    }
  }
  for (const PolyFq& r : residues_mod(f))
    if (!r.is_zero() && fq_gcd(r, f).degree() == 0 && e[fq_encode(r)] < 0)
      throw std::invalid_argument("ff_character: residues do not generate the unit group");
  return FFCharacter(f, e, exponent_den);
}

std::complex<double> FFLPolynomial::value(std::complex<double> s, int q) const {
  const cd u = std::exp(-s * std::log(double(q)));
  cd v = 0.0;
  for (std::size_t d = coeffs.size(); d-- > 0;) v = v * u + coeffs[d];
  return v;
}

FFLPolynomial ff_l_polynomial(const FFCharacter& chi) {
  if (chi.trivial())
    throw std::invalid_argument("ff_l_polynomial: character must be nontrivial");
  const int q = chi.q();
  const int df = chi.conductor().degree();
  FFLPolynomial L;
  // c_d = sum over monic h of degree d of chi(h), computed exactly for
  // d = 0..deg f; the coefficients vanish from deg f on (each residue
  // class is hit equally often) but we compute and trim rather than
  // assume the bound.
  for (int d = 0; d <= df; ++d) {
    cd c = 0.0;
    const std::uint64_t lower = ipow(std::uint64_t(q), d);
    for (std::uint64_t code = 0; code < lower; ++code) {
      PolyFq h = fq_decode(q, code);
      h.c.resize(d + 1, 0);
      h.c[d] = 1;
      c += chi(h);
    }
    L.coeffs.push_back(c);
  }
  while (L.coeffs.size() > 1 && std::abs(L.coeffs.back()) < 1e-9) L.coeffs.pop_back();
  // L(u) = prod (1 - lambda_j u): inverse roots.
  for (const cd& u0 : poly_roots(L.coeffs)) L.roots.push_back(1.0 / u0);
  return L;
}

std::vector<std::vector<std::complex<double>>> irreducible_character_sums(
    const FFCharacter& chi, int n_max) {
  const int m = int(chi.order());
  const int q = chi.q();

  // T[j][k] = k * [u^k] log L(u, chi^j), k = 1..n_max.
  std::vector<std::vector<cd>> T(m, std::vector<cd>(n_max + 1, 0.0));
  for (int j = 0; j < m; ++j) {
    const FFCharacter psi = chi.power(j);
    if (psi.trivial()) {
      // Euler product over irreducibles coprime to f:
      // (1 - qu)^{-1} * prod_{P | f} (1 - u^{deg P})
      for (int k = 1; k <= n_max; ++k) T[j][k] = std::pow(double(q), k);
      for (const PolyFq& P : irreducible_factors(chi.conductor()))
        for (int k = P.degree(); k <= n_max; k += P.degree()) T[j][k] -= double(P.degree());
    } else {
      const FFLPolynomial L = ff_l_polynomial(psi);
      // power-series log: k l_k = k c_k - sum_{i<k} i l_i c_{k-i}
      std::vector<cd> l(n_max + 1, 0.0);
      auto coeff = [&](int i) -> cd {
        return i < int(L.coeffs.size()) ? L.coeffs[i] : cd(0.0);
      };
      for (int k = 1; k <= n_max; ++k) {
        cd acc = double(k) * coeff(k);
        for (int i = 1; i < k; ++i) acc -= double(i) * l[i] * coeff(k - i);
        l[k] = acc / double(k);
        T[j][k] = double(k) * l[k];
      }
    }
  }

  // T_{chi^j}(k) = sum_{d|k} d S[(j*k/d) mod m][d]; solve upward in k.
  std::vector<std::vector<cd>> S(m, std::vector<cd>(n_max + 1, 0.0));
  for (int k = 1; k <= n_max; ++k)
    for (int j = 0; j < m; ++j) {
      cd acc = T[j][k];
      for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        acc -= double(d) * S[(j * std::uint64_t(k / d)) % m][d];
      }
      S[j][k] = acc / double(k);
    }
  return S;
}

std::complex<double> ff_partial_product(const FFCharacter& chi,
                                        std::complex<double> s, int n) {
  if (n < 0) throw std::invalid_argument("ff_partial_product: n must be >= 0");
  if (n == 0) return 1.0;
  const int q = chi.q();
  const double logq = std::log(double(q));
  const auto S = irreducible_character_sums(chi, n);
  const int m = int(chi.order());

  // log E_n = sum_{d<=n} sum_{k>=1} S_{chi^k}(d) q^{-k d s} / k
  cd log_e = 0.0;
  for (int d = 1; d <= n; ++d) {
    const double sum_bound = std::pow(double(q), d) / double(d);  // |S| <= #irred
    for (int k = 1; k <= 400; ++k) {
      const double mag = sum_bound * std::exp(-double(k) * d * s.real() * logq);
      if (mag < 1e-18 && k > 2) break;
      const cd term = S[k % m][d] * std::exp(-s * double(k) * double(d) * logq) / double(k);
      log_e += term;
    }
  }
  return std::exp(log_e);
}

std::complex<double> ff_partial_product_enumerated(const FFCharacter& chi,
                                                   std::complex<double> s, int n) {
  const int q = chi.q();
  const double logq = std::log(double(q));
  cd log_e = 0.0;
  for (int d = 1; d <= n; ++d)
    for (const PolyFq& h : irreducibles_of_degree(q, d)) {
      const cd v = chi(h);
      if (v == cd(0.0)) continue;
      const cd w = v * std::exp(-s * double(d) * logq);
      if (std::abs(1.0 - w) < 1e-14)
        throw std::domain_error("singular Euler factor at " + fq_to_string(h));
      log_e -= std::log(1.0 - w);
    }
  return std::exp(log_e);
}

FFDrhReport verify_ff_drh(const FFCharacter& chi, double t, int n_max) {
  if (chi.trivial()) throw std::invalid_argument("verify_ff_drh: character must be nontrivial");
  if (n_max < 2) throw std::invalid_argument("verify_ff_drh: n_max must be >= 2");
  const double logq = std::log(double(chi.q()));
  const FFLPolynomial L = ff_l_polynomial(chi);

  FFDrhReport rep;
  const cd s(0.5, t);
  rep.l_value = L.value(s, chi.q());
  if (std::abs(rep.l_value) < 1e-10)
    throw std::domain_error("verify_ff_drh: L vanishes at the requested point");
  // sqrt(2) branch: chi quadratic and t in (pi/log q) Z.  (The log-q
  // lattice, matching the Mertens computation of the half-power terms.)
  const double lattice = t * logq / 3.14159265358979323846;
  rep.sqrt2_branch = chi.quadratic() &&
                     std::abs(lattice - std::round(lattice)) < 1e-9;
  rep.target = rep.sqrt2_branch ? std::sqrt(2.0) * rep.l_value : rep.l_value;

  for (int n = 1; n <= n_max; ++n) {
    const cd e_n = ff_partial_product(chi, s, n);
    rep.deviations.push_back(std::abs(e_n / rep.target - 1.0));
  }
  rep.decreasing_tail = rep.deviations.back() < rep.deviations[n_max / 2 - 1];
  return rep;
}

double ff_mertens_sum(int q, int n) {
  if (n < 1) throw std::invalid_argument("ff_mertens_sum: n must be >= 1");
  double sum = 0.0;
  for (int d = 1; d < n; ++d)
    sum += double(irreducible_count(q, d)) * std::pow(double(q), -d);
  return sum;
}

}  // namespace eulerx
