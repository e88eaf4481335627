#include "eulerx/fqpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerx {
namespace {

void check_same_field(const PolyFq& a, const PolyFq& b) {
  if (a.q != b.q) throw std::invalid_argument("polynomials over different fields");
}

int inv_mod(int a, int q) {
  a %= q;
  if (a < 0) a += q;
  for (int x = 1; x < q; ++x)
    if ((a * x) % q == 1) return x;
  throw std::invalid_argument("inv_mod: not invertible");
}

bool is_prime_int(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

void PolyFq::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyFq fq_poly(int q, std::vector<int> coeffs) {
  if (!is_prime_int(q)) throw std::invalid_argument("fq_poly: q must be prime");
  PolyFq p{q, std::move(coeffs)};
  for (int& x : p.c) {
    x %= q;
    if (x < 0) x += q;
  }
  p.trim();
  return p;
}

PolyFq fq_zero(int q) { return fq_poly(q, {}); }
PolyFq fq_one(int q) { return fq_poly(q, {1}); }
PolyFq fq_x(int q) { return fq_poly(q, {0, 1}); }

PolyFq fq_add(const PolyFq& a, const PolyFq& b) {
  check_same_field(a, b);
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return fq_poly(a.q, std::move(c));
}

PolyFq fq_sub(const PolyFq& a, const PolyFq& b) {
  check_same_field(a, b);
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return fq_poly(a.q, std::move(c));
}

PolyFq fq_mul(const PolyFq& a, const PolyFq& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return fq_zero(a.q);
  std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = int((c[i + j] + (long long)a.c[i] * b.c[j]) % a.q);
  return fq_poly(a.q, std::move(c));
}

std::pair<PolyFq, PolyFq> fq_divmod(const PolyFq& a, const PolyFq& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("fq_divmod: division by zero polynomial");
  const int q = a.q;
  std::vector<int> rem = a.c;
  std::vector<int> quot(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, 0);
  const int lb_inv = inv_mod(b.leading(), q);
  for (int i = int(rem.size()) - 1; i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    const int f = int(((long long)rem[i] * lb_inv) % q);
    quot[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] =
          int((((long long)rem[i - b.degree() + j] - (long long)f * b.c[j]) % q + q) % q);
  }
  return {fq_poly(q, std::move(quot)), fq_poly(q, std::move(rem))};
}

PolyFq fq_mod(const PolyFq& a, const PolyFq& b) { return fq_divmod(a, b).second; }

PolyFq fq_make_monic(const PolyFq& a) {
  if (a.is_zero()) return a;
  const int f = inv_mod(a.leading(), a.q);
  std::vector<int> c = a.c;
  for (int& x : c) x = int(((long long)x * f) % a.q);
  return fq_poly(a.q, std::move(c));
}

PolyFq fq_gcd(const PolyFq& a, const PolyFq& b) {
  check_same_field(a, b);
  PolyFq x = a, y = b;
  while (!y.is_zero()) {
    PolyFq r = fq_mod(x, y);
    x = y;
    y = r;
  }
  return fq_make_monic(x);
}

PolyFq fq_powmod(const PolyFq& base, std::uint64_t e, const PolyFq& mod) {
  PolyFq result = fq_mod(fq_one(base.q), mod);
  PolyFq b = fq_mod(base, mod);
  while (e) {
    if (e & 1) result = fq_mod(fq_mul(result, b), mod);
    b = fq_mod(fq_mul(b, b), mod);
    e >>= 1;
  }
  return result;
}

PolyFq fq_derivative(const PolyFq& a) {
  std::vector<int> c;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    c.push_back(int(((long long)a.c[i] * i) % a.q));
  return fq_poly(a.q, std::move(c));
}

std::uint64_t fq_encode(const PolyFq& a) {
  std::uint64_t code = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) code = code * a.q + a.c[i];
  return code;
}

PolyFq fq_decode(int q, std::uint64_t code, int degree_hint) {
  std::vector<int> c;
  while (code) {
    c.push_back(int(code % q));
    code /= q;
  }
  if (degree_hint >= 0) c.resize(degree_hint + 1, 0);
  (void)degree_hint;
  PolyFq p{q, std::move(c)};
  p.trim();
  return p;
}

std::string fq_to_string(const PolyFq& a) {
  std::string s = std::to_string(a.q) + ":";
  if (a.is_zero()) return s + "0";
  for (std::size_t i = 0; i < a.c.size(); ++i)
    s += (i ? "," : "") + std::to_string(a.c[i]);
  return s;
}

PolyFq fq_parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("fq_parse: expected 'q:c0,c1,...'");
  const int q = std::stoi(s.substr(0, colon));
  std::vector<int> c;
  std::size_t pos = colon + 1;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    c.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return fq_poly(q, std::move(c));
}

bool fq_irreducible(const PolyFq& a) {
  const int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  // Rabin: T^{q^d} = T mod a, and gcd(T^{q^{d/r}} - T, a) = 1 for prime r | d.
  const PolyFq x = fq_x(a.q);
  auto x_qpow = [&](int e) {
    // T^{q^e} mod a by repeated q-th powering
    PolyFq r = fq_mod(x, a);
    for (int i = 0; i < e; ++i) r = fq_powmod(r, std::uint64_t(a.q), a);
    return r;
  };
  if (!(x_qpow(d) == fq_mod(x, a))) return false;
  for (int r = 2; r <= d; ++r) {
    if (d % r != 0) continue;
    bool r_prime = true;
    for (int k = 2; k * k <= r; ++k)
      if (r % k == 0) r_prime = false;
    if (!r_prime) continue;
    const PolyFq g = fq_gcd(fq_sub(x_qpow(d / r), fq_mod(x, a)), a);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<PolyFq> irreducibles_of_degree(int q, int d) {
  if (d < 1) throw std::invalid_argument("irreducibles_of_degree: d >= 1 required");
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= std::uint64_t(q);
    if (total > (std::uint64_t(1) << 26))
      throw std::invalid_argument("irreducibles_of_degree: enumeration too large");
  }
  std::vector<PolyFq> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    PolyFq p = fq_decode(q, code);
    p.c.resize(d + 1, 0);
    p.c[d] = 1;  // monic
    if (fq_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t irreducible_count(int q, int d) {
  auto mu = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    if (n > 1) result = -result;
    return result;
  };
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long qpow = 1;
    for (int i = 0; i < d / e; ++i) qpow *= q;
    sum += mu(e) * qpow;
  }
  return std::uint64_t(sum / d);
}

}  // namespace eulerx
