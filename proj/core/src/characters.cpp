#include "eulerx/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace eulerx {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool squarefree(long long m) {
  m = std::llabs(m);
  for (long long d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

// Jacobi symbol (a/n) for odd n > 0, any integer a.
int jacobi(long long a, std::uint64_t n) {
  a %= (long long)n;
  if (a < 0) a += (long long)n;
  std::uint64_t u = (std::uint64_t)a, v = n;
  int sign = 1;
  while (u != 0) {
    while (u % 2 == 0) {
      u /= 2;
      if (v % 8 == 3 || v % 8 == 5) sign = -sign;
    }
    std::swap(u, v);
    if (u % 4 == 3 && v % 4 == 3) sign = -sign;
    u %= v;
  }
  return v == 1 ? sign : 0;
}

}  // namespace

int kronecker_symbol(long long a, std::uint64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    if (v % 2 == 1) {
      const long long m8 = ((a % 8) + 8) % 8;
      result = (m8 == 1 || m8 == 7) ? 1 : -1;
    }
  }
  return result * jacobi(a, n);
}

bool is_fundamental_discriminant(long long d) {
  if (d == 0) return false;
  const long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return squarefree(d);
  if (m4 != 0) return false;
  const long long m = d / 4;
  const long long mm4 = ((m % 4) + 4) % 4;
  return (mm4 == 2 || mm4 == 3) && squarefree(m);
}

DirichletCharacter::DirichletCharacter(std::uint32_t modulus,
                                       std::vector<long long> exponent,
                                       long long exponent_den, std::string label)
    : modulus_(modulus), label_(std::move(label)) {
  if (modulus == 0 || exponent.size() != modulus)
    throw std::invalid_argument("DirichletCharacter: bad exponent table");
  // Normalize the denominator to the character order.
  long long g = exponent_den;
  for (std::uint32_t r = 0; r < modulus; ++r) {
    if (exponent[r] < 0) continue;
    g = std::gcd(g, exponent[r] % exponent_den);
  }
  order_ = std::uint32_t(exponent_den / g);
  exponent_.assign(modulus, -1);
  for (std::uint32_t r = 0; r < modulus; ++r)
    if (exponent[r] >= 0) exponent_[r] = (exponent[r] / g) % order_;

  table_.resize(modulus);
  for (std::uint32_t r = 0; r < modulus; ++r) {
    if (exponent_[r] < 0)
      table_[r] = 0.0;
    else
      table_[r] = std::polar(1.0, kTwoPi * double(exponent_[r]) / double(order_));
  }

  // Sanity: multiplicativity on the stored exponents.
  for (std::uint32_t a = 1; a < std::min<std::uint32_t>(modulus, 64); ++a)
    for (std::uint32_t b = a; b < std::min<std::uint32_t>(modulus, 64); ++b) {
      const long long ea = exponent_[a % modulus], eb = exponent_[b % modulus];
      const long long eab = exponent_[(std::uint64_t(a) * b) % modulus];
      if (ea < 0 || eb < 0) {
        if (eab >= 0) throw std::invalid_argument("character table not multiplicative");
      } else if (eab != (ea + eb) % order_) {
        throw std::invalid_argument("character table not multiplicative");
      }
    }

  parity_ = 0;
  if (modulus > 1) {
    const long long em1 = exponent_[modulus - 1];
    if (em1 < 0) throw std::invalid_argument("chi(-1) must be nonzero");
    if (em1 != 0) {
      if (2 * em1 != order_) throw std::invalid_argument("chi(-1) must be +-1");
      parity_ = 1;
    }
  }

  // Conductor: smallest M | N with chi = 1 on {n coprime to N, n = 1 mod M}.
  conductor_ = modulus_;
  for (std::uint32_t M = 1; M < modulus_; ++M) {
    if (modulus_ % M != 0) continue;
    bool induced = true;
    for (std::uint32_t n = 1; n < modulus_ && induced; n += M)
      if (gcd_u(n, modulus_) == 1 && exponent_[n] != 0) induced = false;
    if (induced) {
      conductor_ = M;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::squared() const {
  std::vector<long long> e(modulus_, -1);
  for (std::uint32_t r = 0; r < modulus_; ++r)
    if (exponent_[r] >= 0) e[r] = (2 * exponent_[r]) % order_;
  return DirichletCharacter(modulus_, e, order_, label_.empty() ? "" : label_ + "^2");
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long long> e(modulus_, -1);
  for (std::uint32_t r = 0; r < modulus_; ++r)
    if (exponent_[r] >= 0) e[r] = (order_ - exponent_[r]) % order_;
  return DirichletCharacter(modulus_, e, order_, label_.empty() ? "" : "conj " + label_);
}

bool is_quadratic(const DirichletCharacter& chi) { return chi.order() == 2; }

DirichletCharacter kronecker_character(long long d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("kronecker_character: " + std::to_string(d) +
                                " is not a fundamental discriminant");
  const std::uint32_t N = std::uint32_t(std::llabs(d));
  std::vector<long long> e(N, -1);
  for (std::uint32_t r = 0; r < N; ++r) {
    const int k = kronecker_symbol(d, r);
    if (k == 1) e[r] = 0;
    else if (k == -1) e[r] = 1;
  }
  if (N == 1) e[0] = 0;
  return DirichletCharacter(N, e, 2, "d:" + std::to_string(d));
}

DirichletCharacter character_mod(
    std::uint32_t N, const std::vector<std::pair<std::uint32_t, RootOfUnity>>& generator_values,
    std::string label) {
  if (N == 0) throw std::invalid_argument("character_mod: N must be positive");
  long long den = 1;
  for (const auto& [g, v] : generator_values) {
    if (v.den <= 0) throw std::invalid_argument("character_mod: root of unity needs den > 0");
    if (gcd_u(g % N, N) != 1)
      throw std::invalid_argument("character_mod: generator not coprime to modulus");
    den = std::lcm(den, v.den);
  }

  std::vector<long long> e(N, -1);
  e[1 % N] = 0;
  std::queue<std::uint32_t> q;
  q.push(1 % N);
  while (!q.empty()) {
    const std::uint32_t r = q.front();
    q.pop();
    for (const auto& [g, v] : generator_values) {
      const std::uint32_t r2 = std::uint32_t((std::uint64_t(r) * (g % N)) % N);
      const long long e2 = ((e[r] + v.num * (den / v.den)) % den + den) % den;
      if (e[r2] < 0) {
        e[r2] = e2;
        q.push(r2);
      } else if (e[r2] != e2) {
        throw std::invalid_argument("character_mod: inconsistent generator assignment");
      }
    }
  }
  for (std::uint32_t r = 1; r < N; ++r)
    if (gcd_u(r, N) == 1 && e[r] < 0)
      throw std::invalid_argument("character_mod: given residues do not generate (Z/N)^x");
  if (N == 1) e[0] = 0;
  return DirichletCharacter(N, e, den, std::move(label));
}

DirichletCharacter chi_3() { return character_mod(3, {{2, {1, 2}}}, "chi_3"); }
DirichletCharacter chi_7a() { return character_mod(7, {{3, {1, 6}}}, "chi_7a"); }
DirichletCharacter chi_7b() { return character_mod(7, {{3, {1, 2}}}, "chi_7b"); }

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
  std::uint64_t o = 1, x = a % m;
  while (x != 1 % m) {
    x = (x * (a % m)) % m;
    if (++o > m) throw std::logic_error("order_mod: not a unit");
  }
  return o;
}

}  // namespace

std::vector<DirichletCharacter> character_group(std::uint32_t N) {
  if (N > 1000000) throw std::invalid_argument("character_group: modulus too large");
  // CRT generators of (Z/N)^x with their orders.
  struct Gen {
    std::uint32_t g;
    std::uint64_t ord;
  };
  std::vector<Gen> gens;
  std::uint32_t n = N;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (p^e, p)
  for (std::uint32_t p = 2; p * std::uint64_t(p) <= n; ++p)
    if (n % p == 0) {
      std::uint32_t pe = 1;
      while (n % p == 0) {
        n /= p;
        pe *= p;
      }
      factors.push_back({pe, p});
    }
  if (n > 1) factors.push_back({n, n});

  auto crt_lift = [&](std::uint64_t g, std::uint32_t pe) {
    // x = g mod pe, x = 1 mod N/pe
    const std::uint64_t rest = N / pe;
    for (std::uint64_t x = g % pe; x < N; x += pe)
      if (x % rest == 1 % rest && gcd_u(x, N) == 1) return std::uint32_t(x);
    throw std::logic_error("crt_lift failed");
  };

  for (auto [pe, p] : factors) {
    if (p == 2) {
      if (pe == 2) continue;  // trivial group
      if (pe == 4) {
        gens.push_back({crt_lift(3, 4), 2});
      } else {
        gens.push_back({crt_lift(pe - 1, pe), 2});
        gens.push_back({crt_lift(3, pe), order_mod(3, pe)});
      }
    } else {
      const std::uint64_t phi = pe / p * (p - 1);
      std::uint64_t g = 2;
      while (gcd_u(g, pe) != 1 || order_mod(g, pe) != phi) ++g;
      gens.push_back({crt_lift(g, pe), phi});
    }
  }

  std::vector<DirichletCharacter> out;
  std::vector<std::uint64_t> k(gens.size(), 0);
  while (true) {
    std::vector<std::pair<std::uint32_t, RootOfUnity>> assign;
    for (std::size_t i = 0; i < gens.size(); ++i)
      assign.push_back({gens[i].g, {(long long)k[i], (long long)gens[i].ord}});
    out.push_back(character_mod(N, assign));
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++k[i] < gens[i].ord) break;
      k[i] = 0;
    }
    if (i == gens.size()) break;
  }
  if (gens.empty() && out.empty())
    out.push_back(character_mod(N, {}));
  return out;
}

DirichletCharacter parse_character(const std::string& spec) {
  auto fail = [&]() -> DirichletCharacter {
    throw std::invalid_argument("cannot parse character spec '" + spec + "'");
  };
  if (spec.rfind("d:", 0) == 0) return kronecker_character(std::stoll(spec.substr(2)));
  if (spec.rfind("mod:", 0) != 0) return fail();
  const std::string rest = spec.substr(4);
  const auto colon = rest.find(':');
  if (colon == std::string::npos) {
    const std::uint32_t N = std::uint32_t(std::stoul(rest));
    if (N == 3) return chi_3();
    return fail();
  }
  const std::uint32_t N = std::uint32_t(std::stoul(rest.substr(0, colon)));
  const std::string tail = rest.substr(colon + 1);
  if (N == 7 && tail == "a") return chi_7a();
  if (N == 7 && tail == "b") return chi_7b();
  // explicit "g=k/m,..." assignments
  std::vector<std::pair<std::uint32_t, RootOfUnity>> assign;
  std::size_t pos = 0;
  while (pos < tail.size()) {
    auto comma = tail.find(',', pos);
    if (comma == std::string::npos) comma = tail.size();
    const std::string item = tail.substr(pos, comma - pos);
    const auto eq = item.find('=');
    const auto slash = item.find('/');
    if (eq == std::string::npos || slash == std::string::npos || slash < eq) return fail();
    assign.push_back({std::uint32_t(std::stoul(item.substr(0, eq))),
                      {std::stoll(item.substr(eq + 1, slash - eq - 1)),
                       std::stoll(item.substr(slash + 1))}});
    pos = comma + 1;
  }
  if (assign.empty()) return fail();
  return character_mod(N, assign, spec);
}

}  // namespace eulerx
