#include "eulerx/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace eulerx {
namespace {

// Odd-only sieve; one bit per odd integer.
std::vector<std::uint32_t> sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;

  const std::uint64_t n_odd = (limit - 1) / 2;  // odds 3,5,...,<=limit
  std::vector<std::uint64_t> composite((n_odd + 63) / 64, 0);
  auto is_set = [&](std::uint64_t i) {
    return (composite[i >> 6] >> (i & 63)) & 1u;
  };
  auto set = [&](std::uint64_t i) { composite[i >> 6] |= std::uint64_t(1) << (i & 63); };

  for (std::uint64_t i = 0; i < n_odd; ++i) {
    const std::uint64_t p = 2 * i + 3;
    if (p * p > limit) break;
    if (is_set(i)) continue;
    for (std::uint64_t j = (p * p - 3) / 2; j < n_odd; j += p) set(j);
  }
  primes.reserve(n_odd ? std::size_t(1.2 * double(limit) / std::log(double(limit))) : 1);
  for (std::uint64_t i = 0; i < n_odd; ++i)
    if (!is_set(i)) primes.push_back(std::uint32_t(2 * i + 3));
  return primes;
}

std::mutex g_mutex;
std::shared_ptr<const PrimeTable> g_master;  // largest sieve built so far

std::shared_ptr<const PrimeTable> master_at_least(std::uint64_t x) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (!g_master || g_master->limit < x) {
    auto t = std::make_shared<PrimeTable>();
    t->limit = std::max<std::uint64_t>(x, g_master ? 2 * g_master->limit : 1 << 16);
    t->primes = sieve(t->limit);
    g_master = t;
  }
  return g_master;
}

}  // namespace

std::shared_ptr<const PrimeTable> primes_up_to(std::uint64_t x) {
  if (x > std::uint64_t(4e9)) throw std::invalid_argument("primes_up_to: limit too large");
  auto master = master_at_least(x);
  if (master->limit == x) return master;
  auto t = std::make_shared<PrimeTable>();
  t->limit = x;
  auto end = std::upper_bound(master->primes.begin(), master->primes.end(), x);
  t->primes.assign(master->primes.begin(), end);
  return t;
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: n must be >= 1");
  // Rosser-type upper bound, valid for n >= 6; small n handled by slack.
  const double nd = double(n);
  std::uint64_t bound = 16;
  if (n >= 6)
    bound = std::uint64_t(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
  auto t = master_at_least(bound);
  while (t->primes.size() < n) t = master_at_least(t->limit * 2);
  return t->primes[n - 1];
}

std::uint64_t prime_count(std::uint64_t x) {
  auto master = master_at_least(x);
  return std::uint64_t(
      std::upper_bound(master->primes.begin(), master->primes.end(), x) -
      master->primes.begin());
}

}  // namespace eulerx
