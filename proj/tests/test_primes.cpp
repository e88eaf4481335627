#include <doctest.h>

#include "eulerx/primes.hpp"

using namespace eulerx;

namespace {

// trial-division oracle, independent of the sieve
bool is_prime_slow(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("sieve agrees with trial division up to 3000") {
  auto table = primes_up_to(3000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    if (is_prime_slow(n)) {
      REQUIRE(idx < table->primes.size());
      CHECK(table->primes[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == table->primes.size());
}

TEST_CASE("sieve covers the requested limit exactly") {
  CHECK(primes_up_to(10)->primes.back() == 7);
  CHECK(primes_up_to(11)->primes.back() == 11);
  CHECK(primes_up_to(2)->primes == std::vector<std::uint32_t>{2});
  CHECK(primes_up_to(1)->primes.empty());
}

TEST_CASE("nth_prime spot values") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(10) == 29);
  CHECK(nth_prime(25) == 97);
  CHECK(nth_prime(100) == 541);
  CHECK(nth_prime(1000) == 7919);
  CHECK(nth_prime(10000) == 104729);
}

TEST_CASE("prime counting spot values") {
  CHECK(prime_count(10) == 4);
  CHECK(prime_count(100) == 25);
  CHECK(prime_count(1000000) == 78498);
}
