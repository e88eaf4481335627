#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace eulerx {

/// All primes <= limit, ascending.  Immutable once built; safe for
/// concurrent reads.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;
};

/// Sieve of Eratosthenes up to x.  Tables are cached per process, so
/// repeated scans over the same range reuse one sieve.
std::shared_ptr<const PrimeTable> primes_up_to(std::uint64_t x);

/// p_n with 1-based indexing: nth_prime(1) == 2.
std::uint64_t nth_prime(std::uint64_t n);

/// pi(x)
std::uint64_t prime_count(std::uint64_t x);

}  // namespace eulerx
