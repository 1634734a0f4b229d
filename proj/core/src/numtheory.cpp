#include "pmaps/numtheory.hpp"

namespace pmaps {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    result.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) result.push_back(n);
  return result;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n) {
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n > 1) {
    n /= primes[0];
    ++k;
  }
  return std::make_pair(primes[0], k);
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace pmaps
