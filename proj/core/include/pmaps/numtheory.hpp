#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pmaps {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of `p` dividing `n` (n > 0).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// (p, k) with n == p^k and k >= 1, or nothing.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n);

bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace pmaps
