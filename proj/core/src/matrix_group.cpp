#include "pmaps/matrix_group.hpp"

#include "pmaps/errors.hpp"
#include "pmaps/numtheory.hpp"

namespace pmaps {

namespace {
long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}
}  // namespace

Permutation matrix_permutation(std::uint64_t p, const Mat2& m) {
  if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
  const auto q = static_cast<long long>(p);
  const long long a = mod(m[0], q), b = mod(m[1], q), c = mod(m[2], q),
                  d = mod(m[3], q);
  if (mod(a * d - b * c, q) == 0) throw ContractViolation("singular matrix");
  std::vector<Point> images(static_cast<std::size_t>(q * q - 1));
  for (long long y = 0; y < q; ++y) {
    for (long long x = 0; x < q; ++x) {
      if (x == 0 && y == 0) continue;
      long long nx = mod(x * a + y * c, q);
      long long ny = mod(x * b + y * d, q);
      images[static_cast<std::size_t>(x + q * y - 1)] =
          static_cast<Point>(nx + q * ny - 1);
    }
  }
  return Permutation(std::move(images));
}

FiniteGroup matrix_group(std::uint64_t p, std::span<const Mat2> matrices,
                         std::size_t max_order) {
  std::vector<Permutation> gens;
  for (const auto& m : matrices) gens.push_back(matrix_permutation(p, m));
  if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
  return FiniteGroup::closure(static_cast<std::size_t>(p * p - 1), std::move(gens),
                              max_order);
}

}  // namespace pmaps
