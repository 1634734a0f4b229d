#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pmaps/group.hpp"

namespace pmaps {

/// Row-major 2x2 matrix [[a, b], [c, d]] over the integers mod p.
using Mat2 = std::array<long long, 4>;

/// Permutation of the p^2 - 1 nonzero row vectors of GF(p)^2 under v -> vM.
/// Vector (x, y) is point x + p*y - 1, so matrix products map to
/// permutation products in the same order.
Permutation matrix_permutation(std::uint64_t p, const Mat2& m);

/// Group generated by the given matrices in their action on nonzero
/// vectors. Throws ContractViolation for a non-prime modulus or a singular
/// matrix.
FiniteGroup matrix_group(std::uint64_t p, std::span<const Mat2> matrices,
                         std::size_t max_order = kDefaultMaxOrder);

}  // namespace pmaps
