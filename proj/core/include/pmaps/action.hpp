#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmaps/permutation.hpp"

namespace pmaps {

bool is_transitive(std::size_t degree, std::span<const Permutation> gens);

/// Finest block system containing {0, b}, as a class label per point.
std::vector<Point> minimal_block_partition(std::size_t degree,
                                           std::span<const Permutation> gens,
                                           Point b);

/// True iff the group generated by `gens` has no block system other than
/// the trivial ones. Throws ContractViolation for intransitive input.
bool is_primitive(std::size_t degree, std::span<const Permutation> gens);

}  // namespace pmaps
