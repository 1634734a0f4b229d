#pragma once

#include "pmaps/group.hpp"
#include "pmaps/hom.hpp"

namespace pmaps {

struct QuotientGroup {
  /// Permutation group on the right cosets of the kernel.
  FiniteGroup group;
  /// Canonical projection; its kernel is the normal subgroup.
  GroupHom projection;
};

/// G/N acting on the right cosets of N. Throws ContractViolation unless N is
/// normal in G.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

}  // namespace pmaps
