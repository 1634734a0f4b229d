#pragma once

#include <cstdint>

#include "pmaps/group.hpp"

namespace pmaps {

/// One Sylow p-subgroup of `ambient`. Grows a p-subgroup from the identity
/// by adjoining p-elements that normalise it; trivial when p does not
/// divide the order.
Subgroup sylow_p(const FiniteGroup& g, const Subgroup& ambient, std::uint64_t p);
Subgroup sylow_p(const FiniteGroup& g, std::uint64_t p);

/// Largest normal p-subgroup of `ambient`.
Subgroup o_p(const FiniteGroup& g, const Subgroup& ambient, std::uint64_t p);
Subgroup o_p(const FiniteGroup& g, std::uint64_t p);

bool is_p_group(const Subgroup& h, std::uint64_t p);
bool has_normal_sylow(const FiniteGroup& g, const Subgroup& ambient,
                      std::uint64_t p);

Subgroup center(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);

// The remaining operations require a p-group and throw ContractViolation
// otherwise.

/// Nilpotency class via the upper central series; 0 for the trivial group.
unsigned nilpotency_class(const FiniteGroup& g, const Subgroup& p_group,
                          std::uint64_t p);

/// Subgroup generated by the elements x with x^p = 1.
Subgroup omega1(const FiniteGroup& g, const Subgroup& p_group, std::uint64_t p);

/// P' together with all p-th powers; the Frattini subgroup of a p-group.
Subgroup frattini_p(const FiniteGroup& g, const Subgroup& p_group,
                    std::uint64_t p);

/// Frattini = derived = centre, and the centre has order p.
bool is_extraspecial(const FiniteGroup& g, const Subgroup& p_group,
                     std::uint64_t p);

}  // namespace pmaps
