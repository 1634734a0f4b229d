#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pmaps/group.hpp"

namespace pmaps {

/// A homomorphism between two FiniteGroups, stored as the full image table
/// over the source elements. The groups themselves are not referenced.
struct GroupHom {
  /// Image of each tuple element the hom was extended from.
  std::vector<Elem> gen_images;
  /// images[x] for every source element x.
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }

  bool is_injective(std::size_t target_order) const;
  bool is_surjective(std::size_t target_order) const;
  /// Source elements mapped to the identity.
  std::vector<Elem> kernel() const;
};

/// Extends generators(source)[i] -> gen_images[i] to a homomorphism by
/// propagating along the Cayley graph of `source`. Returns nothing when the
/// assignment is inconsistent.
std::optional<GroupHom> hom_extend(const FiniteGroup& source,
                                   const FiniteGroup& target,
                                   std::span<const Elem> gen_images);

/// Same as hom_extend but for an arbitrary tuple of source elements, which
/// must generate `source` (ContractViolation otherwise).
std::optional<GroupHom> extend_tuple(const FiniteGroup& source,
                                     std::span<const Elem> src_tuple,
                                     const FiniteGroup& target,
                                     std::span<const Elem> dst_tuple);

/// Whether src_tuple[i] -> dst_tuple[i] extends to an isomorphism onto
/// `target`. Both tuples must generate their groups.
bool isomorphism_exists(const FiniteGroup& source,
                        std::span<const Elem> src_tuple,
                        const FiniteGroup& target,
                        std::span<const Elem> dst_tuple);

inline bool automorphism_exists(const FiniteGroup& g,
                                std::span<const Elem> src_tuple,
                                std::span<const Elem> dst_tuple) {
  return isomorphism_exists(g, src_tuple, g, dst_tuple);
}

/// Size of the conjugacy class of every element.
std::vector<std::uint32_t> conjugacy_class_sizes(const FiniteGroup& g);

}  // namespace pmaps
