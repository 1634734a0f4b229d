#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmaps/group.hpp"
#include "pmaps/presentation.hpp"

namespace pmaps {

inline constexpr std::size_t kDefaultMaxCosets = 200'000;

/// A closed coset table. Coset 0 is the subgroup coset; columns are
/// 2*g for generator g and 2*g+1 for its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t num_generators, std::vector<std::int32_t> entries);

  std::size_t num_generators() const noexcept { return ngens_; }
  std::size_t num_cosets() const noexcept {
    return ngens_ ? entries_.size() / (2 * ngens_) : 1;
  }
  std::int32_t operator()(std::size_t coset, std::size_t column) const {
    return entries_[coset * 2 * ngens_ + column];
  }

  /// Every entry defined and each generator column a permutation inverse to
  /// its partner column.
  bool is_closed() const;

  /// Action of each generator on the cosets.
  std::vector<Permutation> permutations() const;

 private:
  std::size_t ngens_;
  std::vector<std::int32_t> entries_;
};

/// Coset enumeration (HLT strategy) of the subgroup generated by
/// `subgroup_words`. Throws ResourceError once more than `max_cosets` cosets
/// have been defined.
CosetTable todd_coxeter(const Presentation& presentation,
                        std::span<const Word> subgroup_words,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Group generated by the generator permutations of a closed table.
FiniteGroup perms_from_table(const CosetTable& table,
                             std::size_t max_order = kDefaultMaxOrder);

}  // namespace pmaps
