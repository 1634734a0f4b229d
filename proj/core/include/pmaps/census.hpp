#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "pmaps/algmap.hpp"
#include "pmaps/classify.hpp"

namespace pmaps {

inline constexpr std::size_t kDefaultCensusMaxOrder = 2000;

struct CensusOptions {
  std::size_t max_order = kDefaultCensusMaxOrder;
  unsigned threads = 1;
};

using AnyMap = std::variant<OrientedMap, FlaggedMap>;

/// One isomorphism class of maps on the group. `map` carries the
/// lexicographically least generator tuple of its class.
struct CensusEntry {
  AnyMap map;
  MapReport report;
  std::optional<PMapClassification> classification;
  /// Number of valid tuples in the class.
  std::size_t class_size = 0;

  std::vector<Elem> tuple() const;
  bool degenerate() const;
};

/// All (r, l) with l an involution, r != 1 and <r, l> = G, up to map
/// isomorphism, ordered by canonical tuple. ResourceError when |G| exceeds
/// the bound.
std::vector<CensusEntry> enumerate_oriented(std::shared_ptr<const FiniteGroup> g,
                                            const CensusOptions& options = {});

/// All (t, r, l) of involutions with tl = lt and <t, r, l> = G, up to map
/// isomorphism. Entries with l = t carry the l_equals_t tag.
std::vector<CensusEntry> enumerate_flagged(std::shared_ptr<const FiniteGroup> g,
                                           const CensusOptions& options = {});

/// Attaches a classification to every entry with a prime-power vertex
/// count. TheoremViolation propagates.
void census_classify(std::vector<CensusEntry>& entries, unsigned threads = 1);

}  // namespace pmaps
