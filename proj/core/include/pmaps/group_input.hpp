#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pmaps/group.hpp"
#include "pmaps/presentation.hpp"
#include "pmaps/todd_coxeter.hpp"

namespace pmaps {

struct RealizeOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_cosets = kDefaultMaxCosets;
};

/// A group file turned into a concrete permutation group.
struct RealizedGroup {
  std::shared_ptr<const FiniteGroup> group;
  /// Element for each declared symbol, parallel to GroupFile::symbols.
  std::vector<Elem> symbols;
  /// Cosets enumerated (presentation mode only, else 0).
  std::size_t coset_count = 0;
};

/// Presentations go through coset enumeration over the trivial subgroup,
/// permutations are used as given (degree = largest point), matrices act on
/// nonzero vectors.
RealizedGroup realize(const GroupFile& file, const RealizeOptions& options = {});

/// Evaluates a word with symbol i standing for symbols[i].
Elem evaluate(const FiniteGroup& g, std::span<const Elem> symbols, const Word& w);

}  // namespace pmaps
