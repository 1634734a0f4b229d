#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pmaps/census.hpp"
#include "pmaps/group.hpp"
#include "pmaps/group_input.hpp"

namespace fixtures {

std::string corpus_path(const std::string& name);
std::string read_file(const std::string& path);

struct CorpusMap {
  pmaps::GroupFile file;
  pmaps::RealizedGroup realized;
  pmaps::AnyMap map;

  const pmaps::FiniteGroup& group() const { return *realized.group; }
  pmaps::Elem symbol(const std::string& name) const;
  const pmaps::OrientedMap& oriented() const { return std::get<pmaps::OrientedMap>(map); }
  const pmaps::FlaggedMap& flagged() const { return std::get<pmaps::FlaggedMap>(map); }
};

/// Loads corpus/<name>.grp and builds the map called <name>.
CorpusMap load(const std::string& name);

/// Shared group from permutations in 1-based cycle notation, e.g.
/// group_of(4, {"(1 2 3 4)", "(1 2)"}).
std::shared_ptr<const pmaps::FiniteGroup> group_of(std::size_t degree,
                                                   const std::vector<std::string>& gens);

pmaps::Elem elem(const pmaps::FiniteGroup& g, const std::string& cycles);

struct SeedGroup {
  std::string name;
  std::size_t degree;
  std::vector<pmaps::Permutation> gens;
};

/// Cyclic, dihedral, S4, A4, Q8, elementary abelian groups, A5 and direct
/// products of pairs of small ones, all of order <= max_order.
std::vector<SeedGroup> seed_groups(std::size_t max_order);

/// The same generators as an oracle group, plus the translation of every
/// library element to its oracle index.
struct Mirror {
  oracle::PermGroup group;
  std::vector<int> to_oracle;
};
Mirror mirror(const pmaps::FiniteGroup& g);

oracle::ElemSet to_oracle_set(const Mirror& m, const pmaps::Subgroup& h);

}  // namespace fixtures
