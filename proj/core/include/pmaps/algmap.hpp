#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "pmaps/group.hpp"

namespace pmaps {

/// Collapsed generators. Only quotient maps (and the l == t census case)
/// carry these.
struct Degeneracy {
  bool l_trivial = false;
  bool l_equals_t = false;
  bool r_trivial = false;
  bool t_trivial = false;

  bool any() const noexcept {
    return l_trivial || l_equals_t || r_trivial || t_trivial;
  }
  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

/// Orientably-regular map M(G; r, l): arcs are the elements of G, r rotates
/// arcs around their vertex and the involution l reverses them.
class OrientedMap {
 public:
  /// Throws ContractViolation unless l^2 = 1 and <r, l> = G. Trivial r or l
  /// is accepted only with `allow_degenerate`.
  OrientedMap(std::shared_ptr<const FiniteGroup> group, Elem r, Elem l,
              bool allow_degenerate = false);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept {
    return group_;
  }
  Elem r() const noexcept { return r_; }
  Elem l() const noexcept { return l_; }
  std::vector<Elem> tuple() const { return {r_, l_}; }
  const Degeneracy& degeneracy() const noexcept { return degeneracy_; }
  bool degenerate() const noexcept { return degeneracy_.any(); }

  /// The same map with the opposite orientation, (r^-1, l).
  OrientedMap mirror() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  Elem r_;
  Elem l_;
  Degeneracy degeneracy_;
};

/// Regular map M(G; t, r, l): flags are the elements of G and t, r, l are
/// involutions with tl = lt generating G.
class FlaggedMap {
 public:
  /// Throws ContractViolation when the involution, commuting or generation
  /// conditions fail. l == t is always accepted and tagged; trivial
  /// generators need `allow_degenerate`.
  FlaggedMap(std::shared_ptr<const FiniteGroup> group, Elem t, Elem r, Elem l,
             bool allow_degenerate = false);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept {
    return group_;
  }
  Elem t() const noexcept { return t_; }
  Elem r() const noexcept { return r_; }
  Elem l() const noexcept { return l_; }
  std::vector<Elem> tuple() const { return {t_, r_, l_}; }
  const Degeneracy& degeneracy() const noexcept { return degeneracy_; }
  bool degenerate() const noexcept { return degeneracy_.any(); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  Elem t_;
  Elem r_;
  Elem l_;
  Degeneracy degeneracy_;
};

struct VefCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  friend bool operator==(const VefCounts&, const VefCounts&) = default;
};

enum class GenusKind { orientable_genus, crosscap_number, degenerate };

std::string_view to_string(GenusKind kind);

struct MapReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long long euler = 0;
  bool orientable = false;
  GenusKind genus_kind = GenusKind::orientable_genus;
  long long genus = 0;
  bool simple_graph = false;
  /// Only meaningful for oriented maps.
  std::optional<bool> reflexible;
  std::size_t valency = 0;
  friend bool operator==(const MapReport&, const MapReport&) = default;
};

/// Stabiliser of the base vertex: <r> for oriented maps, <t, r> for flagged.
Subgroup vertex_stabilizer(const OrientedMap& m);
Subgroup vertex_stabilizer(const FlaggedMap& m);

VefCounts vef_counts(const OrientedMap& m);
VefCounts vef_counts(const FlaggedMap& m);

/// <tr, rl>, of index 1 or 2.
Subgroup even_word_subgroup(const FlaggedMap& m);
bool is_orientable(const FlaggedMap& m);

bool is_reflexible(const OrientedMap& m);

/// Maps may live on different groups; an isomorphism carrying one
/// generator tuple to the other is searched directly.
bool maps_isomorphic(const OrientedMap& a, const OrientedMap& b);
bool maps_isomorphic(const FlaggedMap& a, const FlaggedMap& b);

/// No loops or multiple edges: <r> meets <r>^l trivially (oriented), or
/// <t, r> meets <t, r>^l in <t> (flagged). ContractViolation when degenerate.
bool simple_graph(const OrientedMap& m);
bool simple_graph(const FlaggedMap& m);

MapReport report(const OrientedMap& m);
MapReport report(const FlaggedMap& m);

/// Projection of the map onto G/N. Collapsed generators are tagged.
/// ContractViolation unless N is normal.
OrientedMap quotient_map(const OrientedMap& m, const Subgroup& n);
FlaggedMap quotient_map(const FlaggedMap& m, const Subgroup& n);

/// The orientation-preserving part: the map on <tr, rl> with rotation tr and
/// arc reversal tl. Empty for nonorientable or degenerate input.
std::optional<OrientedMap> oriented_of_flagged(const FlaggedMap& m);

/// For a reflexible oriented map on G, the regular map on G : <s> where s
/// is the automorphism r -> r^-1, l -> l. The new group acts on the |G|
/// elements plus two points swapped by t. Empty for chiral or degenerate
/// input.
std::optional<FlaggedMap> flagged_of_reflexible(const OrientedMap& m);

}  // namespace pmaps
